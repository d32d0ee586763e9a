"""Exception types raised across the package.

Every failure mode that callers are expected to handle derives from
:class:`KgsqueezeError`, so the command line (and any embedding
application) can catch one base class and map it to a data error.
"""


class KgsqueezeError(Exception):
    """Base class for all kgsqueeze errors."""


class UnknownEntityError(KgsqueezeError):
    """An entity reference cannot be resolved against the entity table,
    or the table itself is invalid (duplicate id, empty surface)."""


class SelfLoopError(KgsqueezeError):
    """A quadruple candidate has identical head and tail."""


class BadDistributionError(KgsqueezeError):
    """A confidence distribution is unusable: a value outside [0, 1], an
    unknown relation label, a total mass outside the accepted band, or
    an invalid relation set."""


class EmptyGraphError(KgsqueezeError):
    """A graph or selection operation received no quadruples to work with."""


class MalformedDocumentError(KgsqueezeError):
    """Input bytes are not a syntactically valid document."""


class SchemaViolationError(KgsqueezeError):
    """A syntactically valid document does not match the expected schema."""


class SelectionMismatchError(KgsqueezeError):
    """A selection document does not correspond to the graph it is applied to."""


class InvalidPhiError(KgsqueezeError):
    """The accuracy/completeness weight phi is outside [0, 1]."""


class MissingSeedError(KgsqueezeError):
    """The random strategy was invoked without a seed."""
