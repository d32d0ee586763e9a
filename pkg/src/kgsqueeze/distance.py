"""Central concept and relational distances.

A text usually revolves around one central concept; in the graph that is
the entity filling the most quadruple endpoint slots (the "initial
node").  The relational distance between two entities is the minimum
number of edges between them, ignoring edge direction; it bounds how far
a selected quadruple may stray from the central concept.

Distances are computed over all pairs with the Floyd-Warshall recurrence
on a dense numpy matrix, then projected to the row of the requested
source.  Unreachable entities get the explicit value ``UNREACHABLE``
rather than an error, because selection has to reason about them when
relaxing the depth constraint.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import inf, isinf

import numpy as np

from .graph import Entity, ProbabilityGraph

#: Explicit distance value for entities with no path to the source.
UNREACHABLE = inf


@dataclass(frozen=True)
class DistanceTable:
    """Relational distances from one source entity to every entity.

    ``distance`` maps entity id to a hop count (int) or ``UNREACHABLE``.
    ``distance[source] == 0`` always.
    """

    source: str
    distance: dict[str, int | float]

    def is_reachable(self, entity_id: str) -> bool:
        return not isinf(self.distance[entity_id])

    def max_finite(self) -> int:
        """Largest finite distance in the table (0 if only the source)."""
        return max(
            (d for d in self.distance.values() if not isinf(d)), default=0
        )


def select_initial_node(graph: ProbabilityGraph) -> str:
    """Pick the central concept: the entity with the most occurrences.

    Occurrences are quadruple endpoint slots (head and tail each count).
    Ties go to the entity appearing earlier in the text, i.e. the
    smallest ``first_token_index``; entities without a token index rank
    after those with one, and any remaining tie falls back to
    declaration order in the entity table.
    """
    counts = graph.occurrence_counts()

    def key(pos_entity: tuple[int, Entity]) -> tuple[int, float, int]:
        pos, e = pos_entity
        index = e.first_token_index if e.first_token_index is not None else inf
        return (-counts[e.id], index, pos)

    _, best = min(enumerate(graph.entities), key=key)
    return best.id


def _floyd_warshall(n: int, edges: set[tuple[int, int]]) -> np.ndarray:
    """All-pairs shortest hop counts over an undirected, unweighted graph."""
    dist = np.full((n, n), np.inf)
    np.fill_diagonal(dist, 0.0)
    for u, v in edges:
        dist[u, v] = 1.0
        dist[v, u] = 1.0
    for k in range(n):
        np.minimum(dist, dist[:, k, None] + dist[None, k, :], out=dist)
    return dist


def all_distances(graph: ProbabilityGraph, source: str) -> DistanceTable:
    """Relational distances from ``source`` to every entity in the graph.

    Edges are the quadruples' (head, tail) pairs, undirected and
    unweighted; parallel quadruples between the same pair collapse into
    a single edge.  Entities in no quadruple, and entities in a
    different component, come back ``UNREACHABLE``.
    """
    graph.entity(source)  # raises UnknownEntityError if absent

    index = {e.id: i for i, e in enumerate(graph.entities)}
    edges = {
        (index[q.head], index[q.tail])
        for q in graph.quadruples
    }
    matrix = _floyd_warshall(len(graph.entities), edges)
    row = matrix[index[source]]
    distance: dict[str, int | float] = {
        e.id: (UNREACHABLE if np.isinf(row[i]) else int(row[i]))
        for i, e in enumerate(graph.entities)
    }
    return DistanceTable(source=source, distance=distance)
