"""Sweep harness: evaluate every strategy across a compression-ratio grid.

For each ratio on the grid and each strategy, runs the selection and
scores it (uncertainty directly, similarity against the built-in
verbalizer's recovered text).  The random baseline is averaged over a
number of seeded runs; every run's generator is derived from
(seed, grid index, run index), so results do not depend on scheduling
and grid points may be evaluated in parallel.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import floor, fsum

import numpy as np

from .graph import ProbabilityGraph
from .io import SweepRow
from .metrics import similarity, verbalize
from .selection import STRATEGIES, SelectionConfig, select

#: Slack when deciding how many grid points a (from, to, step) span holds.
_GRID_EPS = 1e-9


@dataclass(frozen=True)
class RunRecord:
    """One individual random-baseline run, for auditing the averages."""

    K: float
    run_index: int
    seed: int
    SU: float
    SS: float
    A: float
    C: float
    theta: float


def ratio_grid(k_from: float, k_to: float, k_step: float) -> list[float]:
    """Grid points k_from + i * k_step, capped at k_to.

    The point count is decided by index arithmetic, not by accumulating
    floats, so 0.1 .. 1.0 by 0.1 is exactly ten points.
    """
    if not 0.0 < k_from <= k_to <= 1.0:
        raise ValueError("need 0 < k_from <= k_to <= 1")
    if k_step <= 0.0:
        raise ValueError("k_step must be positive")
    points = floor((k_to - k_from) / k_step + _GRID_EPS) + 1
    return [min(k_from + i * k_step, k_to) for i in range(points)]


def _derived_seed(seed: int, grid_index: int, run_index: int) -> int:
    return int(
        np.random.SeedSequence([seed, grid_index, run_index]).generate_state(1)[0]
    )


def _evaluate(
    graph: ProbabilityGraph,
    config: SelectionConfig,
    phi: float,
) -> tuple[float, float, float, float, float, int, int]:
    result = select(graph, config)
    report = similarity(graph, result, verbalize(result, graph), phi)
    return (
        report.semantic_uncertainty,
        report.similarity,
        report.accuracy,
        report.completeness,
        report.theta,
        result.quota,
        result.effective_depth,
    )


def _sweep_point(
    graph: ProbabilityGraph,
    grid_index: int,
    ratio: float,
    strategy: str,
    depth: int,
    runs: int,
    seed: int,
    phi: float,
) -> tuple[SweepRow, list[RunRecord]]:
    if strategy != "random":
        su, ss, a, c, theta, quota, eff = _evaluate(
            graph, SelectionConfig(ratio, depth, strategy), phi
        )
        row = SweepRow(ratio, strategy, su, ss, a, c, theta, quota, eff, 1)
        return row, []

    records = []
    for run_index in range(runs):
        run_seed = _derived_seed(seed, grid_index, run_index)
        su, ss, a, c, theta, quota, eff = _evaluate(
            graph, SelectionConfig(ratio, depth, "random", run_seed), phi
        )
        records.append(RunRecord(ratio, run_index, run_seed, su, ss, a, c, theta))

    def mean(values: list[float]) -> float:
        return fsum(values) / len(values)

    row = SweepRow(
        K=ratio,
        strategy="random",
        SU=mean([r.SU for r in records]),
        SS=mean([r.SS for r in records]),
        A=mean([r.A for r in records]),
        C=mean([r.C for r in records]),
        theta=mean([r.theta for r in records]),
        H=quota,
        effective_depth=eff,
        runs_averaged=runs,
    )
    return row, records


def run_sweep(
    graph: ProbabilityGraph,
    k_from: float = 0.1,
    k_to: float = 1.0,
    k_step: float = 0.1,
    depth: int = 2,
    runs: int = 100,
    seed: int = 0,
    phi: float = 0.5,
    jobs: int = 1,
) -> tuple[list[SweepRow], list[RunRecord]]:
    """All strategies across the ratio grid; see the module docstring.

    Returns rows sorted by (strategy, K) and the individual
    random-baseline run records sorted by (K, run index).  Output is
    byte-for-byte independent of ``jobs``.
    """
    if runs < 1:
        raise ValueError("runs must be at least 1")
    grid = ratio_grid(k_from, k_to, k_step)
    tasks = [
        (grid_index, ratio, strategy)
        for grid_index, ratio in enumerate(grid)
        for strategy in STRATEGIES
    ]

    def work(task: tuple[int, float, str]) -> tuple[SweepRow, list[RunRecord]]:
        grid_index, ratio, strategy = task
        return _sweep_point(graph, grid_index, ratio, strategy, depth, runs, seed, phi)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(work, tasks))
    else:
        outcomes = [work(task) for task in tasks]

    rows = sorted((row for row, _ in outcomes), key=lambda r: (r.strategy, r.K))
    records = sorted(
        (record for _, recs in outcomes for record in recs),
        key=lambda r: (r.K, r.run_index),
    )
    return rows, records
