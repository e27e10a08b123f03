"""Hyperenergetic classification of G(r, N) and exhaustive scans over N.

A graph on n vertices is hyperenergetic when its energy strictly exceeds
2(n - 1), the energy of K_n. Floating point cannot decide a strict inequality
at equality, so classification is three-way: margins within ``tol`` of zero
are reported as ``boundary`` and counted as non-hyperenergetic.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .asymptotics import ir_closed
from .energy import energy
from .spectrum import DomainError, GraphSpec

DEFAULT_TOL = 1e-6


class Classification(str, enum.Enum):
    HYPERENERGETIC = "hyperenergetic"
    NON_HYPERENERGETIC = "non_hyperenergetic"
    BOUNDARY = "boundary"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ScanRecord:
    spec: GraphSpec
    energy: float
    tol: float

    @property
    def threshold(self) -> float:
        return 2.0 * (self.spec.N - 1)

    @property
    def margin(self) -> float:
        return self.energy - self.threshold

    @property
    def classification(self) -> Classification:
        if self.margin > self.tol:
            return Classification.HYPERENERGETIC
        if abs(self.margin) <= self.tol:
            return Classification.BOUNDARY
        return Classification.NON_HYPERENERGETIC

    @property
    def is_hyperenergetic(self) -> bool:
        return self.classification is Classification.HYPERENERGETIC


@dataclass(frozen=True)
class ScanSummary:
    r: int
    n_min: int
    n_max: int
    tol: float
    hyperenergetic: int
    non_hyperenergetic: int
    boundary: int

    @property
    def total(self) -> int:
        return self.hyperenergetic + self.non_hyperenergetic + self.boundary


def classify(spec: GraphSpec, tol: float = DEFAULT_TOL) -> ScanRecord:
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    return ScanRecord(spec, energy(spec).energy, tol)


def _classify_n(args: tuple[int, int, float]) -> ScanRecord:
    r, N, tol = args
    return classify(GraphSpec(r, N), tol)


def scan_range(
    r: int,
    n_min: int,
    n_max: int,
    tol: float = DEFAULT_TOL,
    workers: int | None = None,
) -> list[ScanRecord]:
    """Classify G(r, N) for every N in [max(n_min, 2r+1), n_max], ascending.

    ``workers > 1`` spreads the work over a process pool; the output is the
    same as a sequential run.
    """
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    start = max(n_min, 2 * r + 1)
    if start > n_max:
        return []
    jobs = [(r, N, tol) for N in range(start, n_max + 1)]
    if workers is None or workers <= 1:
        return [_classify_n(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_classify_n, jobs, chunksize=max(1, len(jobs) // (4 * workers))))


def summarize(
    records: Iterable[ScanRecord], r: int, n_min: int, n_max: int, tol: float = DEFAULT_TOL
) -> ScanSummary:
    counts = {c: 0 for c in Classification}
    for rec in records:
        counts[rec.classification] += 1
    return ScanSummary(
        r=r,
        n_min=n_min,
        n_max=n_max,
        tol=tol,
        hyperenergetic=counts[Classification.HYPERENERGETIC],
        non_hyperenergetic=counts[Classification.NON_HYPERENERGETIC],
        boundary=counts[Classification.BOUNDARY],
    )


def hyperenergetic_ns(records: Iterable[ScanRecord]) -> list[int]:
    return [rec.spec.N for rec in records if rec.is_hyperenergetic]


def convergence_table(r: int, ns: Sequence[int]) -> list[tuple[int, float, float]]:
    """Rows ``(N, E(r,N)/(N-1), E(r,N)/(N-1) - I_r)``."""
    limit = ir_closed(r)
    rows = []
    for N in ns:
        ratio = energy(GraphSpec(r, N)).ratio
        rows.append((N, ratio, ratio - limit))
    return rows
