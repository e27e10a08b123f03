"""Closed-form cosine and sine sums over arithmetic progressions of angles.

For angles ``a_k = a0 + k*d`` with ``k = 0..n``::

    sum cos(a_k) = (sin(a_n + d/2) - sin(a0 - d/2)) / (2 sin(d/2))
    sum sin(a_k) = (cos(a0 - d/2) - cos(a_n + d/2)) / (2 sin(d/2))

When ``|sin(d/2)|`` falls below :data:`DEGENERATE_TOL` the sums are evaluated
term by term instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

DEGENERATE_TOL = 1e-12


@dataclass(frozen=True)
class ArithProgression:
    """Angles ``a0, a0 + d, ..., a0 + n*d`` (``n + 1`` terms)."""

    a0: float
    d: float
    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")
        if not (math.isfinite(self.a0) and math.isfinite(self.d)):
            raise ValueError("a0 and d must be finite")

    @property
    def last(self) -> float:
        return self.a0 + self.n * self.d

    def angles(self) -> np.ndarray:
        return self.a0 + self.d * np.arange(self.n + 1)


def cos_arith_sum(p: ArithProgression) -> float:
    half = 0.5 * p.d
    denom = math.sin(half)
    if abs(denom) < DEGENERATE_TOL:
        return math.fsum(math.cos(p.a0 + k * p.d) for k in range(p.n + 1))
    return (math.sin(p.last + half) - math.sin(p.a0 - half)) / (2.0 * denom)


def sin_arith_sum(p: ArithProgression) -> float:
    half = 0.5 * p.d
    denom = math.sin(half)
    if abs(denom) < DEGENERATE_TOL:
        return math.fsum(math.sin(p.a0 + k * p.d) for k in range(p.n + 1))
    return (math.cos(p.a0 - half) - math.cos(p.last + half)) / (2.0 * denom)


def cos_arith_sum_array(a0, d, n: int) -> np.ndarray:
    """Vectorised :func:`cos_arith_sum` over broadcast arrays ``a0`` and ``d``.

    ``n`` is shared by all progressions. Degenerate entries fall back to the
    direct sum, exactly as in the scalar version.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    a0, d = np.broadcast_arrays(np.asarray(a0, dtype=float), np.asarray(d, dtype=float))
    half = 0.5 * d
    denom = np.sin(half)
    degenerate = np.abs(denom) < DEGENERATE_TOL
    safe = np.where(degenerate, 1.0, denom)
    out = (np.sin(a0 + n * d + half) - np.sin(a0 - half)) / (2.0 * safe)
    if np.any(degenerate):
        a0d, dd = a0[degenerate], d[degenerate]
        ks = np.arange(n + 1)
        out = np.array(out, copy=True)
        out[degenerate] = np.cos(a0d[:, None] + dd[:, None] * ks).sum(axis=1)
    return out
