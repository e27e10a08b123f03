"""Adjacency spectrum of the circulant graph G(r, N).

G(r, N) has vertices ``0..N-1`` and joins two vertices whenever their
circular distance is between 1 and ``r``. Its eigenvalues are

    lambda_k = u(r, 2 k pi / N),   u(r, t) = 2 * sum_{m=1..r} cos(m t)

and ``u(r, t) + 1`` is the Dirichlet kernel ``sin((r + 1/2) t) / sin(t / 2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .trigsum import DEGENERATE_TOL, ArithProgression, cos_arith_sum, cos_arith_sum_array


class DomainError(ValueError):
    """Raised for (r, N) pairs outside the supported family."""


@dataclass(frozen=True)
class GraphSpec:
    """Identifies G(r, N). Requires ``r >= 1`` and ``N >= 2r + 1``."""

    r: int
    N: int

    def __post_init__(self) -> None:
        if isinstance(self.r, bool) or int(self.r) != self.r or self.r < 1:
            raise DomainError(f"r must be a positive integer, got {self.r!r}")
        if isinstance(self.N, bool) or int(self.N) != self.N or self.N < 2 * self.r + 1:
            raise DomainError(
                f"N must be an integer >= 2r+1 = {2 * self.r + 1}, got {self.N!r}"
            )

    @property
    def degree(self) -> int:
        return 2 * self.r


@dataclass(frozen=True)
class Spectrum:
    spec: GraphSpec
    values: np.ndarray

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]

    def check(self) -> None:
        """Raise ``AssertionError`` if any structural invariant fails."""
        r, N = self.spec.r, self.spec.N
        v = self.values
        assert len(v) == N
        assert v[0] == 2 * r
        assert np.array_equal(v[1:], v[1:][::-1])
        assert abs(math.fsum(v)) <= 1e-8 * N
        assert abs(math.fsum(v * v) - 2 * r * N) <= 1e-8 * r * N
        assert np.all(np.abs(v) <= 2 * r + 1e-9)


def partial_cosine_sum(r: int, theta: float) -> float:
    """u(r, theta) = 2 * sum_{m=1..r} cos(m * theta)."""
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    return 2.0 * cos_arith_sum(ArithProgression(theta, theta, r - 1))


def partial_cosine_sum_array(r: int, theta) -> np.ndarray:
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    theta = np.asarray(theta, dtype=float)
    return 2.0 * cos_arith_sum_array(theta, theta, r - 1)


def dirichlet_kernel(r: int, theta: float) -> float:
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    s = math.sin(0.5 * theta)
    if abs(s) < DEGENERATE_TOL:
        return 2.0 * r + 1.0
    return math.sin((r + 0.5) * theta) / s


def dirichlet_kernel_array(r: int, theta) -> np.ndarray:
    theta = np.asarray(theta, dtype=float)
    s = np.sin(0.5 * theta)
    singular = np.abs(s) < DEGENERATE_TOL
    out = np.sin((r + 0.5) * theta) / np.where(singular, 1.0, s)
    return np.where(singular, 2.0 * r + 1.0, out)


def eigenvalue(spec: GraphSpec, k: int) -> float:
    if not 0 <= k < spec.N:
        raise IndexError(f"eigenvalue index {k} out of range for N={spec.N}")
    if k == 0:
        return float(spec.degree)
    return partial_cosine_sum(spec.r, 2.0 * math.pi * k / spec.N)


def half_spectrum(spec: GraphSpec) -> np.ndarray:
    """Eigenvalues for ``k = 0..floor(N/2)``; the rest follow by ``k -> N - k``."""
    ks = np.arange(spec.N // 2 + 1)
    vals = partial_cosine_sum_array(spec.r, 2.0 * np.pi * ks / spec.N)
    vals[0] = spec.degree
    return vals


def full_spectrum(spec: GraphSpec) -> Spectrum:
    half = half_spectrum(spec)
    N = spec.N
    tail = half[1 : (N + 1) // 2][::-1]
    return Spectrum(spec, np.concatenate([half, tail]))
