"""Linear growth coefficient I_r of the energy of G(r, N) as N -> infinity.

    I_r = (1/pi) * integral_0^pi |u(r, t)| dt,   u(r, t) = D_r(t) - 1

is computed three ways: Gauss-Legendre quadrature on the intervals where ``u``
keeps one sign, the double trigonometric sum obtained by integrating term by
term between consecutive sign changes, and a single finite sum where both
inner sums of the double sum are collapsed with the arithmetic-progression
identities from :mod:`circulant_energy.trigsum`.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from .spectrum import DomainError, dirichlet_kernel_array, partial_cosine_sum_array
from .trigsum import ArithProgression, sin_arith_sum

DEFAULT_NODES = 64
DEDUP_TOL = 1e-12


class InternalConsistencyError(RuntimeError):
    """An :class:`AsymptoticReport` failed its own invariants."""


def _check_r(r: int) -> None:
    if isinstance(r, bool) or int(r) != r or r < 1:
        raise DomainError(f"r must be a positive integer, got {r!r}")


def sign_change_points(r: int) -> list[float]:
    """Zeros of u(r, .) strictly inside (0, pi), ascending.

    ``u`` factors as ``2 cos((r+1)t/2) sin(rt/2) / sin(t/2)``, so the zeros are
    ``(2m+1) pi / (r+1)`` and ``2 m pi / r``. The two families interleave and
    every zero is simple, so the sign alternates starting positive.
    """
    _check_r(r)
    pts = [(2 * m + 1) * math.pi / (r + 1) for m in range(r + 1) if 2 * m + 1 < r + 1]
    pts += [2 * m * math.pi / r for m in range(1, r) if 2 * m < r]
    pts.sort()
    out: list[float] = []
    for p in pts:
        if not out or p - out[-1] > DEDUP_TOL:
            out.append(p)
    return out


@functools.lru_cache(maxsize=None)
def _gauss_legendre(n: int) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(n)


def _piecewise_gauss(f, breaks: list[float], nodes: int) -> float:
    x, w = _gauss_legendre(nodes)
    pieces = []
    for a, b in zip(breaks[:-1], breaks[1:]):
        half = 0.5 * (b - a)
        t = 0.5 * (a + b) + half * x
        pieces.append(half * float(np.dot(w, f(t))))
    return math.fsum(pieces)


def ir_quadrature(r: int, nodes_per_interval: int = DEFAULT_NODES) -> float:
    _check_r(r)
    if nodes_per_interval < 16:
        raise ValueError("nodes_per_interval must be >= 16")
    breaks = [0.0, *sign_change_points(r), math.pi]
    integral = _piecewise_gauss(
        lambda t: np.abs(partial_cosine_sum_array(r, t)), breaks, nodes_per_interval
    )
    return integral / math.pi


def ir_double_sum(r: int) -> float:
    _check_r(r)
    terms = []
    for k in range(1, r + 1):
        for m in range(r // 2 + 1):
            terms.append(
                (
                    math.sin((2 * m + 1) * k * math.pi / (r + 1))
                    - math.sin(2 * m * k * math.pi / r)
                )
                / k
            )
    return 4.0 / math.pi * math.fsum(terms)


def _odd_points_sum(r: int, k: int) -> float:
    """sum_{m=0}^{floor(r/2)} sin((2m+1) k pi / (r+1))."""
    step = 2.0 * k * math.pi / (r + 1)
    return sin_arith_sum(ArithProgression(0.5 * step, step, r // 2))


def _even_points_sum(r: int, k: int) -> float:
    """sum_{m=0}^{floor(r/2)} sin(2 m k pi / r); identically zero when r | k."""
    if k % r == 0:
        return 0.0
    return sin_arith_sum(ArithProgression(0.0, 2.0 * k * math.pi / r, r // 2))


def ir_closed(r: int) -> float:
    _check_r(r)
    return 4.0 / math.pi * math.fsum(
        (_odd_points_sum(r, k) - _even_points_sum(r, k)) / k for k in range(1, r + 1)
    )


def lebesgue_constant(r: int, nodes_per_interval: int = DEFAULT_NODES) -> float:
    """(1/pi) * integral_0^pi |D_r(t)| dt, split at the zeros 2 m pi / (2r+1)."""
    _check_r(r)
    breaks = [0.0, *(2 * m * math.pi / (2 * r + 1) for m in range(1, r + 1)), math.pi]
    integral = _piecewise_gauss(
        lambda t: np.abs(dirichlet_kernel_array(r, t)), breaks, nodes_per_interval
    )
    return integral / math.pi


def log_lower_bound(r: int) -> float:
    return 4.0 * math.log(2 * r) / math.pi**3


@dataclass(frozen=True)
class AsymptoticReport:
    r: int
    ir_quadrature: float
    ir_double_sum: float
    ir_closed: float
    lebesgue: float
    lower_bound_log: float

    @property
    def ir(self) -> float:
        return self.ir_closed

    @property
    def bound_interval(self) -> tuple[float, float]:
        return (self.lebesgue - 1.0, self.lebesgue + 1.0)

    def violations(self, agreement_tol: float = 1e-8) -> list[str]:
        problems = []
        values = (self.ir_quadrature, self.ir_double_sum, self.ir_closed)
        if max(values) - min(values) > agreement_tol:
            problems.append(f"I_r routes disagree: {values}")
        lo, hi = self.bound_interval
        if not lo <= self.ir <= hi:
            problems.append(f"I_r={self.ir} outside [L_r-1, L_r+1]=[{lo}, {hi}]")
        if not self.ir > self.lower_bound_log:
            problems.append(f"I_r={self.ir} not above 4 ln(2r)/pi^3={self.lower_bound_log}")
        if not self.ir > 0:
            problems.append(f"I_r={self.ir} not positive")
        return problems


def asymptotic_report(r: int, nodes_per_interval: int = DEFAULT_NODES) -> AsymptoticReport:
    _check_r(r)
    report = AsymptoticReport(
        r=r,
        ir_quadrature=ir_quadrature(r, nodes_per_interval),
        ir_double_sum=ir_double_sum(r),
        ir_closed=ir_closed(r),
        lebesgue=lebesgue_constant(r, nodes_per_interval),
        lower_bound_log=log_lower_bound(r),
    )
    problems = report.violations()
    if problems:
        raise InternalConsistencyError(f"r={r}: " + "; ".join(problems))
    return report
