"""Energy of G(r, N): direct eigenvalue sums and exact closed forms."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .spectrum import DomainError, GraphSpec, half_spectrum


class Method(str, enum.Enum):
    DIRECT = "direct"
    CLOSED_R1 = "closed_r1"
    CLOSED_R2 = "closed_r2"
    CLOSED_COMPLETE = "closed_complete"
    CLOSED_MATCHING_COMPLEMENT = "closed_matching_complement"
    ORACLE = "oracle"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class EnergyReport:
    spec: GraphSpec
    energy: float
    method: Method

    @property
    def ratio(self) -> float:
        return self.energy / (self.spec.N - 1)


def _abs_eigen_sum(spec: GraphSpec) -> float:
    # k and N-k give the same eigenvalue: count the interior of the half
    # spectrum twice, k = 0 once, and k = N/2 once when N is even.
    half = np.abs(half_spectrum(spec))
    N = spec.N
    if N % 2 == 0:
        interior, middle = half[1:-1], [half[-1]]
    else:
        interior, middle = half[1:], []
    return math.fsum([half[0], *middle, *(2.0 * interior)])


def energy_direct(spec: GraphSpec) -> EnergyReport:
    return EnergyReport(spec, _abs_eigen_sum(spec), Method.DIRECT)


def energy_cycle_closed(N: int) -> float:
    """Energy of the N-cycle G(1, N)."""
    if N < 3:
        raise DomainError(f"cycle needs N >= 3, got {N}")
    j = 2 * (N // 4) + 1
    return 4.0 * math.sin(math.pi * j / N) / math.sin(math.pi / N)


def energy_r2_closed(N: int) -> float:
    """Energy of G(2, N)."""
    if N < 5:
        raise DomainError(f"G(2, N) needs N >= 5, got {N}")
    j = 2 * (N // 6) + 1
    return 4.0 * (
        math.sin(math.pi * j / N) / math.sin(math.pi / N)
        + math.sin(2.0 * math.pi * j / N) / math.sin(2.0 * math.pi / N)
    )


def energy_matching_complement_closed(r: int) -> float:
    """Energy of G(r, 2r+2), the complete graph K_{2r+2} minus a perfect matching."""
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    return 4.0 * r


def closed_method(spec: GraphSpec) -> Method | None:
    """The closed form the dispatcher would use for ``spec``, or ``None``."""
    r, N = spec.r, spec.N
    if r == 1:
        return Method.CLOSED_R1
    if r == 2:
        return Method.CLOSED_R2
    if N == 2 * r + 1:
        return Method.CLOSED_COMPLETE
    if N == 2 * r + 2:
        return Method.CLOSED_MATCHING_COMPLEMENT
    return None


def energy(spec: GraphSpec) -> EnergyReport:
    """Energy by the cheapest exact method available for ``spec``."""
    method = closed_method(spec)
    if method is Method.CLOSED_R1:
        value = energy_cycle_closed(spec.N)
    elif method is Method.CLOSED_R2:
        value = energy_r2_closed(spec.N)
    elif method is Method.CLOSED_COMPLETE:
        # K_{2r+1}: 2(N - 1) = 4r
        value = 4.0 * spec.r
    elif method is Method.CLOSED_MATCHING_COMPLEMENT:
        value = energy_matching_complement_closed(spec.r)
    else:
        return energy_direct(spec)
    return EnergyReport(spec, value, method)
