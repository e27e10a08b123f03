"""Spectra, energies and hyperenergetic scans for the circulant graphs G(r, N)."""

__version__ = "0.1.0"

from .asymptotics import (
    AsymptoticReport,
    InternalConsistencyError,
    asymptotic_report,
    ir_closed,
    ir_double_sum,
    ir_quadrature,
    lebesgue_constant,
    sign_change_points,
)
from .energy import (
    EnergyReport,
    Method,
    energy_cycle_closed,
    energy_direct,
    energy_matching_complement_closed,
    energy_r2_closed,
)
from .oracle import (
    JacobiConvergenceError,
    OracleError,
    OracleSizeError,
    adjacency_matrix,
    energy_oracle,
    jacobi_eigenvalues,
)
from .scan import Classification, ScanRecord, classify, convergence_table, scan_range
from .spectrum import (
    DomainError,
    GraphSpec,
    Spectrum,
    dirichlet_kernel,
    eigenvalue,
    full_spectrum,
    partial_cosine_sum,
)
from .trigsum import ArithProgression, cos_arith_sum, sin_arith_sum

__all__ = [
    "ArithProgression",
    "AsymptoticReport",
    "Classification",
    "DomainError",
    "EnergyReport",
    "GraphSpec",
    "InternalConsistencyError",
    "JacobiConvergenceError",
    "Method",
    "OracleError",
    "OracleSizeError",
    "ScanRecord",
    "Spectrum",
    "adjacency_matrix",
    "asymptotic_report",
    "classify",
    "convergence_table",
    "cos_arith_sum",
    "dirichlet_kernel",
    "eigenvalue",
    "energy_cycle_closed",
    "energy_direct",
    "energy_matching_complement_closed",
    "energy_oracle",
    "energy_r2_closed",
    "full_spectrum",
    "ir_closed",
    "ir_double_sum",
    "ir_quadrature",
    "jacobi_eigenvalues",
    "lebesgue_constant",
    "partial_cosine_sum",
    "scan_range",
    "sign_change_points",
    "sin_arith_sum",
]
