"""Bound states of a charged particle with a position-dependent mass in a
power-law magnetic field, hbar = 2*m0 = 1.

Closed-form spectra and wavefunctions for three solvable mass profiles,
the field machinery that generates the inverse-power magnetic field, a
generic Nikiforov-Uvarov solver, an independent finite-difference oracle,
and sweep/crossing utilities, all behind one CLI (``pdmag``).
"""

from .errors import (
    BoundStateError,
    BracketingError,
    DomainError,
    GridAccuracyWarning,
    NormalizationError,
    UnphysicalBranchError,
)
from .fields import magnetic_field, shape_function, vector_potential, verify_curl
from .grids import RadialFunction, RadialGrid
from .models import (
    ModelKind,
    effective_potential,
    energy,
    greene_aldrich,
    mass_function,
    model_a_energy,
    model_a_wavefunction,
    model_b_energy,
    model_b_wavefunction,
    model_c_coefficients,
    model_c_energy,
    model_c_wavefunction,
    wavefunction,
)
from .nu import NUCoefficients, NUSolution, nu_quantize
from .oracle import fd_eigenvalues, node_count, oracle_energy, radial_potential, residual
from .params import PhysicalParams, QuantumState, e_tilde, m_tilde
from .sweeps import CrossingPoint, SweepSpec, find_crossings, sweep

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "BoundStateError",
    "BracketingError",
    "CrossingPoint",
    "DomainError",
    "GridAccuracyWarning",
    "ModelKind",
    "NUCoefficients",
    "NUSolution",
    "NormalizationError",
    "PhysicalParams",
    "QuantumState",
    "RadialFunction",
    "RadialGrid",
    "SweepSpec",
    "UnphysicalBranchError",
    "e_tilde",
    "effective_potential",
    "energy",
    "fd_eigenvalues",
    "find_crossings",
    "greene_aldrich",
    "m_tilde",
    "magnetic_field",
    "mass_function",
    "model_a_energy",
    "model_a_wavefunction",
    "model_b_energy",
    "model_b_wavefunction",
    "model_c_coefficients",
    "model_c_energy",
    "model_c_wavefunction",
    "node_count",
    "nu_quantize",
    "oracle_energy",
    "radial_potential",
    "residual",
    "shape_function",
    "sweep",
    "vector_potential",
    "verify_curl",
    "wavefunction",
]
