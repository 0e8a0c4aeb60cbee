"""Amplitude-dependent dispersion relations for nonlinear Klein-Gordon waves.

Periodic traveling waves of u_tt - u_xx + V'(u) = 0 reduce, in the co-moving
phase, to an anharmonic oscillation whose frequency Omega depends on the
amplitude A. This package computes Omega(A) three independent ways - exact
oracles (quadrature of the energy integral, direct ODE integration, closed
elliptic forms), a resummed strong-coupling series evaluated to arbitrary
order, and classical harmonic-balance baselines - and ships the comparison
tooling (sweeps, error tables, figures) as a CLI.
"""

__version__ = "0.1.0"

from .errors import DomainError, NonConvergence
from .model import (
    MAX_LDE_ORDER,
    DispersionQuery,
    DispersionResult,
    Duffing,
    MethodId,
    Potential,
    PureQuartic,
    SineGordon,
    WaveContext,
    eval_force,
    eval_potential,
    omega_from_wavenumber,
    turning_energy,
    validate_amplitude,
)

__all__ = [
    "__version__",
    "DomainError",
    "NonConvergence",
    "MAX_LDE_ORDER",
    "DispersionQuery",
    "DispersionResult",
    "Duffing",
    "MethodId",
    "Potential",
    "PureQuartic",
    "SineGordon",
    "WaveContext",
    "eval_force",
    "eval_potential",
    "omega_from_wavenumber",
    "turning_energy",
    "validate_amplitude",
]
