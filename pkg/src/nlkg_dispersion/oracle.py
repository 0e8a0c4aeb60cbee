"""Exact references: period quadrature, ODE integration, closed elliptic form.

The energy integral for the period,

    T = 4 * int_0^A du / sqrt(2*(V(A) - V(u)))

(the orbit is even, so four quarter-periods), is evaluated after the
substitution u = A*sin(phi), which removes the turning-point singularity.
For each potential V(A) - V(u) factors so the integrand is smooth on
[0, pi/2] with no cancellation:

* Duffing:       T = int 4*sqrt(2) / sqrt(2 + q*(1 + sin^2 phi)) dphi
* pure quartic:  T = int 4*sqrt(2) / sqrt(q*(1 + sin^2 phi)) dphi
* sine-Gordon:   T = int 2*A*cos(phi) / sqrt(sin((A+u)/2) * sin((A-u)/2)) dphi

with q = mu*A^2 and (A-u)/2 = A*sin^2(pi/4 - phi/2). Gauss-Legendre nodes
are doubled from 16 until two successive levels agree to ``abs_tol``
(every in-domain case here converges by n = 128; a node cap guards the
pathological rest). The independent cross-check integrates the equation of
motion with RK4 and locates the period as the polished first +/- zero
crossing of u'.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _kernels
from .elliptic import agm_K
from .errors import DomainError, NonConvergence
from .model import (
    DispersionResult,
    Duffing,
    MethodId,
    Potential,
    PureQuartic,
    SineGordon,
    eval_force,
    validate_amplitude,
)

_NODE_START = 16
_NODE_CAP = 2048


@dataclass(frozen=True, slots=True)
class QuadratureConfig:
    """Node-doubling control: stop when levels agree to ``abs_tol``."""

    abs_tol: float = 1e-12
    max_refinements: int = 20


@dataclass(frozen=True, slots=True)
class OdeConfig:
    """RK4 control. ``step=None`` selects 1e-4 of the linearized period."""

    step: float | None = None
    max_steps: int = 1_000_000


@dataclass(frozen=True, slots=True)
class PeriodResult:
    """A period T with the scheme's own error estimate."""

    T: float
    estimated_error: float


def _kernel_args(potential: Potential) -> tuple[int, float]:
    if isinstance(potential, Duffing):
        return 0, potential.mu
    if isinstance(potential, SineGordon):
        return 1, 0.0
    if isinstance(potential, PureQuartic):
        return 2, potential.mu
    raise DomainError(f"unknown potential {potential!r}")


@lru_cache(maxsize=None)
def _gl_nodes(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes/weights mapped from [-1, 1] to [0, pi/2]."""
    x, w = np.polynomial.legendre.leggauss(n)
    quarter_pi = 0.25 * math.pi
    phis = np.ascontiguousarray(quarter_pi * (x + 1.0))
    wts = np.ascontiguousarray(quarter_pi * w)
    return phis, wts


def period_quadrature(
    potential: Potential, A: float, config: QuadratureConfig | None = None
) -> PeriodResult:
    """Period via adaptive Gauss-Legendre quadrature of the energy integral.

    Args:
        potential: one of the three supported potentials.
        A: oscillation amplitude (must pass :func:`validate_amplitude`).
        config: tolerance and refinement budget.

    Returns:
        PeriodResult with the converged period and the last level-to-level
        difference as the error estimate.

    Raises:
        DomainError: amplitude outside the validity domain, or an integrand
            evaluation left its domain (NaN from the kernel).
        NonConvergence: node/refinement budget exhausted before two levels
            agreed to ``abs_tol``.
    """
    cfg = config if config is not None else QuadratureConfig()
    if not cfg.abs_tol > 0:
        raise ValueError(f"abs_tol must be positive, got {cfg.abs_tol!r}")
    if cfg.max_refinements < 1:
        raise ValueError(f"max_refinements must be >= 1, got {cfg.max_refinements!r}")
    validate_amplitude(potential, A)
    pot, mu = _kernel_args(potential)
    n = _NODE_START
    prev: float | None = None
    for _ in range(cfg.max_refinements + 1):
        if n > _NODE_CAP:
            break
        phis, wts = _gl_nodes(n)
        T = _kernels.period_sum(pot, mu, A, phis, wts)
        if math.isnan(T):
            raise DomainError(
                f"period integrand left its domain for {potential!r} at A = {A}"
            )
        if prev is not None:
            err = abs(T - prev)
            if err <= cfg.abs_tol:
                return PeriodResult(T, err)
        prev = T
        n *= 2
    raise NonConvergence(
        f"quadrature did not reach abs_tol = {cfg.abs_tol} within the node budget"
    )


def omega_exact(
    potential: Potential, A: float, config: QuadratureConfig | None = None
) -> DispersionResult:
    """Exact Omega(A) = 2*pi/T from the period quadrature."""
    pr = period_quadrature(potential, A, config)
    return DispersionResult(2.0 * math.pi / pr.T, MethodId.exact(), pr)


def omega_exact_sine_gordon(A: float) -> DispersionResult:
    """Closed-form sine-Gordon frequency pi / (2*K(sin^2(A/2))) via the AGM."""
    validate_amplitude(SineGordon(), A)
    m = math.sin(0.5 * A) ** 2
    return DispersionResult(math.pi / (2.0 * agm_K(m)), MethodId.exact(), None)


def period_ode(
    potential: Potential, A: float, config: OdeConfig | None = None
) -> PeriodResult:
    """Period via RK4 integration of u'' = -V'(u) from (A, 0).

    The first +/- sign change of u' with u > 0 happens at t = T; it is
    polished by one bisection step and Newton iterations on u' (the
    derivative -V'(u) is available exactly) to 1e-10 in time.

    Raises:
        DomainError: amplitude outside the validity domain.
        NonConvergence: no full oscillation within ``max_steps``.
    """
    cfg = config if config is not None else OdeConfig()
    validate_amplitude(potential, A)
    if cfg.max_steps < 1:
        raise ValueError(f"max_steps must be >= 1, got {cfg.max_steps!r}")
    if cfg.step is None:
        # linearized stiffness V'(A)/A is positive throughout the domain
        t_linear = 2.0 * math.pi / math.sqrt(eval_force(potential, A) / A)
        h = 1e-4 * t_linear
    else:
        h = cfg.step
    if not (math.isfinite(h) and h > 0):
        raise ValueError(f"step must be positive, got {h!r}")
    pot, mu = _kernel_args(potential)
    status, T, err = _kernels.rk4_period(pot, mu, A, h, cfg.max_steps)
    if status != 0:
        raise NonConvergence(
            f"no full oscillation within {cfg.max_steps} RK4 steps (h = {h})"
        )
    return PeriodResult(T, err)
