"""Resummed strong-coupling series for the three dispersion relations.

All three potentials share one series skeleton. For the Duffing oscillator
the period at resummation order N is

    T_N = 4*pi/sqrt(4 + 3*q) * sum_{n=0}^{N} (-1)^n C(-1/2, n) C(-1/2, 2n) x^(2n)

with q = mu*A^2 and x = q/(4 + 3*q); every summand is positive, so the sum
is cancellation-free and usable at any order. The pure quartic case is the
q -> inf limit: the same sum at fixed x = 1/3 with prefactor
4*pi/sqrt(3*mu*A^2), making Omega exactly linear in A*sqrt(mu). The
sine-Gordon frequency goes through the elliptic series instead:
Omega_N = pi / (2 * K_lde_improved(sin^2(A/2), N)).

The expansion parameter is fixed by the stationarity (minimal-sensitivity)
condition; `pms_lambda` exposes it and `convergence_check` reports whether
the resulting geometric bound is met. The check is informational only - the
series is evaluated regardless, and low orders are accurate well outside
the guaranteed region.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .elliptic import K_lde_improved
from .errors import DomainError
from .model import (
    MAX_LDE_ORDER,
    DispersionResult,
    Duffing,
    MethodId,
    PureQuartic,
    SineGordon,
    validate_amplitude,
)


@dataclass(frozen=True, slots=True)
class LdeOrder:
    """A validated resummation order: an int in [0, MAX_LDE_ORDER]."""

    n: int

    def __post_init__(self) -> None:
        if not (isinstance(self.n, int) and 0 <= self.n <= MAX_LDE_ORDER):
            raise DomainError(
                f"order must be an int in [0, {MAX_LDE_ORDER}], got {self.n!r}"
            )


@dataclass(frozen=True, slots=True)
class ConvergenceReport:
    """Outcome of the geometric-convergence test for the Duffing series.

    ``satisfied`` holds exactly when ``margin`` = lambda_pms - lambda_bound
    is strictly positive (the boundary mu*A^2 = 2 counts as not satisfied).
    """

    lambda_pms: float
    lambda_bound: float
    satisfied: bool
    margin: float


def pms_lambda(mu: float, A: float) -> float:
    """Stationary interpolation parameter sqrt(3*mu)*A/2 for the Duffing series."""
    q3 = 0.75 * mu * A * A
    if not (math.isfinite(q3) and q3 >= 0.0):
        raise DomainError(f"pms_lambda requires 3*mu*A^2 >= 0, got mu={mu!r}, A={A!r}")
    return math.sqrt(q3)


def convergence_check(mu: float, A: float) -> ConvergenceReport:
    """Compare the stationary parameter against the geometric bound.

    The series converges geometrically once lambda_pms exceeds
    sqrt(mu*A^2/2 + 1/2), i.e. strictly for mu*A^2 > 2. Both sides are
    evaluated through the same floating form so the boundary lands on an
    exact zero margin. Report only; nothing downstream blocks on it.
    """
    if not (isinstance(mu, (int, float)) and math.isfinite(mu) and mu > 0):
        raise DomainError(f"convergence_check requires mu > 0, got {mu!r}")
    if not (isinstance(A, (int, float)) and A > 0):
        raise DomainError(f"convergence_check requires A > 0, got {A!r}")
    q = mu * A * A
    lam = math.sqrt(0.75 * q)
    bound = math.sqrt(0.5 * q + 0.5)
    margin = lam - bound
    return ConvergenceReport(lam, bound, margin > 0.0, margin)


def _binomial_half_table(count: int) -> list[float]:
    """C(-1/2, n) for n = 0..count-1 via the downward recurrence."""
    c = [1.0] * count
    for n in range(1, count):
        c[n] = c[n - 1] * (-0.5 - n + 1.0) / n
    return c


def _series_sum(x2: float, N: int) -> float:
    """sum_{n<=N} (-1)^n C(-1/2,n) C(-1/2,2n) (x^2)^n; all terms positive."""
    c = _binomial_half_table(2 * N + 1)
    total = 0.0
    xp = 1.0
    sign = 1.0
    for n in range(N + 1):
        total += sign * c[n] * c[2 * n] * xp
        xp *= x2
        sign = -sign
    return total


def duffing_period_lde(mu: float, A: float, N: int) -> float:
    """Resummed Duffing period T_N (see module docstring).

    Requires 4 + 3*mu*A^2 > 0 so prefactor and expansion point exist; this is
    wider than the oscillation domain, which the Omega-level wrapper enforces.
    """
    LdeOrder(N)
    q = mu * A * A
    den = 4.0 + 3.0 * q
    if not (math.isfinite(den) and den > 0.0):
        raise DomainError(f"duffing_period_lde requires 4 + 3*mu*A^2 > 0, got {den!r}")
    x = q / den
    return 4.0 * math.pi / math.sqrt(den) * _series_sum(x * x, N)


def duffing_omega_lde(mu: float, A: float, N: int) -> DispersionResult:
    """Omega_N(A) for the Duffing potential, with a convergence report.

    The report (diagnostics) is attached for mu > 0 and omitted otherwise.
    """
    validate_amplitude(Duffing(mu), A)
    T = duffing_period_lde(mu, A, N)
    diagnostics = convergence_check(mu, A) if mu > 0 else None
    return DispersionResult(2.0 * math.pi / T, MethodId.lde(N), diagnostics)


def pure_quartic_omega_lde(mu: float, A: float, N: int) -> DispersionResult:
    """Omega_N(A) for the pure quartic potential; exactly linear in A*sqrt(mu)."""
    validate_amplitude(PureQuartic(mu), A)
    LdeOrder(N)
    q3 = 3.0 * mu * A * A
    if not (math.isfinite(q3) and q3 > 0.0):
        raise DomainError(f"pure_quartic_omega_lde requires mu*A^2 > 0, got mu={mu!r}, A={A!r}")
    T = 4.0 * math.pi / math.sqrt(q3) * _series_sum(1.0 / 9.0, N)
    return DispersionResult(2.0 * math.pi / T, MethodId.lde(N), None)


def sine_gordon_omega_lde(A: float, N: int) -> DispersionResult:
    """Omega_N(A) for the sine-Gordon potential via the elliptic series.

    Inherits exact order pairing from the elliptic series: N = 2n+1 returns
    the same value as N = 2n.
    """
    validate_amplitude(SineGordon(), A)
    m = math.sin(0.5 * A) ** 2
    return DispersionResult(
        math.pi / (2.0 * K_lde_improved(m, N)), MethodId.lde(N), None
    )
