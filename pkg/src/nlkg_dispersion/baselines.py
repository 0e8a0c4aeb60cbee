"""Harmonic-balance baseline dispersion relations (first and second order).

These are the classical single- and two-harmonic balance closed forms the
series methods are compared against. The sine-Gordon variants expand the
restoring force in Bessel functions; `bessel_j` provides the ascending
series so the package stays dependency-light, which is accurate to ~1e-15
for the |x| <= 3.2 arguments the baselines use (toward the |x| = 20 domain
edge, alternating-series cancellation grows and accuracy degrades to ~1e-8).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .model import (
    DispersionResult,
    Duffing,
    MethodId,
    PureQuartic,
    SineGordon,
    validate_amplitude,
)

_ROOT3_HALF = 0.5 * math.sqrt(3.0)
_QUARTIC_ORDER2 = math.sqrt(62.0 + 2.0 * math.sqrt(421.0)) / 12.0


def _check_order(order: int) -> None:
    if order not in (1, 2):
        raise DomainError(f"baseline order must be 1 or 2, got {order!r}")


def bessel_j(n: int, x: float) -> float:
    """Bessel function J_n(x) by the ascending power series.

    Domain: integer 0 <= n <= 8 and |x| <= 20 (what the baselines need).
    Terms follow the recurrence t_{s+1} = -t_s (x/2)^2 / ((s+1)(n+s+1));
    summation stops when a term falls below 1e-17 of the running sum.
    """
    if not (isinstance(n, int) and 0 <= n <= 8):
        raise DomainError(f"bessel_j supports integer orders 0..8, got {n!r}")
    if not (isinstance(x, (int, float)) and math.isfinite(x) and abs(x) <= 20.0):
        raise DomainError(f"bessel_j supports |x| <= 20, got {x!r}")
    y = 0.5 * x
    term = 1.0
    for i in range(1, n + 1):
        term *= y / i
    total = term
    y2 = y * y
    s = 0
    while abs(term) > 1e-17 * abs(total) and s < 250:
        s += 1
        term *= -y2 / (s * (n + s))
        total += term
    return total


@dataclass(frozen=True, slots=True)
class LimCoefficients:
    """Ingredients of the second-order sine-Gordon balance at amplitude A.

    a1, a3 are the odd-harmonic force coefficients 2*J_1(A), -2*J_3(A);
    b0..b6 the even ones 2*(-1)^i*J_{2i}(A); g, h the reduced quadratic
    coefficients whose root g + sqrt(g^2 - h) is Omega^2.
    """

    a1: float
    a3: float
    b0: float
    b2: float
    b4: float
    b6: float
    g: float
    h: float


def sine_gordon_lim_coefficients(A: float) -> LimCoefficients:
    """Coefficient set for :func:`lim_sine_gordon_omega` at order 2."""
    validate_amplitude(SineGordon(), A)
    a1 = 2.0 * bessel_j(1, A)
    a3 = -2.0 * bessel_j(3, A)
    b0 = 2.0 * bessel_j(0, A)
    b2 = -2.0 * bessel_j(2, A)
    b4 = 2.0 * bessel_j(4, A)
    b6 = -2.0 * bessel_j(6, A)
    b_alt = b0 - b2 - b4 + b6
    g = (b_alt * A + 18.0 * a1 + 2.0 * a3) / (36.0 * A)
    h = a1 * b_alt / (18.0 * A)
    return LimCoefficients(a1, a3, b0, b2, b4, b6, g, h)


def lim_duffing_omega(mu: float, A: float, order: int) -> DispersionResult:
    """Harmonic-balance Omega(A) for the Duffing potential.

    Order 1 is sqrt(1 + 3*mu*A^2/4) (algebraically the same as the order-0
    resummed series). Order 2 carries an inner radicand
    1024 + 1472*q + 421*q^2 that turns negative for q in (-2.54, -0.9583),
    which overlaps the softening validity window: those amplitudes raise
    DomainError rather than returning a complex square root.
    """
    _check_order(order)
    validate_amplitude(Duffing(mu), A)
    q = mu * A * A
    if order == 1:
        radicand = 1.0 + 0.75 * q
    else:
        inner = 1024.0 + q * (1472.0 + 421.0 * q)
        if inner < 0.0:
            raise DomainError(
                f"order-2 balance radicand negative at mu*A^2 = {q} (needs q > -0.95830462)"
            )
        radicand = (40.0 + 31.0 * q + math.sqrt(inner)) / 72.0
    if radicand <= 0.0:
        raise DomainError(f"order-{order} balance radicand non-positive at mu*A^2 = {q}")
    return DispersionResult(math.sqrt(radicand), MethodId.lim(order), None)


def lim_sine_gordon_omega(A: float, order: int) -> DispersionResult:
    """Harmonic-balance Omega(A) for the sine-Gordon potential.

    Order 1 is sqrt(2*J_1(A)/A). Order 2 solves the two-harmonic secular
    system; its discriminant g^2 - h stays positive throughout (0, pi)
    (minimum ~6e-3 near A = pi), so the DomainError branch below is defensive.
    """
    _check_order(order)
    validate_amplitude(SineGordon(), A)
    if order == 1:
        radicand = 2.0 * bessel_j(1, A) / A
        if radicand <= 0.0:
            raise DomainError(f"order-1 balance radicand non-positive at A = {A}")
        return DispersionResult(math.sqrt(radicand), MethodId.lim(1), None)
    co = sine_gordon_lim_coefficients(A)
    disc = co.g * co.g - co.h
    if disc < 0.0:
        raise DomainError(f"order-2 balance discriminant negative at A = {A}")
    radicand = co.g + math.sqrt(disc)
    if radicand <= 0.0:
        raise DomainError(f"order-2 balance radicand non-positive at A = {A}")
    return DispersionResult(math.sqrt(radicand), MethodId.lim(2), None)


def lim_pure_quartic_omega(A: float, order: int) -> DispersionResult:
    """Harmonic-balance Omega(A) for the pure quartic potential at mu = 1.

    Omega is exactly linear in A: (sqrt(3)/2)*A at order 1 and
    sqrt(62 + 2*sqrt(421))/12 * A at order 2. Other quartic couplings
    rescale time by sqrt(mu); callers sweeping mu apply that factor.
    """
    _check_order(order)
    validate_amplitude(PureQuartic(1.0), A)
    slope = _ROOT3_HALF if order == 1 else _QUARTIC_ORDER2
    return DispersionResult(slope * A, MethodId.lim(order), None)
