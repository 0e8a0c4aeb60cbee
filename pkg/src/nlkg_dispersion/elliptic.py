"""Complete elliptic integrals: AGM reference, resummed series, Landen steps.

The series here evaluates K(m) = int_0^{pi/2} dt / sqrt(1 - m sin^2 t)
through an interpolated kernel: writing 1 - m sin^2 t = (1 + lam)(1 - xi)
with the shift lam = -m/2 held fixed and expanding in xi gives, at
resummation order N,

    K_N(m) = (pi/2) * sum_{k=0}^{N} a_k (1+lam)^(-k-1/2)
             * sum_{j=0}^{k} C(k,j) * lam^(k-j) * m^j * b_j

with a_k = b_k = C(2k,k)/4^k. The gamma functions of the raw coefficients
(Gamma(j+1/2)/j!^2 and 1/Gamma(1/2-k)) reduce to these central-binomial
ratios via Gamma(1/2) = sqrt(pi); both are accumulated multiplicatively,
which is stable through the maximum supported order. A consequence of the
expansion (the generating function sum_k p_k x^k = (1-x^2/4)^(-1/2) has no
odd terms) is exact order pairing: K_{2n+1} = K_{2n}.

Convergence of the plain series requires |m/(2-m)| < 1; one descending
Landen transformation strictly shrinks the parameter (0.5 -> 0.029,
0.9 -> 0.27, 0.95 -> 0.40) and with it the convergence ratio m/(2-m), so
a handful of orders reach ~1e-9 for m up to ~0.6 and the error keeps
dropping (more slowly) as m -> 1. That combination is `K_lde_improved`.
"""

from __future__ import annotations

import math

from .errors import DomainError
from .model import MAX_LDE_ORDER


def _check_order(N: int) -> None:
    if not (isinstance(N, int) and 0 <= N <= MAX_LDE_ORDER):
        raise DomainError(f"series order must be an int in [0, {MAX_LDE_ORDER}], got {N!r}")


def agm_K(m: float) -> float:
    """Reference K(m) via the arithmetic-geometric mean.

    Valid for any m < 1 (including negative m); quadratically convergent,
    iterated to relative fixed point 1e-15.

    Args:
        m: elliptic parameter (the modulus squared).

    Raises:
        DomainError: if m >= 1, where the integral diverges.
    """
    if not (isinstance(m, (int, float)) and math.isfinite(m) and m < 1.0):
        raise DomainError(f"agm_K requires m < 1, got {m!r}")
    a = 1.0
    b = math.sqrt(1.0 - m)
    for _ in range(64):
        if abs(a - b) <= 1e-15 * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return math.pi / (a + b)


def landen_ascend(m: float) -> float:
    """Ascending Landen map m -> 4*sqrt(m)/(1+sqrt(m))^2.

    Strictly increases m on (0, 1); m = 1 is its fixed point and is accepted
    as the boundary case.
    """
    if not (isinstance(m, (int, float)) and 0.0 < m <= 1.0):
        raise DomainError(f"landen_ascend requires 0 < m <= 1, got {m!r}")
    rt = math.sqrt(m)
    return 4.0 * rt / ((1.0 + rt) * (1.0 + rt))


def landen_descend(m: float) -> float:
    """Inverse of :func:`landen_ascend`: the smaller parameter with the same K.

    Computed as (m/(1+s)^2)^2 with s = sqrt(1-m), an exact rewrite of
    ((1-s)/(1+s))^2 that avoids the cancellation in 1-s for small m. Below
    m = 1e-8 the quadratic asymptote m^2/16*(1+m) is returned directly.
    """
    if not (isinstance(m, (int, float)) and 0.0 < m < 1.0):
        raise DomainError(f"landen_descend requires 0 < m < 1, got {m!r}")
    if m < 1e-8:
        return m * m / 16.0 * (1.0 + m)
    s = math.sqrt(1.0 - m)
    r = m / ((1.0 + s) * (1.0 + s))
    return r * r


def K_lde_series(m: float, N: int) -> float:
    """Resummed series K_N(m) at fixed shift lam = -m/2 (see module docstring).

    Converges (monotonically from below for 0 < m <= 0.9) when |m/(2-m)| < 1;
    odd orders repeat the preceding even order exactly.

    Args:
        m: elliptic parameter, must satisfy m < 2 (so 1 + lam > 0).
        N: resummation order, 0 <= N <= MAX_LDE_ORDER.
    """
    _check_order(N)
    if not (isinstance(m, (int, float)) and math.isfinite(m) and m < 2.0):
        raise DomainError(f"K_lde_series requires m < 2, got {m!r}")
    lam = -0.5 * m
    base = 1.0 + lam  # > 0 since m < 2
    # multiplicative tables: b[j] = C(2j,j)/4^j, powers of m and lam
    b = [1.0] * (N + 1)
    m_pow = [1.0] * (N + 1)
    lam_pow = [1.0] * (N + 1)
    for i in range(1, N + 1):
        b[i] = b[i - 1] * (2.0 * i - 1.0) / (2.0 * i)
        m_pow[i] = m_pow[i - 1] * m
        lam_pow[i] = lam_pow[i - 1] * lam
    total = 0.0
    a_k = 1.0  # C(2k,k)/4^k
    power = 1.0 / math.sqrt(base)  # (1+lam)^(-(k+1/2))
    for k in range(N + 1):
        inner = 0.0
        binom = 1.0  # C(k,j)
        for j in range(k + 1):
            inner += binom * b[j] * m_pow[j] * lam_pow[k - j]
            binom = binom * (k - j) / (j + 1.0)
        total += a_k * inner * power
        a_k *= (2.0 * k + 1.0) / (2.0 * k + 2.0)
        power /= base
    return 0.5 * math.pi * total


def K_lde_improved(m: float, N: int) -> float:
    """Series evaluation after one descending Landen step.

    K(m) = 2/(1+sqrt(1-m)) * K(m_d) with m_d = landen_descend(m) < m; the
    series applied to m_d converges strictly faster than at m. The prefactor
    is the cancellation-free rewrite of 2*(1-sqrt(1-m))/m. For m < 1e-8 the
    plain series is already in its fast regime and is used directly.

    Args:
        m: elliptic parameter in [0, 1).
        N: resummation order, 0 <= N <= MAX_LDE_ORDER.
    """
    _check_order(N)
    if not (isinstance(m, (int, float)) and 0.0 <= m < 1.0):
        raise DomainError(f"K_lde_improved requires 0 <= m < 1, got {m!r}")
    if m < 1e-8:
        return K_lde_series(m, N)
    s = math.sqrt(1.0 - m)
    return 2.0 / (1.0 + s) * K_lde_series(landen_descend(m), N)
