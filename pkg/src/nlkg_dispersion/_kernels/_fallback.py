"""Pure-Python/numpy implementation of the oracle kernels.

See the package docstring in ``_kernels/__init__`` for the kernel contract.
The quadrature integrands are the cancellation-free forms obtained from the
substitution u = A*sin(phi) in the energy integral; in particular the
sine-Gordon integrand uses sin^2(X) - sin^2(Y) = sin(X+Y)*sin(X-Y) so that
no difference of nearly equal cosines is ever formed.
"""

from __future__ import annotations

import math

import numpy as np

BACKEND = "python"

_FOUR_ROOT2 = 4.0 * math.sqrt(2.0)


def period_sum(pot: int, mu: float, A: float, phis: np.ndarray, wts: np.ndarray) -> float:
    q = mu * A * A
    if pot == 0:
        s = np.sin(phis)
        r = 2.0 + q * (1.0 + s * s)
        if np.any(r <= 0.0):
            return math.nan
        f = _FOUR_ROOT2 / np.sqrt(r)
    elif pot == 1:
        s = np.sin(phis)
        u = A * s
        # (A - u)/2 rewritten as A*sin^2(pi/4 - phi/2): exact, no cancellation
        half_diff = A * np.sin(0.25 * math.pi - 0.5 * phis) ** 2
        r = np.sin(0.5 * (A + u)) * np.sin(half_diff)
        if np.any(r <= 0.0):
            return math.nan
        f = 2.0 * A * np.cos(phis) / np.sqrt(r)
    elif pot == 2:
        s = np.sin(phis)
        r = q * (1.0 + s * s)
        if np.any(r <= 0.0):
            return math.nan
        f = _FOUR_ROOT2 / np.sqrt(r)
    else:
        raise ValueError(f"unknown potential id {pot}")
    return float(np.sum(wts * f))


def _force(pot: int, mu: float):
    if pot == 0:
        return lambda u: u + mu * u * u * u
    if pot == 1:
        return math.sin
    if pot == 2:
        return lambda u: mu * u * u * u
    raise ValueError(f"unknown potential id {pot}")


def _rk4_step(force, u: float, v: float, dt: float) -> tuple[float, float]:
    k1u = v
    k1v = -force(u)
    k2u = v + 0.5 * dt * k1v
    k2v = -force(u + 0.5 * dt * k1u)
    k3u = v + 0.5 * dt * k2v
    k3v = -force(u + 0.5 * dt * k2u)
    k4u = v + dt * k3v
    k4v = -force(u + dt * k3u)
    return (
        u + dt * (k1u + 2.0 * k2u + 2.0 * k3u + k4u) / 6.0,
        v + dt * (k1v + 2.0 * k2v + 2.0 * k3v + k4v) / 6.0,
    )


def rk4_period(
    pot: int, mu: float, A: float, h: float, max_steps: int
) -> tuple[int, float, float]:
    force = _force(pot, mu)
    u, v, t = A, 0.0, 0.0
    for _ in range(max_steps):
        nu, nv = _rk4_step(force, u, v, h)
        if v > 0.0 and nv <= 0.0 and u > 0.0 and nu > 0.0:
            # u' crosses +/- with u near its maximum: that is t = T.
            # One bisection step narrows the bracket, then Newton on u'(t)
            # (du'/dt = -V'(u)) converges from the bracket base.
            um, vm = _rk4_step(force, u, v, 0.5 * h)
            if vm > 0.0:
                ub, vb, tb = um, vm, t + 0.5 * h
            else:
                ub, vb, tb = u, v, t
            T = tb
            uu, vv = ub, vb
            dt = math.inf
            for _ in range(12):
                dv = -force(uu)
                if dv == 0.0:
                    break
                dt = -vv / dv
                T += dt
                if abs(dt) <= 1e-10:
                    break
                uu, vv = _rk4_step(force, ub, vb, T - tb)
            return 0, T, abs(dt)
        u, v, t = nu, nv, t + h
    return 1, 0.0, 0.0
