"""Numeric kernel selection.

Two interchangeable backends implement the hot loops of the oracles:

* ``_core`` — Cython extension, built when a compiler is available;
* ``_fallback`` — pure Python/numpy, always available.

``NLKG_PURE_PYTHON=1`` in the environment forces the fallback. ``BACKEND``
reports which one is live ("compiled" or "python"). The two backends agree
to full working precision but not bit-for-bit (summation order differs), so
reproducibility guarantees hold within a backend, not across them.

Kernel contract (shared by both backends):

``period_sum(pot, mu, A, phis, wts)``
    Weighted sum of the period integrand over quadrature nodes ``phis`` in
    [0, pi/2] with weights ``wts``. ``pot``: 0 = Duffing, 1 = sine-Gordon,
    2 = pure quartic. Returns NaN if the integrand leaves its domain.

``rk4_period(pot, mu, A, h, max_steps)``
    Integrates u'' = -V'(u) from (A, 0) with fixed-step RK4, detects the
    first +/- zero crossing of u' with u > 0, polishes it with one bisection
    step plus Newton iterations on u' (tolerance 1e-10 in time). Returns
    ``(status, T, err)``: status 0 on success (T = period, err = last Newton
    update), 1 if no crossing occurred within ``max_steps``.
"""

import os

if os.environ.get("NLKG_PURE_PYTHON", "") not in ("", "0"):
    from . import _fallback as _impl
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _fallback as _impl

BACKEND: str = _impl.BACKEND
period_sum = _impl.period_sum
rk4_period = _impl.rk4_period

__all__ = ["BACKEND", "period_sum", "rk4_period"]
