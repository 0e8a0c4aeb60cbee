# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementation of the oracle kernels.

Mirrors ``_fallback`` exactly (same algorithms, same branch structure); see
``_kernels/__init__`` for the contract. Summation is sequential here versus
numpy's pairwise reduction in the fallback, so results agree to working
precision but not bit-for-bit.
"""

from libc.math cimport cos, fabs, sin, sqrt

BACKEND = "compiled"

cdef double NAN_VALUE = float("nan")
cdef double INF_VALUE = float("inf")


cdef inline double _force(int pot, double mu, double u) noexcept nogil:
    if pot == 0:
        return u + mu * u * u * u
    elif pot == 1:
        return sin(u)
    return mu * u * u * u


def period_sum(int pot, double mu, double A, double[::1] phis, double[::1] wts):
    cdef Py_ssize_t i, n = phis.shape[0]
    cdef double q = mu * A * A
    cdef double four_root2 = 4.0 * sqrt(2.0)
    cdef double quarter_pi = 0.7853981633974483096
    cdef double acc = 0.0
    cdef double s, r, u, half_diff, phi
    if pot == 0:
        for i in range(n):
            s = sin(phis[i])
            r = 2.0 + q * (1.0 + s * s)
            if r <= 0.0:
                return NAN_VALUE
            acc += wts[i] * four_root2 / sqrt(r)
    elif pot == 1:
        for i in range(n):
            phi = phis[i]
            s = sin(phi)
            u = A * s
            half_diff = sin(quarter_pi - 0.5 * phi)
            half_diff = A * half_diff * half_diff
            r = sin(0.5 * (A + u)) * sin(half_diff)
            if r <= 0.0:
                return NAN_VALUE
            acc += wts[i] * 2.0 * A * cos(phi) / sqrt(r)
    elif pot == 2:
        for i in range(n):
            s = sin(phis[i])
            r = q * (1.0 + s * s)
            if r <= 0.0:
                return NAN_VALUE
            acc += wts[i] * four_root2 / sqrt(r)
    else:
        raise ValueError(f"unknown potential id {pot}")
    return acc


cdef inline void _rk4_step(int pot, double mu, double u, double v, double dt,
                           double* out_u, double* out_v) noexcept nogil:
    cdef double k1u = v
    cdef double k1v = -_force(pot, mu, u)
    cdef double k2u = v + 0.5 * dt * k1v
    cdef double k2v = -_force(pot, mu, u + 0.5 * dt * k1u)
    cdef double k3u = v + 0.5 * dt * k2v
    cdef double k3v = -_force(pot, mu, u + 0.5 * dt * k2u)
    cdef double k4u = v + dt * k3v
    cdef double k4v = -_force(pot, mu, u + dt * k3u)
    out_u[0] = u + dt * (k1u + 2.0 * k2u + 2.0 * k3u + k4u) / 6.0
    out_v[0] = v + dt * (k1v + 2.0 * k2v + 2.0 * k3v + k4v) / 6.0


def rk4_period(int pot, double mu, double A, double h, long max_steps):
    if pot not in (0, 1, 2):
        raise ValueError(f"unknown potential id {pot}")
    cdef double u = A, v = 0.0, t = 0.0
    cdef double nu = 0.0, nv = 0.0
    cdef double um, vm, ub, vb, tb, T, uu, vv, dv, dt
    cdef long step
    cdef int it
    for step in range(max_steps):
        _rk4_step(pot, mu, u, v, h, &nu, &nv)
        if v > 0.0 and nv <= 0.0 and u > 0.0 and nu > 0.0:
            _rk4_step(pot, mu, u, v, 0.5 * h, &um, &vm)
            if vm > 0.0:
                ub = um; vb = vm; tb = t + 0.5 * h
            else:
                ub = u; vb = v; tb = t
            T = tb
            uu = ub
            vv = vb
            dt = INF_VALUE
            for it in range(12):
                dv = -_force(pot, mu, uu)
                if dv == 0.0:
                    break
                dt = -vv / dv
                T += dt
                if fabs(dt) <= 1e-10:
                    break
                _rk4_step(pot, mu, ub, vb, T - tb, &uu, &vv)
            return 0, T, fabs(dt)
        u = nu; v = nv; t = t + h
    return 1, 0.0, 0.0
