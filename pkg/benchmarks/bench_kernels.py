"""Compare the compiled kernels against the pure-Python fallback.

Runs the two hot kernels on fixed workloads and prints a timing table:

    python3 benchmarks/bench_kernels.py

The workloads mirror what the package actually does: 256-node quadrature
sums for each potential and one full RK4 period hunt. Pass --repeats to
change the sample count (best-of is reported).
"""

import argparse
import math
import time

import numpy as np

from nlkg_dispersion._kernels import _fallback
from nlkg_dispersion.oracle import _gl_nodes

try:
    from nlkg_dispersion._kernels import _core
except ImportError:
    _core = None

QUAD_CASES = [
    ("duffing q=1", 0, 1.0, 1.0),
    ("sine-gordon A=2", 1, 0.0, 2.0),
    ("quartic A=1", 2, 1.0, 1.0),
]
RK4_CASE = ("duffing q=1 rk4", 0, 1.0, 1.0)


def best_of(fn, repeats):
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=7)
    parser.add_argument("--quad-loops", type=int, default=200,
                        help="period_sum calls per timing sample")
    args = parser.parse_args()

    if _core is None:
        print("compiled kernels unavailable; only the fallback is measured")

    phis, wts = _gl_nodes(256)
    phis, wts = np.ascontiguousarray(phis), np.ascontiguousarray(wts)
    rows = []

    for name, pot, mu, A in QUAD_CASES:
        def run(mod):
            def inner():
                for _ in range(args.quad_loops):
                    mod.period_sum(pot, mu, A, phis, wts)
            return inner

        t_py = best_of(run(_fallback), args.repeats) / args.quad_loops
        t_c = best_of(run(_core), args.repeats) / args.quad_loops if _core else None
        rows.append((name, t_py, t_c))
        if _core is not None:
            fast, slow = _core.period_sum(pot, mu, A, phis, wts), _fallback.period_sum(pot, mu, A, phis, wts)
            assert abs(fast - slow) <= 1e-12 * abs(slow), f"backend mismatch on {name}"

    name, pot, mu, A = RK4_CASE
    h = 1e-4 * 2.0 * math.pi / math.sqrt(1.0 + mu * A * A)
    t_py = best_of(lambda: _fallback.rk4_period(pot, mu, A, h, 1_000_000), args.repeats)
    t_c = (
        best_of(lambda: _core.rk4_period(pot, mu, A, h, 1_000_000), args.repeats)
        if _core else None
    )
    rows.append((name, t_py, t_c))

    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  {'python':>10}  {'compiled':>10}  {'speedup':>8}")
    for name, t_py, t_c in rows:
        if t_c is None:
            print(f"{name:<{width}}  {t_py * 1e6:>8.1f}us  {'-':>10}  {'-':>8}")
        else:
            print(f"{name:<{width}}  {t_py * 1e6:>8.1f}us  {t_c * 1e6:>8.1f}us  {t_py / t_c:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
