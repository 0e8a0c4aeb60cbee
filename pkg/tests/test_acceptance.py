"""Acceptance criteria, one test per criterion, at the stated tolerances.

Each test prints a single ``PASS criterion N`` line with its headline margin;
a failure shows up as the test failing (pytest's own FAIL line). Tolerances
here are contractual: do not loosen them to make a regression pass.
"""

import math
import os
import subprocess
import sys
import time

import pytest

from nlkg_dispersion.baselines import (
    lim_duffing_omega,
    lim_pure_quartic_omega,
    lim_sine_gordon_omega,
)
from nlkg_dispersion.elliptic import K_lde_improved, K_lde_series, agm_K, landen_ascend
from nlkg_dispersion.lde import (
    duffing_omega_lde,
    pure_quartic_omega_lde,
    sine_gordon_omega_lde,
)
from nlkg_dispersion.model import Duffing, PureQuartic, SineGordon
from nlkg_dispersion.oracle import (
    omega_exact,
    omega_exact_sine_gordon,
    period_ode,
    period_quadrature,
)

from _closed_forms import (
    PURE_QUARTIC_PRINTED,
    duffing_printed_order1,
    duffing_printed_order2,
    duffing_printed_order3,
    sine_gordon_printed_order1,
    sine_gordon_printed_order2,
)

ORACLE_PAIRS = (
    (Duffing(1.0), 0.3), (Duffing(1.0), 0.7), (Duffing(1.0), 1.0),
    (Duffing(1.0), 2.0), (Duffing(1.0), 5.0),
    (Duffing(-0.5), 0.5), (Duffing(-0.5), 1.0), (Duffing(0.0), 1.0),
    (Duffing(10.0), 0.5), (Duffing(10.0), 1.5),
    (SineGordon(), 0.3), (SineGordon(), 0.8), (SineGordon(), 1.5),
    (SineGordon(), 2.2), (SineGordon(), 2.8), (SineGordon(), 3.0),
    (PureQuartic(1.0), 0.5), (PureQuartic(1.0), 1.0), (PureQuartic(1.0), 2.0),
    (PureQuartic(2.0), 1.0),
)


def test_criterion_1_linear_limit():
    """Every method returns Omega = 1 within 1e-6 at A = 1e-4."""
    A = 1e-4
    worst = 0.0
    for potential in (Duffing(1.0), SineGordon()):
        values = [
            omega_exact(potential, A).omega_cap,
            *(
                (duffing_omega_lde(potential.mu, A, N) if isinstance(potential, Duffing)
                 else sine_gordon_omega_lde(A, N)).omega_cap
                for N in (0, 1, 2, 3)
            ),
            *(
                (lim_duffing_omega(potential.mu, A, order) if isinstance(potential, Duffing)
                 else lim_sine_gordon_omega(A, order)).omega_cap
                for order in (1, 2)
            ),
        ]
        for om in values:
            worst = max(worst, abs(om - 1.0))
            assert abs(om - 1.0) <= 1e-6
    print(f"PASS criterion 1: linear limit, max |Omega - 1| = {worst:.2e}")


def test_criterion_2_cross_oracle_agreement():
    """Quadrature vs ODE to 1e-6 on 20 pairs; vs elliptic to 1e-9 (sine-Gordon)."""
    worst_ode = 0.0
    for potential, A in ORACLE_PAIRS:
        quad = period_quadrature(potential, A).T
        ode = period_ode(potential, A).T
        err = abs(quad - ode) / quad
        worst_ode = max(worst_ode, err)
        assert err <= 1e-6, f"{potential!r} A={A}: {err:.2e}"
    worst_ell = 0.0
    for A in (0.5, 1.0, 2.0, 3.0):
        quad = 2.0 * math.pi / period_quadrature(SineGordon(), A).T
        closed = omega_exact_sine_gordon(A).omega_cap
        err = abs(quad - closed) / closed
        worst_ell = max(worst_ell, err)
        assert err <= 1e-9, f"A={A}: {err:.2e}"
    print(
        "PASS criterion 2: oracles agree "
        f"(quad/ODE worst {worst_ode:.2e}, quad/elliptic worst {worst_ell:.2e})"
    )


def test_criterion_3_closed_form_regressions():
    """Series orders reproduce the printed closed forms at stated tolerances."""
    for q in (0.1, 1.0, 10.0, 100.0):
        A = math.sqrt(q)
        for N, printed in (
            (0, duffing_printed_order1(1.0, A)),
            (2, duffing_printed_order2(1.0, A)),
            (3, duffing_printed_order3(1.0, A)),
        ):
            got = duffing_omega_lde(1.0, A, N).omega_cap
            assert abs(got - printed) <= 1e-12 * printed, f"duffing N={N} q={q}"
    for N in (1, 2, 3):
        got = pure_quartic_omega_lde(1.0, 1.0, N).omega_cap
        assert abs(got - PURE_QUARTIC_PRINTED[N]) <= 1e-14 * PURE_QUARTIC_PRINTED[N]
    for A in (0.5, 1.0, 2.0, 3.0):
        got1 = sine_gordon_omega_lde(A, 1).omega_cap
        got2 = sine_gordon_omega_lde(A, 2).omega_cap
        assert abs(got1 - sine_gordon_printed_order1(A)) <= 1e-12 * got1
        assert abs(got2 - sine_gordon_printed_order2(A)) <= 1e-12 * got2
    print("PASS criterion 3: closed-form regressions at 1e-12 / 1e-14 / 1e-12")


def test_criterion_4_error_ordering():
    """Order 2 beats the balance, order 3 beats order 2, per hardening decade."""
    margins = []
    for q in (1.0, 10.0, 100.0, 1e4):
        exact = omega_exact(Duffing(q), 1.0).omega_cap
        e2 = abs(duffing_omega_lde(q, 1.0, 2).omega_cap - exact)
        e3 = abs(duffing_omega_lde(q, 1.0, 3).omega_cap - exact)
        el = abs(lim_duffing_omega(q, 1.0, 2).omega_cap - exact)
        assert e2 < el, f"mu*A^2={q}: order 2 not ahead of balance"
        assert e3 < e2, f"mu*A^2={q}: order 3 not ahead of order 2"
        margins.append(el / e2)
    print(f"PASS criterion 4: error ordering, balance/order-2 ratio >= {min(margins):.1f}")


def test_criterion_5_sine_gordon_pairing():
    """Odd orders equal the preceding even order to 1e-12."""
    for A in (0.5, 1.5, 2.5):
        for even in (2, 4):
            lo = sine_gordon_omega_lde(A, even).omega_cap
            hi = sine_gordon_omega_lde(A, even + 1).omega_cap
            assert abs(hi - lo) <= 1e-12 * lo, f"A={A}, orders {even}/{even + 1}"
    print("PASS criterion 5: order pairing N=3==2 and N=5==4 at 1e-12")


def test_criterion_6_pure_quartic_accuracy():
    """Relative errors against the pinned exact frequency at A = 1."""
    exact = 2.0 * math.pi / 7.416298709
    e1 = abs(pure_quartic_omega_lde(1.0, 1.0, 1).omega_cap - exact) / exact
    e2 = abs(pure_quartic_omega_lde(1.0, 1.0, 2).omega_cap - exact) / exact
    e3 = abs(pure_quartic_omega_lde(1.0, 1.0, 3).omega_cap - exact) / exact
    el = abs(lim_pure_quartic_omega(1.0, 2).omega_cap - exact) / exact
    assert e3 <= 5e-5
    assert e2 <= 2e-4
    assert e2 < el
    assert math.log10(e1) <= math.log10(el) + 1.0
    print(
        f"PASS criterion 6: quartic errors e3={e3:.1e} e2={e2:.1e} "
        f"vs balance {el:.1e}, first order within a decade"
    )


def test_criterion_7_elliptic_layer():
    """Landen identity, order-1 closed form, and the improvement property."""
    for m in (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9):
        K = agm_K(m)
        resid = abs(K - agm_K(landen_ascend(m)) / (1.0 + math.sqrt(m)))
        assert resid <= 1e-12 * K, f"Landen identity at m={m}"
    for m in (0.1, 0.3, 0.5, 0.7, 0.9):
        closed = math.pi / math.sqrt(1.0 - 0.5 * m + 3.0 * math.sqrt(1.0 - m))
        assert abs(K_lde_improved(m, 1) - closed) <= 1e-13 * closed
    for m in (0.5, 0.8, 0.95):
        ref = agm_K(m)
        for N in (1, 2, 3):
            err_imp = abs(K_lde_improved(m, N) - ref)
            err_raw = abs(K_lde_series(m, N) - ref)
            assert err_imp <= err_raw, f"m={m}, N={N}"
    print("PASS criterion 7: elliptic layer (identity 1e-12, closed form 1e-13, improvement)")


def _run(tmp_path, *argv):
    env = {k: v for k, v in os.environ.items() if k != "NLKG_CONFIG"}
    return subprocess.run(
        [sys.executable, "-m", "nlkg_dispersion", *argv],
        capture_output=True, text=True, env=env, cwd=tmp_path, timeout=120,
    )


def test_criterion_8_determinism_and_formats(tmp_path):
    """Byte-identical rerun CSVs; validate exits 0 in under 10 s."""
    sweep_args = (
        "sweep", "--potential", "duffing", "--mua2-min", "-0.99", "--mua2-max", "-0.01",
        "--points", "40", "--methods", "lde0,lde2,lde3,lim2",
    )
    for name in ("s1.csv", "s2.csv"):
        proc = _run(tmp_path, *sweep_args, "--out", name)
        assert proc.returncode == 0, proc.stderr
    assert (tmp_path / "s1.csv").read_bytes() == (tmp_path / "s2.csv").read_bytes()

    for out in ("f1", "f2"):
        proc = _run(tmp_path, "figure", "--id", "3", "--points", "30", "--out", out)
        assert proc.returncode == 0, proc.stderr
    for stem in ("fig3_ratio", "fig3_delta"):
        for ext in (".csv", ".svg"):
            a = (tmp_path / "f1" / (stem + ext)).read_bytes()
            b = (tmp_path / "f2" / (stem + ext)).read_bytes()
            assert a == b, f"{stem}{ext} differs between reruns"

    started = time.monotonic()
    proc = _run(tmp_path, "validate")
    elapsed = time.monotonic() - started
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert elapsed < 10.0, f"validate took {elapsed:.1f}s"
    lines = proc.stdout.splitlines()
    assert sum(1 for line in lines if line.startswith("PASS ")) == 5
    print(f"PASS criterion 8: deterministic outputs, validate ok in {elapsed:.2f}s")
