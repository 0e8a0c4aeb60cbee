"""Exact-oracle layer: quadrature, RK4 cross-check, closed elliptic form."""

import math

import pytest

from nlkg_dispersion import _kernels
from nlkg_dispersion.elliptic import agm_K
from nlkg_dispersion.errors import DomainError, NonConvergence
from nlkg_dispersion.model import Duffing, PureQuartic, SineGordon
from nlkg_dispersion.oracle import (
    OdeConfig,
    PeriodResult,
    QuadratureConfig,
    _gl_nodes,
    omega_exact,
    omega_exact_sine_gordon,
    period_ode,
    period_quadrature,
)


def rel(a, b):
    return abs(a / b - 1.0)


# frozen 40-digit oracle values, rounded to double
DUFFING_OMEGA = {0.5: None, 1.0: 1.3177760649655266, 10.0: 2.8666401366324052,
                 100.0: 8.53358618899868, 1e4: 84.72747993609816}
SG_OMEGA = {0.5: 0.9843948500239019, 1.0: 0.9377922580514284,
            2.0: 0.7524995484505216, 3.0: 0.38891832469031096}


class TestQuadrature:
    def test_harmonic_limit(self):
        pr = period_quadrature(Duffing(0.0), 1.7)
        assert abs(pr.T - 2.0 * math.pi) < 1e-12

    @pytest.mark.parametrize("q", [1.0, 10.0, 100.0, 1e4])
    def test_duffing_pins(self, q):
        om = omega_exact(Duffing(1.0), math.sqrt(q)).omega_cap
        assert rel(om, DUFFING_OMEGA[q]) < 1e-12

    def test_duffing_softening_pin(self):
        om = omega_exact(Duffing(-0.5), 1.0).omega_cap
        assert rel(om, 0.784552901434661) < 1e-12

    def test_pure_quartic_pin(self):
        pr = period_quadrature(PureQuartic(1.0), 1.0)
        assert rel(pr.T, 7.4162987092054875) < 1e-12
        om = omega_exact(PureQuartic(1.0), 1.0).omega_cap
        assert rel(om, 0.847213084793979) < 1e-12

    def test_sine_gordon_is_four_k(self):
        # T = 4*K(sin^2(A/2)): quadrature against the AGM closed form
        pr = period_quadrature(SineGordon(), math.pi / 2)
        assert rel(pr.T, 4.0 * agm_K(0.5)) < 1e-12

    @pytest.mark.parametrize("A", [0.5, 1.0, 2.0, 3.0])
    def test_sine_gordon_agrees_with_elliptic(self, A):
        om_quad = omega_exact(SineGordon(), A).omega_cap
        om_ell = omega_exact_sine_gordon(A).omega_cap
        assert rel(om_quad, om_ell) < 1e-9

    def test_result_shape(self):
        res = omega_exact(Duffing(1.0), 1.0)
        assert res.method.label == "exact"
        assert isinstance(res.diagnostics, PeriodResult)
        assert res.diagnostics.estimated_error <= 1e-12
        assert rel(res.omega_cap * res.diagnostics.T, 2.0 * math.pi) < 1e-15

    def test_loose_tolerance_honored(self):
        pr = period_quadrature(Duffing(1.0), 1.0, QuadratureConfig(abs_tol=1e-6))
        assert pr.estimated_error <= 1e-6
        assert rel(pr.T, 2.0 * math.pi / 1.3177760649655266) < 1e-6

    def test_sub_ulp_tolerance_converges_on_smooth_integrand(self):
        # successive levels eventually round to the same double, so even an
        # absurd tolerance is met exactly (estimated_error == 0)
        pr = period_quadrature(Duffing(1.0), 1.0, QuadratureConfig(abs_tol=1e-30))
        assert pr.estimated_error == 0.0
        assert rel(pr.T, 2.0 * math.pi / 1.3177760649655266) < 1e-14

    def test_node_budget_exhaustion_near_separatrix(self):
        # approaching A = pi the period diverges and Gauss-Legendre stalls;
        # a sub-converged tolerance must surface as NonConvergence, not a
        # silently wrong value
        with pytest.raises(NonConvergence):
            period_quadrature(SineGordon(), 3.14, QuadratureConfig(abs_tol=1e-15))

    def test_config_validation(self):
        with pytest.raises(ValueError):
            period_quadrature(Duffing(1.0), 1.0, QuadratureConfig(abs_tol=0.0))
        with pytest.raises(ValueError):
            period_quadrature(Duffing(1.0), 1.0, QuadratureConfig(max_refinements=0))

    def test_domain(self):
        with pytest.raises(DomainError):
            period_quadrature(Duffing(-1.0), 1.0)
        with pytest.raises(DomainError):
            period_quadrature(SineGordon(), 3.5)
        with pytest.raises(DomainError):
            period_quadrature(PureQuartic(-1.0), 1.0)

    def test_kernel_flags_left_domain(self):
        # outside the turning-point domain the radicand goes negative and
        # the kernel reports NaN (the public API never gets this far)
        phis, wts = _gl_nodes(16)
        assert math.isnan(_kernels.period_sum(0, -1.0, 2.0, phis, wts))


class TestMonotonicity:
    def test_duffing_hardening_increases(self):
        oms = [omega_exact(Duffing(1.0), A).omega_cap for A in (0.5, 1.0, 2.0, 4.0)]
        assert all(b > a for a, b in zip(oms, oms[1:]))

    def test_sine_gordon_decreases(self):
        oms = [omega_exact(SineGordon(), A).omega_cap for A in (0.5, 1.5, 2.5, 3.0)]
        assert all(b < a for a, b in zip(oms, oms[1:]))

    @pytest.mark.parametrize("c", [2.0, 5.0])
    def test_pure_quartic_scaling(self, c):
        base = omega_exact(PureQuartic(1.0), 1.0).omega_cap
        assert rel(omega_exact(PureQuartic(1.0), c).omega_cap, c * base) < 1e-9


class TestOde:
    @pytest.mark.parametrize(
        "potential,A",
        [(Duffing(1.0), 1.0), (Duffing(-0.5), 1.0), (SineGordon(), 2.0), (PureQuartic(1.0), 1.0)],
    )
    def test_agrees_with_quadrature(self, potential, A):
        T_ode = period_ode(potential, A).T
        T_quad = period_quadrature(potential, A).T
        assert rel(T_ode, T_quad) < 1e-6

    def test_polish_tolerance(self):
        pr = period_ode(Duffing(1.0), 1.0)
        assert pr.estimated_error <= 1e-10

    def test_custom_step(self):
        # a coarser explicit step still converges, just less accurately
        pr = period_ode(Duffing(1.0), 1.0, OdeConfig(step=1e-3))
        assert rel(pr.T, 2.0 * math.pi / 1.3177760649655266) < 1e-5

    def test_step_budget(self):
        with pytest.raises(NonConvergence):
            period_ode(Duffing(1.0), 1.0, OdeConfig(max_steps=10))

    def test_config_validation(self):
        with pytest.raises(ValueError):
            period_ode(Duffing(1.0), 1.0, OdeConfig(max_steps=0))
        with pytest.raises(ValueError):
            period_ode(Duffing(1.0), 1.0, OdeConfig(step=-1.0))
        with pytest.raises(ValueError):
            period_ode(Duffing(1.0), 1.0, OdeConfig(step=float("nan")))

    def test_domain(self):
        with pytest.raises(DomainError):
            period_ode(SineGordon(), 3.2)


class TestSineGordonClosedForm:
    @pytest.mark.parametrize("A", [0.5, 1.0, 2.0, 3.0])
    def test_pins(self, A):
        assert rel(omega_exact_sine_gordon(A).omega_cap, SG_OMEGA[A]) < 1e-14

    def test_quarter_turn_value(self):
        assert rel(omega_exact_sine_gordon(math.pi / 2).omega_cap, 0.8472130847939792) < 1e-14

    def test_domain(self):
        for A in (0.0, math.pi, 3.5):
            with pytest.raises(DomainError):
                omega_exact_sine_gordon(A)


@pytest.mark.skipif(_kernels.BACKEND != "compiled", reason="compiled backend not active")
class TestBackendParity:
    """The Cython kernels and the pure-Python fallback must agree."""

    def test_period_sum(self):
        from nlkg_dispersion._kernels import _fallback

        phis, wts = _gl_nodes(64)
        for pot, mu, A in [(0, 1.0, 1.0), (0, -0.5, 1.0), (1, 0.0, 2.0), (2, 1.0, 1.0)]:
            fast = _kernels.period_sum(pot, mu, A, phis, wts)
            slow = _fallback.period_sum(pot, mu, A, phis, wts)
            assert rel(fast, slow) < 1e-13

    def test_rk4_period(self):
        from nlkg_dispersion._kernels import _fallback

        for pot, mu, A in [(0, 1.0, 1.0), (1, 0.0, 2.0), (2, 1.0, 1.0)]:
            h = 1e-4 * 2.0 * math.pi
            fast = _kernels.rk4_period(pot, mu, A, h, 1_000_000)
            slow = _fallback.rk4_period(pot, mu, A, h, 1_000_000)
            assert fast[0] == slow[0] == 0
            assert rel(fast[1], slow[1]) < 1e-12

    def test_nan_passthrough(self):
        from nlkg_dispersion._kernels import _fallback

        phis, wts = _gl_nodes(16)
        assert math.isnan(_fallback.period_sum(0, -1.0, 2.0, phis, wts))
