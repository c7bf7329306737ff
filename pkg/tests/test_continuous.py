import math

import pytest
from hypothesis import assume, given, strategies as st

from fracfun import continuous as fc
from fracfun.errors import DomainError

from . import oracles as O

SQRT_PI = math.sqrt(math.pi)


def rel(u, v):
    return abs(u - v) / max(1.0, abs(v))


class TestIntegral:
    def test_ordinary(self):
        assert fc.rl_integral(lambda t: 1.0, 1, 2.0) == pytest.approx(2, rel=1e-14)

    def test_constant_half(self):
        assert fc.rl_integral(lambda t: 1.0, 0.5, 1.0) == pytest.approx(1 / math.gamma(1.5), rel=1e-12)

    def test_linear_half(self):
        assert fc.rl_integral(lambda t: t, 0.5, 1.0) == pytest.approx(1 / math.gamma(2.5), rel=1e-12)

    def test_order_above_one(self):
        val = fc.rl_integral(fc.power_function(1.5), 2.3, 1.7)
        assert val == pytest.approx(fc.rl_integral_power_rule(1.5, 2.3, 0.0, 1.7), rel=1e-11)

    def test_shifted_lower_limit(self):
        f = fc.power_function(0.5, a=-1.0)
        assert fc.rl_integral(f, 0.4, 0.5) == pytest.approx(
            fc.rl_integral_power_rule(0.5, 0.4, -1.0, 0.5), rel=1e-11)

    def test_domain(self):
        with pytest.raises(DomainError):
            fc.rl_integral(math.exp, 0.5, -1.0)
        with pytest.raises(DomainError):
            fc.rl_integral(math.exp, -0.5, 1.0)


class TestRLDerivative:
    def test_power(self):
        assert fc.rl_derivative(fc.power_function(2), 0.5, 1.0) == pytest.approx(2 / math.gamma(2.5), rel=1e-9)

    def test_constant_is_not_annihilated(self):
        assert fc.rl_derivative(lambda t: 1.0, 0.5, 1.0) == pytest.approx(1 / SQRT_PI, rel=1e-9)

    @pytest.mark.parametrize("x", [0.5, 1.3])
    def test_integer_order(self, x):
        f = fc.SmoothFunction(lambda t: t * t, derivatives=(lambda t: 2 * t,))
        assert fc.rl_derivative(f, 1, x) == pytest.approx(2 * x, rel=1e-13)

    def test_order_between_two_and_three(self):
        f = fc.power_function(3.4)
        assert fc.rl_derivative(f, 2.6, 1.2) == pytest.approx(fc.rl_power_rule(3.4, 2.6, 0, 1.2), rel=1e-8)

    def test_exponential_against_quadrature_oracle(self):
        assert fc.rl_derivative(fc.exponential_function(), 0.5, 0.5) == pytest.approx(O.RL_EXP_05_05, rel=1e-9)


class TestCaputo:
    @pytest.mark.parametrize("nu", [0.2, 0.5, 0.9, 1.5])
    def test_constant(self, nu):
        f = fc.SmoothFunction(lambda t: 3.0, nth=lambda k, t: 0.0)
        assert fc.caputo_derivative(f, nu, 1.4) == 0

    def test_linear(self):
        assert fc.caputo_derivative(fc.power_function(1), 0.5, 1.0) == pytest.approx(2 / SQRT_PI, rel=1e-12)

    def test_exponential(self):
        assert fc.caputo_derivative(fc.exponential_function(), 0.5, 0.5) == pytest.approx(O.CAPUTO_EXP_05_05, rel=1e-10)

    def test_finite_difference_fallback(self):
        # no derivatives supplied: f' comes from central differences
        val = fc.caputo_derivative(math.exp, 0.5, 0.5)
        assert val == pytest.approx(O.CAPUTO_EXP_05_05, rel=1e-7)

    def test_relation_to_rl(self):
        f = fc.power_function(1.7)
        lhs = fc.rl_derivative(f, 0.6, 1.1) - fc.rl_caputo_correction(f, 0.6, 1.1)
        assert lhs == pytest.approx(fc.caputo_derivative(f, 0.6, 1.1), rel=1e-8)

    def test_relation_to_rl_exponential(self):
        f = fc.exponential_function()
        lhs = fc.rl_derivative(f, 0.5, 0.5) - fc.rl_caputo_correction(f, 0.5, 0.5)
        assert lhs == pytest.approx(O.CAPUTO_EXP_05_05, rel=1e-7)

    def test_order_zero_rejected(self):
        with pytest.raises(DomainError):
            fc.caputo_derivative(math.exp, 0.0, 1.0)


class TestPowerRules:
    def test_rl(self):
        assert fc.rl_power_rule(2, 0.5, 0, 1) == pytest.approx(2 / math.gamma(2.5), rel=1e-15)
        assert fc.rl_power_rule(0, 0.5, 0, 1) == pytest.approx(1 / SQRT_PI, rel=1e-15)

    def test_integer_first_derivative(self):
        assert fc.caputo_power_rule(1, 1, 0, 2.5) == pytest.approx(1, rel=1e-15)

    @pytest.mark.parametrize("n,nu,x", [(1, 0.5, 1.2), (2, 0.3, 0.7), (3, 1.5, 2.0)])
    def test_even_powers(self, n, nu, x):
        expect = math.gamma(2 * n + 1) / math.gamma(2 * n - nu + 1) * x ** (2 * n - nu)
        assert fc.caputo_power_rule(2 * n, nu, 0, x) == pytest.approx(expect, rel=1e-14)

    def test_half_order_square(self):
        assert fc.caputo_power_rule(2, 0.5, 0, 1) == pytest.approx(1.5045055561, rel=1e-10)

    def test_caputo_kills_low_integer_powers(self):
        assert fc.caputo_power_rule(1, 1.5, 0, 2.0) == 0

    def test_caputo_domain(self):
        with pytest.raises(DomainError):
            fc.caputo_power_rule(-0.8, 0.5, 0, 1)

    def test_rl_domain(self):
        with pytest.raises(DomainError):
            fc.rl_power_rule(-1.5, 0.5, 0, 1)


class TestAnalyticSeries:
    def test_constant(self):
        r = fc.rl_derivative_analytic_series([2.0], 0.4, 1.3)
        assert r.value == pytest.approx(2 * 1.3 ** -0.4 / math.gamma(0.6), rel=1e-15)

    def test_linear(self):
        r = fc.rl_derivative_analytic_series([0.0, 1.0], 0.4, 1.3)
        assert r.value == pytest.approx(1.3 ** 0.6 / math.gamma(1.6), rel=1e-15)

    def test_exponential(self):
        r = fc.rl_derivative_analytic_series(lambda k: 1.0, 0.5, 0.5)
        assert r.value == pytest.approx(O.RL_EXP_05_05, rel=1e-13)


class TestProductRule:
    def test_unit_g(self):
        g = fc.SmoothFunction(lambda t: 1.0, nth=lambda k, t: 0.0)
        frac_f = lambda order, x: fc.rl_power_rule(1.5, order, 0, x)
        r = fc.rl_product_rule(frac_f, g, 0.5, 0.8)
        assert r.value == pytest.approx(fc.rl_power_rule(1.5, 0.5, 0, 0.8), rel=1e-15)

    def test_classical(self):
        g = fc.power_function(1)
        frac_f = lambda order, x: fc.rl_power_rule(1, order, 0, x)
        assert fc.rl_product_rule(frac_f, g, 1, 0.7).value == pytest.approx(1.4, rel=1e-14)

    def test_weight_product_against_quadrature(self):
        nu, al, be = 0.5, 0.5, 0.5
        f = lambda order, x: fc.rl_power_rule(nu + be, order, -1.0, x)
        q = nu + al
        g = fc.SmoothFunction(
            lambda s: (1 - s) ** q, a=-1.0,
            nth=lambda k, s: (-1) ** k * math.prod(q - i for i in range(k)) * (1 - s) ** (q - k))
        r = fc.rl_product_rule(f, g, nu, 0.0)
        assert r.value == pytest.approx(O.CAPUTO_JACOBI_PRODUCT, abs=1e-6)


class TestGaussian:
    @pytest.mark.parametrize("nu", [0.25, 0.5, 0.75])
    @pytest.mark.parametrize("x", [0.5, 1.0, 2.0])
    def test_caputo_closed_form(self, nu, x):
        assert fc.caputo_exp_minus_x2(nu, x) == pytest.approx(O.CAPUTO_GAUSS[(nu, x)], abs=1e-12)

    @pytest.mark.parametrize("nu", [0.25, 0.5, 0.75])
    @pytest.mark.parametrize("x", [0.5, 1.0, 2.0])
    def test_rl_closed_form(self, nu, x):
        assert fc.rl_exp_minus_x2(nu, x) == pytest.approx(O.RL_GAUSS[(nu, x)], abs=1e-12)

    @pytest.mark.parametrize("x", [1.0, 2.0])
    def test_caputo_quadrature_path(self, x):
        q = fc.caputo_derivative(fc.gaussian_function(), 0.5, x)
        assert q == pytest.approx(fc.caputo_exp_minus_x2(0.5, x), abs=1e-7)

    def test_small_x_behaviour(self):
        x, nu = 1e-6, 0.4
        assert fc.rl_exp_minus_x2(nu, x) == pytest.approx(x ** -nu / math.gamma(1 - nu), rel=1e-9)

    def test_higher_order(self):
        # between 1 and 2 the Caputo series starts at k0 = 1
        q = fc.caputo_derivative(fc.gaussian_function(), 1.5, 1.0)
        assert q == pytest.approx(fc.caputo_exp_minus_x2(1.5, 1.0), abs=1e-7)

    def test_integer_order(self):
        assert fc.caputo_exp_minus_x2(1, 0.7) == pytest.approx(-1.4 * math.exp(-0.49), rel=1e-14)


def test_fractional_order_metadata():
    o = fc.FractionalOrder(1.3)
    assert o.n == 2 and not o.is_integer
    assert fc.FractionalOrder(2.0).n == 2
    assert fc.FractionalOrder(2 + 1e-7).near_integer
    with pytest.raises(DomainError):
        fc.FractionalOrder(-0.3)


def test_central_derivative():
    assert fc.central_derivative(math.sin, 0.4, 2) == pytest.approx(-math.sin(0.4), rel=1e-7)


non_int = st.floats(0.05, 2.95).filter(lambda v: abs(v - round(v)) > 0.05)


@given(st.floats(0.0, 3.0), non_int, st.floats(0.3, 2.5))
def test_power_rule_consistency(beta, nu, x):
    n = math.ceil(nu)
    assume(beta > n - 1 + 0.05)
    f = fc.power_function(beta)
    expect = fc.caputo_power_rule(beta, nu, 0, x)
    assert rel(fc.caputo_derivative(f, nu, x), expect) <= 1e-7
    assert rel(fc.rl_derivative(f, nu, x), fc.rl_power_rule(beta, nu, 0, x)) <= 1e-7


@given(non_int, st.floats(0.3, 2.0))
def test_rl_caputo_relation(nu, x):
    f = fc.exponential_function()
    lhs = fc.rl_derivative(f, nu, x) - fc.rl_caputo_correction(f, nu, x)
    assert rel(lhs, fc.caputo_derivative(f, nu, x)) <= 1e-7


@given(st.floats(0.01, 1.99).filter(lambda v: abs(v - 1) > 0.01), st.floats(-5, 5))
def test_caputo_constant(nu, c):
    f = fc.SmoothFunction(lambda t: c, nth=lambda k, t: 0.0)
    assert abs(fc.caputo_derivative(f, nu, 1.0)) <= 1e-10


@given(st.floats(0.1, 2), st.floats(0.1, 2), st.floats(0, 3), st.floats(0.2, 3))
def test_integral_semigroup(mu, nu, beta, x):
    # J^mu (J^nu t^beta): apply the closed form twice, tracking the coefficient
    c1 = math.gamma(beta + 1) / math.gamma(beta + nu + 1)
    inner = c1 * fc.rl_integral_power_rule(beta + nu, mu, 0, x)
    assert rel(inner, fc.rl_integral_power_rule(beta, mu + nu, 0, x)) <= 1e-8
