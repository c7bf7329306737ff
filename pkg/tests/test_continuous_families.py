import cmath
import math

import pytest
from hypothesis import assume, given, strategies as st

from fracfun import continuous_families as cf
from fracfun.continuous import caputo_exp_minus_x2
from fracfun.errors import DomainError
from fracfun.hypergeom import hyper

from . import oracles as O


def gap(u, v):
    return abs(u - v) / max(1.0, abs(u), abs(v))


class TestClassicalPolynomials:
    @pytest.mark.parametrize("x", [-1.3, 0.0, 0.4, 2.0])
    def test_low_degree(self, x):
        assert cf.hermite_poly(3, x) == pytest.approx(8 * x ** 3 - 12 * x, abs=1e-12)
        assert cf.legendre_poly(2, x) == pytest.approx((3 * x * x - 1) / 2, abs=1e-15)
        assert cf.laguerre_poly(2, 0.0, x) == pytest.approx(1 - 2 * x + x * x / 2, abs=1e-15)
        assert cf.chebyshev_t_poly(3, x) == pytest.approx(4 * x ** 3 - 3 * x, abs=1e-12)
        assert cf.chebyshev_u_poly(2, x) == pytest.approx(4 * x * x - 1, abs=1e-14)
        assert cf.gegenbauer_poly(1, 1.0, x) == pytest.approx(2 * x, abs=1e-15)

    def test_jacobi_degree_one(self):
        a, b, x = 0.3, 1.2, 0.45
        assert cf.jacobi_poly(1, a, b, x) == pytest.approx((a + b + 2) * x / 2 + (a - b) / 2, abs=1e-15)

    def test_dispatch(self):
        assert cf.classical_polynomial("legendre", 2, 0.5) == cf.legendre_poly(2, 0.5)
        with pytest.raises(DomainError):
            cf.classical_polynomial("bessel", 1, 0.5)


class TestHermite:
    @pytest.mark.parametrize("x", [0.3, 1.0, 1.7])
    def test_near_integer_dispatch(self, x):
        assert cf.c_hermite(2 + 1e-7, x) == pytest.approx(4 * x * x - 2, abs=1e-12)

    def test_against_quadrature_oracle(self):
        assert abs(cf.c_hermite(0.5, 1.0) - O.C_HERMITE_05_1) < 1e-12

    def test_modulus(self):
        assert abs(cf.c_hermite(0.5, 1.0)) == pytest.approx(abs(caputo_exp_minus_x2(0.5, 1.0)) * math.e, rel=1e-14)

    def test_small_x_printed_form(self):
        x, nu = 1e-5, 0.3
        val = cf.c_hermite(nu, x, form="printed")
        assert abs(val) == pytest.approx(x ** -nu / math.gamma(1 - nu), rel=1e-8)

    def test_operator(self):
        assert gap(cf.c_hermite_operator(0.5, 1.0), cf.c_hermite(0.5, 1.0)) < 1e-9

    def test_domain(self):
        with pytest.raises(DomainError):
            cf.c_hermite(0.5, -1.0)
        with pytest.raises(DomainError):
            cf.c_hermite(0.5, 1.0, form="other")


class TestLaguerre:
    @pytest.mark.parametrize("alpha", [0.0, 0.7, 2.0])
    def test_degree_one(self, alpha):
        for x in (0.0, 0.5, 3.0):
            assert cf.c_laguerre(1.0, alpha, x) == pytest.approx(alpha + 1 - x, abs=1e-14)
            assert cf.c_laguerre(1 + 1e-6, alpha, x) == pytest.approx(alpha + 1 - x, abs=1e-5)

    def test_at_zero(self):
        nu, al = 0.6, 0.4
        expect = math.gamma(nu + al + 1) / (math.gamma(nu + 1) * math.gamma(al + 1))
        assert cf.c_laguerre(nu, al, 0.0) == pytest.approx(expect, rel=1e-15)

    def test_oracle(self):
        assert cf.c_laguerre(0.5, 0.0, 1.0) == pytest.approx(O.C_LAGUERRE_05_0_1, rel=1e-13)

    def test_ode(self):
        spec = cf.ContinuousFamilySpec("laguerre", 0.5, alpha=0.0)
        assert cf.continuous_ode_residual(spec, 1.0) <= 1e-8
        spec = cf.ContinuousFamilySpec("laguerre", 1.5, alpha=0.5)
        assert cf.continuous_ode_residual(spec, 2.0) <= 1e-8

    def test_derivative_relation_integer(self):
        lhs, rhs = cf.c_laguerre_derivative_relation(1.0, 0.0, 0.8)
        assert lhs == pytest.approx(-1, abs=1e-14) and rhs == pytest.approx(-1, abs=1e-14)

    def test_derivative_relation(self):
        lhs, rhs = cf.c_laguerre_derivative_relation(1.5, 0.2, 0.7)
        assert gap(lhs, rhs) <= 1e-10

    def test_derivative_relation_at_zero(self):
        nu, al = 1.5, 0.2
        expect = -math.gamma(nu + al + 1) / (math.gamma(nu) * math.gamma(al + 2))
        lhs, rhs = cf.c_laguerre_derivative_relation(nu, al, 0.0)
        assert lhs == pytest.approx(expect, rel=1e-14)
        assert rhs == pytest.approx(expect, rel=1e-14)

    def test_operator(self):
        assert gap(cf.c_laguerre_operator(0.5, 0.5, 1.2), cf.c_laguerre(0.5, 0.5, 1.2)) < 1e-8

    def test_domain(self):
        with pytest.raises(DomainError):
            cf.c_laguerre(0.5, -1.0, 1.0)


class TestJacobi:
    def test_degree_one(self):
        a, b, x = 0.3, 1.2, 0.45
        assert cf.c_jacobi(1, a, b, x) == pytest.approx((a + b + 2) * x / 2 + (a - b) / 2, abs=1e-15)

    def test_at_minus_one(self):
        nu, a, b = 0.7, 0.3, 0.6
        pref = cmath.exp(1j * math.pi * nu) * math.gamma(nu + b + 1) / (math.gamma(nu + 1) * math.gamma(b + 1))
        assert abs(cf.c_jacobi(nu, a, b, -1.0) - pref) < 1e-15

    def test_oracles(self):
        assert abs(cf.c_jacobi(0.5, 0.5, 0.5, 0.0) - O.C_JACOBI_05_05_05_0) < 1e-13
        assert abs(cf.c_jacobi(1.5, 0.5, 0.2, -0.3) - O.C_JACOBI_15_05_02_M03) < 1e-13

    def test_ode(self):
        spec = cf.ContinuousFamilySpec("jacobi", 0.5, alpha=0.0, beta=0.0)
        assert cf.continuous_ode_residual(spec, 0.0) <= 1e-8

    def test_kth_derivative_order_zero(self):
        assert cf.c_jacobi_kth_derivative(0.7, 0.2, 0.4, 0.1, 0) == cf.c_jacobi(0.7, 0.2, 0.4, 0.1)

    @pytest.mark.parametrize("x", [-0.5, 0.2, 0.9])
    def test_kth_derivative_classical(self, x):
        assert cf.c_jacobi_kth_derivative(2, 0, 0, x, 1) == pytest.approx(3 * x, abs=1e-14)

    def test_kth_derivative_paths(self):
        lhs = cf.c_jacobi_kth_derivative(1.5, 0.5, 0.5, 0.2, 1)
        rhs = cf.c_jacobi_derivative_series(1.5, 0.5, 0.5, 0.2, 1)
        assert gap(lhs, rhs) <= 1e-9
        assert abs(lhs - O.C_JACOBI_DX_15_05_05_02) < 1e-11

    @pytest.mark.parametrize("x", [-0.5, 0.0, 0.5])
    def test_operator_definition(self, x):
        assert abs(cf.c_jacobi_operator(0.5, 0.5, 0.5, x) - cf.c_jacobi(0.5, 0.5, 0.5, x)) <= 1e-5

    def test_domain(self):
        with pytest.raises(DomainError):
            cf.c_jacobi(0.5, -1.5, 0.0, 0.0)
        with pytest.raises(DomainError):
            cf.c_jacobi_operator(0.5, 0.5, 0.5, 1.0)


class TestGegenbauerChebyshev:
    @pytest.mark.parametrize("x", [-0.6, 0.3, 0.8])
    def test_gegenbauer_degree_one(self, x):
        assert cf.c_gegenbauer(1, 1, x) == pytest.approx(2 * x, abs=1e-15)

    def test_gegenbauer_at_minus_one(self):
        nu, lam = 0.4, 1.3
        pref = cmath.exp(1j * math.pi * nu) * math.gamma(nu + 2 * lam) / (math.gamma(2 * lam) * math.gamma(nu + 1))
        assert abs(cf.c_gegenbauer(nu, lam, -1.0) - pref) < 1e-14

    def test_gegenbauer_oracle(self):
        assert abs(cf.c_gegenbauer(0.5, 1.0, 0.3) - O.C_GEGENBAUER_05_1_03) < 1e-12

    def test_gegenbauer_jacobi_coherence(self):
        for nu, lam, x in [(0.5, 1.0, 0.3), (1.7, 0.8, -0.4), (2.3, 2.5, 0.6)]:
            via_jacobi = cf.gegenbauer_jacobi_ratio(nu, lam) * cf.c_jacobi(nu, lam - 0.5, lam - 0.5, x)
            assert gap(cf.c_gegenbauer(nu, lam, x), via_jacobi) <= 1e-9

    def test_chebyshev_t_degree_one(self):
        assert cf.c_chebyshev_t(1, 0.3) == pytest.approx(0.3 * math.gamma(1.5) / (math.gamma(2) * math.gamma(0.5)), abs=1e-15)

    def test_chebyshev_oracles(self):
        assert abs(cf.c_chebyshev_t(0.5, 0.3) - O.C_CHEBYSHEV_T_05_03) < 1e-13
        assert abs(cf.c_chebyshev_u(0.5, 0.3) - O.C_CHEBYSHEV_U_05_03) < 1e-13

    def test_chebyshev_jacobi_coherence(self):
        for nu, x in [(0.5, 0.3), (2.4, -0.7)]:
            assert gap(cf.c_chebyshev_t(nu, x), cf.c_jacobi(nu, -0.5, -0.5, x)) <= 1e-9
            assert gap(cf.c_chebyshev_u(nu, x), cf.c_jacobi(nu, 0.5, 0.5, x)) <= 1e-9

    def test_chebyshev_at_minus_one(self):
        nu = 0.35
        pref = cmath.exp(1j * math.pi * nu) * math.gamma(nu + 0.5) / (math.gamma(nu + 1) * math.gamma(0.5))
        assert abs(cf.c_chebyshev_t(nu, -1.0) - pref) < 1e-15

    def test_gegenbauer_domain(self):
        with pytest.raises(DomainError):
            cf.c_gegenbauer(0.5, -1.0, 0.0)


class TestLegendre:
    @pytest.mark.parametrize("nu", [0.1, 0.5, 2.7, -0.3])
    def test_at_one(self, nu):
        assert cf.c_legendre(nu, 1.0) == 1

    @pytest.mark.parametrize("x", [-0.4, 0.6])
    def test_degree_one(self, x):
        assert cf.c_legendre(1, x) == pytest.approx(x, abs=1e-15)

    def test_reflection(self):
        assert gap(cf.c_legendre(0.3, 0.5), cf.c_legendre(-1.3, 0.5)) <= 1e-12

    def test_oracles(self):
        assert cf.c_legendre(0.3, 0.5) == pytest.approx(O.LEGENDRE_03_05, rel=1e-13)
        for i, ref in enumerate(O.LEGENDRE_05_GRID):
            assert cf.c_legendre(0.5, -0.9 + 0.3 * i) == pytest.approx(ref, rel=1e-11)

    def test_direct_vs_euler_at_zero(self):
        # (1-z)^(c-a-b) 2F1(c-a, c-b; c; z), the other Euler identity, at z = 1/2
        nu = 0.5
        a, b, c, z = -nu, nu + 1, 1.0, 0.5
        other = (1 - z) ** (c - a - b) * hyper([c - a, c - b], [c], z).value
        assert abs(cf.c_legendre(nu, 0.0) - other) <= 1e-9

    def test_jacobi_form(self):
        nu, x = 0.4, 0.3
        expect = cmath.exp(1j * math.pi * nu) * cf.c_legendre(nu, -x)
        assert abs(cf.c_legendre(nu, x, form="jacobi") - expect) < 1e-13
        assert gap(cf.c_legendre(nu, x, form="jacobi"), cf.c_jacobi(nu, 0, 0, x)) <= 1e-12

    def test_ode(self):
        assert cf.continuous_ode_residual(cf.ContinuousFamilySpec("legendre", 0.5), 0.0) <= 1e-8


class TestSpec:
    def test_unknown_family(self):
        with pytest.raises(DomainError):
            cf.ContinuousFamilySpec("bessel", 0.5)

    def test_evaluate_and_classical(self):
        spec = cf.ContinuousFamilySpec("Jacobi", 2.0, alpha=0.5, beta=0.5)
        assert spec.family == "jacobi"
        assert spec.evaluate(0.3).value == pytest.approx(spec.classical(2, 0.3), abs=1e-15)

    @pytest.mark.parametrize("family", ["laguerre", "jacobi", "gegenbauer", "chebyshev_t", "chebyshev_u", "legendre"])
    def test_integer_ode_residual(self, family):
        spec = cf.ContinuousFamilySpec(family, 3.0, alpha=0.5, beta=0.25, lam=1.5)
        assert cf.continuous_ode_residual(spec, 0.35) <= 1e-6


families = ["laguerre", "jacobi", "gegenbauer", "chebyshev_t", "chebyshev_u", "legendre"]


@given(st.sampled_from(families), st.integers(0, 6), st.sampled_from([-1e-6, 1e-6]),
       st.floats(-0.95, 0.95), st.floats(0, 2), st.floats(0, 2), st.floats(0.5, 2.5))
def test_classical_limit(family, n, eps, x, a, b, lam):
    if family == "laguerre":
        x = 2 * (x + 1)
    spec = cf.ContinuousFamilySpec(family, n + eps, alpha=a, beta=b, lam=lam)
    if n == 0 and eps < 0:
        return
    if family in ("chebyshev_t", "chebyshev_u"):
        scale = cf.chebyshev_t_scale(n) if family == "chebyshev_t" else cf.chebyshev_u_scale(n)
    else:
        scale = 1.0
    expect = scale * spec.classical(n, x)
    assert abs(spec.evaluate(x).value - expect) <= 1e-4 * max(1, abs(expect))


non_int = st.floats(0.05, 4.95).filter(lambda v: abs(v - round(v)) > 0.02)


@given(st.sampled_from(families), non_int, st.floats(-0.9, 0.9), st.floats(-0.5, 2), st.floats(-0.5, 2),
       st.floats(0.5, 2.5))
def test_ode_residuals(family, nu, x, a, b, lam):
    if family == "laguerre":
        x = 2.5 * (x + 1)
        a = max(a, 0)
    spec = cf.ContinuousFamilySpec(family, nu, alpha=a, beta=b, lam=lam)
    y = spec.evaluate(x).value
    assert cf.continuous_ode_residual(spec, x) <= 1e-8 * (1 + abs(y))


@given(non_int, st.floats(-0.5, 2), st.floats(0, 5))
def test_laguerre_derivative_relation(nu, al, x):
    lhs, rhs = cf.c_laguerre_derivative_relation(nu, al, x)
    assert gap(lhs, rhs) <= 1e-10


@given(non_int, st.floats(-0.5, 2), st.floats(-0.5, 2), st.floats(-0.8, 0.8), st.integers(0, 3))
def test_jacobi_derivatives(nu, a, b, x, k):
    lhs = cf.c_jacobi_kth_derivative(nu, a, b, x, k)
    rhs = cf.c_jacobi_derivative_series(nu, a, b, x, k)
    assert gap(lhs, rhs) <= 1e-9


@given(st.floats(0.05, 4).filter(lambda v: abs(v - round(v)) > 1e-3), st.floats(-0.9, 0.99))
def test_legendre_reflection(nu, x):
    assert gap(cf.c_legendre(nu, x), cf.c_legendre(-nu - 1, x)) <= 1e-12


@given(non_int, st.floats(0.5, 2.5), st.floats(-0.9, 0.9))
def test_gegenbauer_coherence(nu, lam, x):
    via_jacobi = cf.gegenbauer_jacobi_ratio(nu, lam) * cf.c_jacobi(nu, lam - 0.5, lam - 0.5, x)
    assert gap(cf.c_gegenbauer(nu, lam, x), via_jacobi) <= 1e-9
