import pytest
from hypothesis import given, strategies as st

from fracfun import discrete_families as df
from fracfun.errors import DomainError

from . import oracles as O

PARAMS = {
    "charlier": dict(a=1.5),
    "meixner": dict(beta=1.2, c=0.4),
    "krawtchouk": dict(p=0.3, N=8),
    "hahn": dict(alpha=0.3, beta=0.7, N=6),
}


def spec(family, mu, **kw):
    return df.DiscreteFamilySpec(family, mu, **(kw or PARAMS[family]))


class TestCharlier:
    def test_x_zero(self):
        assert df.frac_charlier(0.37, 2.0, 0) == 1

    @pytest.mark.parametrize("x", range(6))
    def test_degree_one(self, x):
        assert df.frac_charlier(1, 2.5, x) == pytest.approx(1 - x / 2.5, abs=1e-15)

    def test_x_one(self):
        assert df.frac_charlier(0.3, 1.5, 1) == pytest.approx(1 - 0.3 / 1.5, abs=1e-15)

    def test_hand_difference(self):
        assert df.frac_charlier_rodrigues(1, 2, 2) == 0
        assert df.frac_charlier(1, 2, 2) == 0

    @pytest.mark.parametrize("x", range(6))
    def test_rodrigues_identity(self, x):
        assert df.frac_charlier_rodrigues(0, 1.7, x) == pytest.approx(1, abs=1e-15)

    def test_oracle(self):
        for x, ref in enumerate(O.CHARLIER_05_15):
            assert df.frac_charlier(0.5, 1.5, x) == pytest.approx(ref, abs=1e-10)
            assert df.frac_charlier_rodrigues(0.5, 1.5, x) == pytest.approx(ref, abs=1e-10)

    def test_zero_parameter(self):
        with pytest.raises(DomainError):
            df.frac_charlier(0.5, 0, 2)


class TestMeixner:
    @pytest.mark.parametrize("x", range(5))
    def test_order_zero(self, x):
        assert df.frac_meixner(0, 1.2, 0.4, x) == pytest.approx(1, abs=1e-15)

    def test_x_zero(self):
        assert df.frac_meixner(0.7, 1.2, 0.4, 0) == 1

    def test_oracle(self):
        for x, ref in enumerate(O.MEIXNER_05_12_04):
            assert df.frac_meixner(0.5, 1.2, 0.4, x) == pytest.approx(ref, rel=1e-9)
            assert df.frac_meixner_rodrigues(0.5, 1.2, 0.4, x) == pytest.approx(ref, rel=1e-9)

    def test_degree_one(self):
        beta, c, x = 1.2, 0.4, 3
        expect = 1 + (1 - 1 / c) * x / beta
        assert df.frac_meixner(1, beta, c, x) == pytest.approx(expect, rel=1e-13)


class TestKrawtchouk:
    @pytest.mark.parametrize("x", range(9))
    def test_order_zero(self, x):
        assert df.frac_krawtchouk(0, 0.3, 8, x) == pytest.approx(1, abs=1e-15)

    def test_x_zero(self):
        assert df.frac_krawtchouk(0.6, 0.3, 8, 0) == 1

    def test_oracle(self):
        for x, ref in enumerate(O.KRAWTCHOUK_05_03_8):
            assert df.frac_krawtchouk(0.5, 0.3, 8, x) == pytest.approx(ref, rel=1e-9)
            assert df.frac_krawtchouk_rodrigues(0.5, 0.3, 8, x) == pytest.approx(ref, rel=1e-9)

    def test_degree_one(self):
        p, N, x = 0.3, 8, 5
        assert df.frac_krawtchouk(1, p, N, x) == pytest.approx(1 - x / (p * N), rel=1e-13)

    def test_domain(self):
        with pytest.raises(DomainError):
            df.frac_krawtchouk(0.5, 0.3, 8, 9)
        with pytest.raises(DomainError):
            df.frac_krawtchouk(0.5, 1.0, 8, 2)


class TestHahn:
    @pytest.mark.parametrize("x", range(7))
    def test_order_zero(self, x):
        assert df.frac_hahn(0, 0.3, 0.7, 6, x) == pytest.approx(1, abs=1e-13)
        assert df.frac_hahn_rodrigues(0, 0.3, 0.7, 6, x) == pytest.approx(1, abs=1e-13)

    @pytest.mark.parametrize("N", [2, 4, 7])
    def test_degree_one(self, N):
        al, be = 0.3, 0.7
        for x in range(N + 1):
            expect = 1 - (al + be + 2) * x / ((al + 1) * N)
            assert df.frac_hahn(1, al, be, N, x) == pytest.approx(expect, abs=1e-12)

    def test_oracle(self):
        for x, ref in enumerate(O.HAHN_05_03_07_6):
            assert abs(df.frac_hahn(0.5, 0.3, 0.7, 6, x) - ref) <= 1e-8 * max(1, abs(ref))
            assert abs(df.frac_hahn_rodrigues(0.5, 0.3, 0.7, 6, x) - ref) <= 1e-8 * max(1, abs(ref))

    def test_x_zero_is_prefactor(self):
        val = df.frac_hahn(0.5, 0.3, 0.7, 6, 0)
        assert abs(val - df.frac_hahn_rodrigues(0.5, 0.3, 0.7, 6, 0)) < 1e-12

    def test_normalization_positive(self):
        assert df.hahn_normalization(0.5, 0.7, 6) > 0

    def test_domain(self):
        with pytest.raises(DomainError):
            df.frac_hahn(0.5, 0.3, 0.7, 6, 7)
        with pytest.raises(DomainError):
            df.frac_hahn(0.5, 0.3, 0.7, 0, 0)


class TestSpec:
    @pytest.mark.parametrize("family", sorted(PARAMS))
    def test_terms_used(self, family):
        for x in range(5):
            assert spec(family, 0.5).closed_form(x).terms_used == x + 1

    @pytest.mark.parametrize("family", sorted(PARAMS))
    def test_first_degree_matches_classical(self, family):
        s = spec(family, 1)
        assert s.rodrigues(1) == pytest.approx(s.classical(1), abs=1e-13)
        assert s.closed_form(1).value == pytest.approx(s.classical(1), abs=1e-13)

    @pytest.mark.parametrize("family", sorted(PARAMS))
    def test_classical_limits(self, family):
        for n in range(6):
            s = spec(family, n)
            top = min(10, s.N or 10)
            for x in range(top + 1):
                ref = s.classical(x)
                assert abs(s.closed_form(x).value - ref) <= 1e-10 * max(1, abs(ref))

    def test_missing_parameters(self):
        with pytest.raises(DomainError):
            df.DiscreteFamilySpec("meixner", 0.5, beta=1.0)
        with pytest.raises(DomainError):
            df.DiscreteFamilySpec("laguerre", 0.5)

    def test_non_integer_x(self):
        with pytest.raises(DomainError):
            spec("charlier", 0.5).closed_form(1.5)
        with pytest.raises(DomainError):
            spec("charlier", 0.5).closed_form(-1)

    def test_relative_gap(self):
        assert df.relative_gap(2.0, 2.0) == 0
        assert df.relative_gap(0.0, 1e-3) == pytest.approx(1e-3)


mu_s = st.floats(0.01, 0.99)


@given(mu_s, st.floats(0.3, 4), st.integers(0, 15))
def test_dual_path_charlier(mu, a, x):
    assert df.relative_gap(df.frac_charlier(mu, a, x), df.frac_charlier_rodrigues(mu, a, x)) <= 1e-8


@given(mu_s, st.floats(0.3, 3), st.floats(0.2, 0.9), st.integers(0, 15))
def test_dual_path_meixner(mu, beta, c, x):
    u, v = df.frac_meixner(mu, beta, c, x), df.frac_meixner_rodrigues(mu, beta, c, x)
    assert df.relative_gap(u, v) <= 1e-8


@given(mu_s, st.floats(0.1, 0.9), st.integers(1, 15), st.data())
def test_dual_path_krawtchouk(mu, p, N, data):
    x = data.draw(st.integers(0, N))
    u, v = df.frac_krawtchouk(mu, p, N, x), df.frac_krawtchouk_rodrigues(mu, p, N, x)
    assert df.relative_gap(u, v) <= 1e-8


@given(mu_s, st.floats(0, 2), st.floats(0, 2), st.integers(1, 15), st.data())
def test_dual_path_hahn(mu, al, be, N, data):
    x = data.draw(st.integers(0, N))
    u, v = df.frac_hahn(mu, al, be, N, x), df.frac_hahn_rodrigues(mu, al, be, N, x)
    assert df.relative_gap(u, v) <= 1e-8
