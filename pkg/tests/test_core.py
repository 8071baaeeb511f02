import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from symell import (
    DomainError,
    agm,
    legendre_e,
    legendre_k,
    oracle,
    oracle_rj_pv,
    r_minus1,
    rc,
    rc_pv,
    rd,
    rf,
    rg,
    rj,
    rj_pv,
)
from symell.core import MeanStats, Sym3Args, Sym4Args

mp.mp.dps = 30

positive = st.floats(min_value=1e-3, max_value=1e3)


def rel(a, b):
    return abs(a - b) / max(abs(a), abs(b))


def mp_rc(x, y):
    """High-precision closed forms: the inverse-circular / hyperbolic branches."""
    x, y = mp.mpf(x), mp.mpf(y)
    if x == y:
        return 1 / mp.sqrt(x)
    if x < y:
        return mp.acos(mp.sqrt(x / y)) / mp.sqrt(y - x)
    return mp.log((mp.sqrt(x) + mp.sqrt(x - y)) / mp.sqrt(y)) / mp.sqrt(x - y)


class TestRC:
    def test_diagonal(self):
        assert rc(1.0, 1.0) == 1.0
        assert rel(rc(4.0, 4.0), 0.5) < 1e-15

    def test_zero_first_argument(self):
        assert rc(0.0, 1.0) == pytest.approx(math.pi / 2, rel=1e-15)

    def test_circular_branch(self):
        # acos(sqrt(1/2))/sqrt(1) = pi/4
        assert rc(1.0, 2.0) == pytest.approx(math.pi / 4, rel=1e-14)

    def test_hyperbolic_branch(self):
        assert rc(2.0, 1.0) == pytest.approx(math.log(1 + math.sqrt(2)), rel=1e-14)

    def test_matches_high_precision_closed_forms(self, rng):
        for _ in range(2000):
            x = float(np.exp(rng.uniform(np.log(1e-3), np.log(1e3))))
            y = float(np.exp(rng.uniform(np.log(1e-3), np.log(1e3))))
            assert rel(rc(x, y), float(mp_rc(x, y))) < 1e-13

    def test_near_diagonal_series_region(self, rng):
        for _ in range(500):
            y = float(np.exp(rng.uniform(np.log(1e-3), np.log(1e3))))
            d = float(rng.uniform(-1, 1)) * 10.0 ** float(rng.uniform(-12, -4))
            x = y * (1.0 + d)
            assert rel(rc(x, y), float(mp_rc(x, y))) < 1e-13

    def test_domain(self):
        with pytest.raises(DomainError):
            rc(-1.0, 1.0)
        with pytest.raises(DomainError):
            rc(1.0, 0.0)
        with pytest.raises(DomainError):
            rc(math.inf, 1.0)


class TestRCPrincipalValue:
    def test_zero_numerator(self):
        assert rc_pv(0.0, 1.0) == 0.0

    def test_shifted_form(self):
        expected = math.sqrt(0.5) * rc(2.0, 1.0)
        assert rc_pv(1.0, 1.0) == pytest.approx(expected, rel=1e-15)

    def test_against_principal_value_quadrature(self):
        # symmetric-interval principal value of (1/2)(t+4)^(-1/2)(t-4)^(-1)
        def g(t):
            return 0.5 / math.sqrt(t + 4.0)

        head = quad(g, 0.0, 8.0, weight="cauchy", wvar=4.0,
                    epsabs=0.0, epsrel=1e-12, limit=300)[0]
        tail = quad(lambda t: g(t) / (t - 4.0), 8.0, np.inf,
                    epsabs=1e-14, epsrel=1e-12, limit=300)[0]
        assert rc_pv(4.0, 4.0) == pytest.approx(head + tail, rel=1e-10)

    def test_domain(self):
        with pytest.raises(DomainError):
            rc_pv(1.0, -1.0)


class TestRF:
    def test_equal_arguments(self):
        assert rf(1.0, 1.0, 1.0) == 1.0

    def test_one_zero(self):
        assert rf(0.0, 1.0, 1.0) == pytest.approx(math.pi / 2, rel=1e-14)

    def test_reduction_to_rc(self):
        assert rf(0.01, 0.01, 1.0) == pytest.approx(rc(1.0, 0.01), rel=1e-13)

    def test_against_quadrature(self):
        assert rf(1.0, 2.0, 4.0) == pytest.approx(oracle("RF", (1, 2, 4)), rel=1e-10)

    def test_two_zeros_rejected(self):
        with pytest.raises(DomainError):
            rf(0.0, 0.0, 1.0)

    @given(x=positive, y=positive, z=positive)
    @settings(max_examples=200, deadline=None)
    def test_permutations_bit_identical(self, x, y, z):
        v = rf(x, y, z)
        assert all(
            rf(*p) == v
            for p in [(x, z, y), (y, x, z), (y, z, x), (z, x, y), (z, y, x)]
        )

    @given(x=positive, y=positive, z=positive, k=st.integers(-4, 4))
    @settings(max_examples=200, deadline=None)
    def test_power_of_four_scaling_exact(self, x, y, z, k):
        lam = 4.0 ** k
        assert rf(lam * x, lam * y, lam * z) == 2.0 ** -k * rf(x, y, z)


class TestRD:
    def test_equal_arguments(self):
        assert rd(1.0, 1.0, 1.0) == 1.0

    def test_beta_integral_value(self):
        # (3/2) * B(1/2, 3/2) = 3 pi / 4
        assert rd(0.0, 1.0, 1.0) == pytest.approx(0.75 * math.pi, rel=1e-13)

    def test_against_quadrature(self):
        assert rd(0.0, 2.0, 1.0) == pytest.approx(oracle("RD", (0, 2, 1)), rel=1e-10)

    def test_swap_symmetry(self, rng):
        for _ in range(100):
            x, y, z = np.exp(rng.uniform(-3, 3, 3) * np.log(10))
            assert rd(x, y, z) == rd(y, x, z)

    def test_domain(self):
        with pytest.raises(DomainError):
            rd(1.0, 1.0, 0.0)
        with pytest.raises(DomainError):
            rd(0.0, 0.0, 1.0)


class TestRJ:
    def test_equal_arguments(self):
        assert rj(1.0, 1.0, 1.0, 1.0) == 1.0

    def test_reduces_to_rd(self):
        assert rj(0.0, 1.0, 1.0, 1.0) == pytest.approx(0.75 * math.pi, rel=1e-13)

    def test_against_quadrature(self):
        assert rj(1.0, 2.0, 4.0, 3.0) == pytest.approx(oracle("RJ", (1, 2, 4, 3)), rel=1e-9)

    def test_p_equal_argument_delegates_exactly(self, rng):
        for _ in range(50):
            x, y, z = np.exp(rng.uniform(-3, 3, 3) * np.log(10))
            assert rj(x, y, z, z) == rd(x, y, z)
            assert rj(x, y, z, x) == rd(y, z, x)

    def test_domain(self):
        with pytest.raises(DomainError):
            rj(1.0, 2.0, 3.0, 0.0)
        with pytest.raises(DomainError):
            rj(1.0, 2.0, 3.0, -1.0)  # caller must use rj_pv


class TestRJPrincipalValue:
    def test_equal_arguments(self):
        # q = y makes the first right-side term vanish
        expected = (-3.0 * rf(1, 1, 1)
                    + 3.0 * math.sqrt(1.0 / 1.5) * rc(1.5, 0.5)) / 1.5
        assert rj_pv(1.0, 1.0, 1.0, -0.5) == pytest.approx(expected, rel=1e-13)
        assert expected == pytest.approx(-0.128, abs=5e-4)

    def test_against_principal_value_quadrature(self):
        assert rj_pv(1.0, 2.0, 4.0, -1.0) == pytest.approx(
            oracle_rj_pv(1.0, 2.0, 4.0, -1.0), rel=1e-8)

    def test_fuzz_against_quadrature(self, rng):
        for _ in range(25):
            x, y, z = np.exp(rng.uniform(-1, 1, 3) * np.log(10))
            p = -float(np.exp(rng.uniform(-1, 1) * np.log(10)))
            assert rj_pv(x, y, z, p) == pytest.approx(
                oracle_rj_pv(x, y, z, p), rel=1e-8, abs=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            rj_pv(0.0, 1.0, 1.0, -1.0)
        with pytest.raises(DomainError):
            rj_pv(1.0, 1.0, 1.0, 1.0)


class TestRG:
    def test_equal_arguments(self):
        assert rg(1.0, 1.0, 1.0) == 1.0

    def test_complete_value(self):
        assert rg(0.0, 1.0, 1.0) == pytest.approx(math.pi / 4, rel=1e-14)
        assert rg(1.0, 1.0, 0.0) == pytest.approx(math.pi / 4, rel=1e-14)

    def test_against_quadrature(self):
        assert rg(1.0, 2.0, 4.0) == pytest.approx(oracle("RG", (1, 2, 4)), rel=1e-10)

    def test_two_zero_limit(self):
        assert rg(0.0, 0.0, 4.0) == 1.0

    @given(x=positive, y=positive, z=positive)
    @settings(max_examples=100, deadline=None)
    def test_permutations_bit_identical(self, x, y, z):
        v = rg(x, y, z)
        assert rg(z, y, x) == v and rg(y, z, x) == v


class TestAuxiliary:
    def test_r_minus1_unit(self):
        assert r_minus1(1.0, 1.0, 1.0) == pytest.approx(1.0, rel=1e-14)

    def test_r_minus1_equal_arguments(self, rng):
        for _ in range(50):
            x = float(np.exp(rng.uniform(-3, 3) * np.log(10)))
            assert r_minus1(x, x, x) == pytest.approx(1.0 / x, rel=1e-13)

    def test_r_minus1_against_quadrature(self):
        assert r_minus1(1.0, 4.0, 2.0) == pytest.approx(oracle("Rm1", (1, 4, 2)), rel=1e-10)

    def test_agm_fixed_point(self):
        assert agm(1.0, 1.0) == 1.0

    def test_agm_one_step_invariance(self, rng):
        for _ in range(200):
            u, v = np.exp(rng.uniform(-6, 6, 2) * np.log(10))
            a = agm(u, v)
            b = agm((u + v) / 2.0, math.sqrt(u * v))
            assert rel(a, b) < 5e-16 or a == b

    def test_agm_links_to_complete_rf(self):
        lhs = math.pi / (2.0 * agm(1.0, math.sqrt(2.0)))
        assert lhs == pytest.approx(rf(0.0, 1.0, 2.0), rel=1e-12)
        assert lhs == pytest.approx(oracle("RF", (0, 1, 2)), rel=1e-10)

    def test_legendre_endpoints(self):
        assert legendre_k(0.0) == pytest.approx(math.pi / 2, rel=1e-15)
        assert legendre_e(0.0) == pytest.approx(math.pi / 2, rel=1e-15)
        assert legendre_e(1.0) == 1.0

    def test_legendre_difference_identity(self):
        k = 0.8
        lhs = legendre_k(k) - legendre_e(k)
        rhs = k * k / 3.0 * rd(0.0, 1.0 - k * k, 1.0)
        assert rel(lhs, rhs) < 1e-12

    def test_legendre_domain(self):
        with pytest.raises(DomainError):
            legendre_k(1.0)
        with pytest.raises(DomainError):
            legendre_e(1.5)


class TestArgumentTypes:
    def test_sym3_rejects_two_zeros(self):
        with pytest.raises(DomainError):
            Sym3Args(0.0, 0.0, 1.0)

    def test_sym4_rejects_zero_p(self):
        with pytest.raises(DomainError):
            Sym4Args(1.0, 2.0, 3.0, 0.0)

    def test_mean_chain_three_variables(self, rng):
        for _ in range(300):
            x, y, z = np.exp(rng.uniform(-4, 4, 3) * np.log(10))
            m = MeanStats.of_triple(x, y, z)
            assert m.h <= m.g * (1 + 1e-14)
            assert m.g <= m.b * (1 + 1e-14)
            assert m.b <= m.a * (1 + 1e-14)
        eq = MeanStats.of_triple(3.0, 3.0, 3.0)
        assert eq.h == pytest.approx(eq.a, rel=1e-15)

    def test_mean_chain_two_variables(self):
        m = MeanStats.of_pair(1.0, 4.0)
        assert m.h <= m.g <= m.a
        assert m.g == 2.0

    def test_j4_means(self):
        m = MeanStats.of_j4(1.0, 1.0)
        assert m.b == pytest.approx(math.sqrt(9.0) / 2.0)
        assert m.d == pytest.approx(1.0)
