import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperstrip import elliptic
from hyperstrip.elliptic import (
    arcsn,
    ellint_F,
    ellint_K,
    ellint_Kprime,
    ellint_Pi_amp,
    ellint_Pi_arg,
    jacobi_am,
    jacobi_ratio,
    jacobi_sn_cn_dn,
)
from hyperstrip.errors import PoleError

import oracles

HALF_PI = 0.5 * math.pi

# Reference values, frozen from the independent oracles (AGM iteration for the
# complete integrals, adaptive quadrature of the defining integrals for the
# rest); the same oracles are also exercised at runtime further down.
K_HALF = 1.8540746773013719  # K(0.5) = pi / (2 agm(1, sqrt(0.5)))
F_1_HALF = 1.0832167728451688  # F(1.0|0.5)
PI_COMPLETE = 1.6425329038895019  # Pi(-0.25; pi/2|0.5)
PI_ARG_K04 = 1.4328558850846515  # Pi(-0.5; K(0.4)|0.4)
ARCSN_HALF = 0.52823489931427845  # arcsn(0.5|0.2)
SN_08_04 = 0.6962608593364515
CN_08_04 = 0.7177888378597609
DN_08_04 = 0.8978242179304513
CS_05_025 = 1.8521840214250580  # cn(0.5|0.25)/sn(0.5|0.25)
AM_12_06 = 1.0709149028174500  # theta with F(theta|0.6) = 1.2


class TestEllintK:
    def test_m_zero_is_half_pi(self):
        assert ellint_K(0.0) == pytest.approx(HALF_PI, abs=1e-15)

    def test_agm_reference_value(self):
        assert ellint_K(0.5) == pytest.approx(K_HALF, rel=1e-14)

    def test_large_m_finite_and_monotone(self):
        k99 = ellint_K(0.99)
        assert math.isfinite(k99)
        assert k99 > ellint_K(0.5)
        grid = [i / 50 * 0.99 for i in range(51)]
        values = [ellint_K(m) for m in grid]
        assert all(b > a for a, b in zip(values, values[1:]))

    @pytest.mark.parametrize("m", [-0.1, 1.0, 1.5, math.inf])
    def test_domain_errors(self, m):
        with pytest.raises(ValueError):
            ellint_K(m)


class TestEllintKprime:
    def test_m_one(self):
        assert ellint_Kprime(1.0) == pytest.approx(HALF_PI, abs=1e-15)

    def test_symmetry_at_half(self):
        assert ellint_Kprime(0.5) == pytest.approx(K_HALF, rel=1e-14)

    def test_definitional_identity(self):
        assert ellint_Kprime(0.9) == pytest.approx(ellint_K(1.0 - 0.9), rel=1e-15)

    @pytest.mark.parametrize("m", [0.0, -0.5, 1.5])
    def test_domain_errors(self, m):
        with pytest.raises(ValueError):
            ellint_Kprime(m)


class TestEllintF:
    def test_complete_is_K(self):
        assert ellint_F(HALF_PI, 0.3) == pytest.approx(ellint_K(0.3), rel=1e-14)

    def test_m_zero_is_identity(self):
        assert ellint_F(0.7, 0.0) == pytest.approx(0.7, rel=1e-14)

    def test_quadrature_reference_value(self):
        assert ellint_F(1.0, 0.5) == pytest.approx(F_1_HALF, rel=1e-12)

    def test_zero_amplitude(self):
        assert ellint_F(0.0, 0.42) == 0.0

    def test_reflection_matches_quadrature(self):
        for theta in (1.8, 2.5, 3.0, math.pi):
            assert ellint_F(theta, 0.6) == pytest.approx(
                oracles.quad_F(theta, 0.6), abs=1e-11
            )

    def test_strictly_increasing(self):
        thetas = [i * math.pi / 40 for i in range(41)]
        values = [ellint_F(t, 0.8) for t in thetas]
        assert all(b > a for a, b in zip(values, values[1:]))

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            ellint_F(-0.1, 0.5)
        with pytest.raises(ValueError):
            ellint_F(3.5, 0.5)
        with pytest.raises(ValueError):
            ellint_F(0.3, 1.0)


class TestJacobiTriple:
    def test_origin(self):
        assert jacobi_sn_cn_dn(0.0, 0.37) == (0.0, 1.0, 1.0)

    def test_quarter_period(self):
        m = 0.6
        sn, cn, dn = jacobi_sn_cn_dn(ellint_K(m), m)
        assert sn == pytest.approx(1.0, abs=1e-14)
        assert cn == pytest.approx(0.0, abs=1e-14)
        assert dn == pytest.approx(math.sqrt(1.0 - m), rel=1e-14)

    def test_reference_triple(self):
        sn, cn, dn = jacobi_sn_cn_dn(0.8, 0.4)
        assert sn == pytest.approx(SN_08_04, rel=1e-13)
        assert cn == pytest.approx(CN_08_04, rel=1e-13)
        assert dn == pytest.approx(DN_08_04, rel=1e-13)

    def test_quadrature_inversion(self):
        # invert the defining integral by bisection, then apply sin/cos
        m, u = 0.4, 0.8
        theta = oracles.invert_F(u, m)
        sn, cn, _ = jacobi_sn_cn_dn(u, m)
        assert sn == pytest.approx(math.sin(theta), abs=1e-10)
        assert cn == pytest.approx(math.cos(theta), abs=1e-10)

    def test_amplitude_round_trip(self):
        m = 0.55
        for i in range(1, 16):
            theta = i * HALF_PI / 16
            sn, _, _ = jacobi_sn_cn_dn(ellint_F(theta, m), m)
            assert sn == pytest.approx(math.sin(theta), abs=1e-10)

    def test_periodicity_and_parity(self):
        m = 0.73
        K = ellint_K(m)
        for u in (0.3, 1.1, 2.9):
            sn, cn, dn = jacobi_sn_cn_dn(u, m)
            sn4, cn4, dn4 = jacobi_sn_cn_dn(u + 4.0 * K, m)
            assert sn4 == pytest.approx(sn, abs=1e-12)
            assert cn4 == pytest.approx(cn, abs=1e-12)
            sn2, cn2, dn2 = jacobi_sn_cn_dn(u + 2.0 * K, m)
            assert sn2 == pytest.approx(-sn, abs=1e-12)
            assert cn2 == pytest.approx(-cn, abs=1e-12)
            assert dn2 == pytest.approx(dn, abs=1e-12)
            snm, cnm, dnm = jacobi_sn_cn_dn(-u, m)
            assert snm == pytest.approx(-sn, abs=1e-13)
            assert cnm == pytest.approx(cn, abs=1e-13)
            assert dnm == pytest.approx(dn, abs=1e-13)

    def test_domain_error(self):
        with pytest.raises(ValueError):
            jacobi_sn_cn_dn(0.5, 1.0)


class TestJacobiRatio:
    def test_cs_at_quarter_period_vanishes(self):
        m = 0.45
        assert jacobi_ratio("c", "s", ellint_K(m), m) == pytest.approx(0.0, abs=1e-13)

    def test_sc_reduces_to_tan(self):
        assert jacobi_ratio("s", "c", 0.9, 0.0) == pytest.approx(math.tan(0.9), rel=1e-13)

    def test_reference_cs(self):
        assert jacobi_ratio("c", "s", 0.5, 0.25) == pytest.approx(CS_05_025, rel=1e-13)

    def test_pp_is_exactly_one(self):
        for letter in "scdn":
            assert jacobi_ratio(letter, letter, 0.7, 0.3) == 1.0

    def test_n_letter_is_reciprocal(self):
        sn, cn, dn = jacobi_sn_cn_dn(0.6, 0.2)
        assert jacobi_ratio("n", "s", 0.6, 0.2) == pytest.approx(1.0 / sn, rel=1e-14)
        assert jacobi_ratio("d", "n", 0.6, 0.2) == pytest.approx(dn, rel=1e-14)

    def test_pole_error(self):
        with pytest.raises(PoleError):
            jacobi_ratio("c", "s", 0.0, 0.4)
        with pytest.raises(PoleError):
            jacobi_ratio("n", "s", 0.0, 0.0)

    def test_bad_letters(self):
        with pytest.raises(ValueError):
            jacobi_ratio("x", "s", 0.5, 0.5)
        with pytest.raises(ValueError):
            jacobi_ratio("s", "q", 0.5, 0.5)


class TestJacobiAm:
    def test_zero(self):
        assert jacobi_am(0.0, 0.62) == 0.0

    def test_quarter_period(self):
        m = 0.62
        assert jacobi_am(ellint_K(m), m) == pytest.approx(HALF_PI, abs=1e-13)

    def test_half_period(self):
        m = 0.62
        assert jacobi_am(2.0 * ellint_K(m), m) == pytest.approx(math.pi, abs=1e-12)

    def test_bisection_reference_value(self):
        assert jacobi_am(1.2, 0.6) == pytest.approx(AM_12_06, rel=1e-12)

    def test_inverse_of_F(self):
        m = 0.81
        K = ellint_K(m)
        for i in range(1, 20):
            u = i * 2.0 * K / 20
            assert ellint_F(jacobi_am(u, m), m) == pytest.approx(u, abs=1e-10)

    def test_nondecreasing(self):
        m = 0.9
        K = ellint_K(m)
        grid = [i * 2.0 * K / 200 for i in range(201)]
        values = [jacobi_am(u, m) for u in grid]
        assert all(b >= a for a, b in zip(values, values[1:]))

    def test_domain_errors(self):
        m = 0.5
        with pytest.raises(ValueError):
            jacobi_am(-0.1, m)
        with pytest.raises(ValueError):
            jacobi_am(2.0 * ellint_K(m) + 0.1, m)


class TestPiArg:
    def test_zero_characteristic_is_identity(self):
        assert ellint_Pi_arg(0.0, 0.9, 0.5) == pytest.approx(0.9, rel=1e-12)

    def test_empty_integral(self):
        assert ellint_Pi_arg(-1.0, 0.0, 0.3) == 0.0

    def test_reference_complete_value(self):
        value = ellint_Pi_arg(-0.5, ellint_K(0.4), 0.4)
        assert value == pytest.approx(PI_ARG_K04, rel=1e-11)

    @pytest.mark.parametrize("n", [-0.5, 0.618])
    def test_quadrature_of_sn_integrand(self, n):
        # oracle: quadrature of 1/(1 - n sn^2 t) with sn from jacobi_sn_cn_dn
        m = 0.4
        K = ellint_K(m)
        from hyperstrip.numerics import adaptive_quad

        def integrand(t):
            sn = jacobi_sn_cn_dn(t, m).sn
            return 1.0 / (1.0 - n * sn * sn)

        for u in (0.7, K, 1.6 * K):
            assert ellint_Pi_arg(n, u, m) == pytest.approx(
                adaptive_quad(integrand, 0.0, u, tol=1e-12), abs=1e-10
            )

    def test_strictly_increasing(self):
        m, n = 0.7, -0.4
        K = ellint_K(m)
        grid = [i * 2.0 * K / 60 for i in range(61)]
        values = [ellint_Pi_arg(n, u, m) for u in grid]
        assert all(b > a for a, b in zip(values, values[1:]))

    def test_domain_errors(self):
        m = 0.5
        with pytest.raises(ValueError):
            ellint_Pi_arg(1.0, 0.4, m)  # singular characteristic
        with pytest.raises(ValueError):
            ellint_Pi_arg(-0.5, -0.2, m)
        with pytest.raises(ValueError):
            ellint_Pi_arg(-0.5, 2.0 * ellint_K(m) + 0.1, m)


class TestPiAmp:
    def test_zero_characteristic_degenerates_to_F(self):
        for theta in (0.0, 0.4, 1.1, HALF_PI):
            assert ellint_Pi_amp(0.0, theta, 0.3) == ellint_F(theta, 0.3)

    def test_zero_amplitude(self):
        assert ellint_Pi_amp(-0.5, 0.0, 0.3) == 0.0

    def test_reference_complete_value(self):
        assert ellint_Pi_amp(-0.25, HALF_PI, 0.5) == pytest.approx(PI_COMPLETE, rel=1e-12)

    def test_matches_argument_form_through_am(self):
        m, n = 0.65, -0.8
        K = ellint_K(m)
        for u in (0.2 * K, 0.6 * K, 0.95 * K):
            assert ellint_Pi_amp(n, jacobi_am(u, m), m) == pytest.approx(
                ellint_Pi_arg(n, u, m), abs=1e-10
            )

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            ellint_Pi_amp(1.2, 0.3, 0.5)
        with pytest.raises(ValueError):
            ellint_Pi_amp(-0.5, 2.0, 0.5)  # amplitude beyond pi/2


class TestArcsn:
    def test_zero(self):
        assert arcsn(0.0, 0.4) == 0.0

    def test_complete(self):
        assert arcsn(1.0, 0.7) == pytest.approx(ellint_K(0.7), rel=1e-14)

    def test_round_trip(self):
        u = arcsn(0.5, 0.2)
        assert u == pytest.approx(ARCSN_HALF, rel=1e-13)
        assert jacobi_sn_cn_dn(u, 0.2).sn == pytest.approx(0.5, abs=1e-10)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            arcsn(-0.1, 0.5)
        with pytest.raises(ValueError):
            arcsn(1.1, 0.5)
        with pytest.raises(ValueError):
            arcsn(0.5, -0.2)


# ---------------------------------------------------------------------------
# Property-based identity tests
# ---------------------------------------------------------------------------

m_strategy = st.floats(min_value=0.0, max_value=0.99)
frac_strategy = st.floats(min_value=0.0, max_value=2.0)  # u = frac * K


@settings(max_examples=200, deadline=None, derandomize=True)
@given(m=m_strategy, frac=frac_strategy)
def test_pythagorean_identities(m, frac):
    u = frac * ellint_K(m)
    sn, cn, dn = jacobi_sn_cn_dn(u, m)
    assert abs(sn * sn + cn * cn - 1.0) <= 1e-12
    assert abs(dn * dn + m * sn * sn - 1.0) <= 1e-12
    assert math.sqrt(1.0 - m) - 1e-14 <= dn <= 1.0 + 1e-14


@settings(max_examples=200, deadline=None, derandomize=True)
@given(m=m_strategy, frac=st.floats(min_value=0.05, max_value=0.95))
def test_half_period_shift(m, frac):
    K = ellint_K(m)
    u = frac * K
    lhs = jacobi_ratio("s", "c", u + K, m)
    rhs = -jacobi_ratio("c", "s", u, m) / math.sqrt(1.0 - m)
    assert abs(lhs - rhs) <= 1e-10


@settings(max_examples=100, deadline=None, derandomize=True)
@given(m=m_strategy, frac=st.floats(min_value=0.0, max_value=2.0))
def test_amplitude_inverts_F(m, frac):
    u = frac * ellint_K(m)
    assert abs(ellint_F(jacobi_am(u, m), m) - u) <= 1e-10


@settings(max_examples=100, deadline=None, derandomize=True)
@given(m=m_strategy, x=st.floats(min_value=0.0, max_value=1.0))
def test_arcsn_inverts_sn(m, x):
    assert abs(jacobi_sn_cn_dn(arcsn(x, m), m).sn - x) <= 1e-10


@settings(max_examples=100, deadline=None, derandomize=True)
@given(u=st.floats(min_value=-20.0, max_value=20.0))
def test_trigonometric_degeneration(u):
    sn, cn, dn = jacobi_sn_cn_dn(u, 0.0)
    assert abs(sn - math.sin(u)) <= 1e-12
    assert abs(cn - math.cos(u)) <= 1e-12
    assert dn == 1.0


def test_ratio_degenerations_at_m_zero():
    for u in (0.3, 0.9, 1.4):
        assert abs(jacobi_ratio("c", "s", u, 0.0) - 1.0 / math.tan(u)) <= 1e-12
        assert abs(jacobi_ratio("s", "c", u, 0.0) - math.tan(u)) <= 1e-12


def test_pi_arg_trigonometric_closed_form():
    for n in (-1.5, -0.5, 0.4):
        for u in (0.3, 1.0, HALF_PI, 2.2, 3.0):
            assert ellint_Pi_arg(n, u, 0.0) == pytest.approx(
                oracles.pi_arg_trig(n, u), abs=1e-12
            )


def test_derivative_identity_of_cs():
    # d(cs)/du = -dn/sn^2, checked by central differences
    rng = random.Random(4821)
    step = 1e-5
    for _ in range(200):
        m = rng.uniform(0.0, 0.99)
        K = ellint_K(m)
        u = rng.uniform(0.05, 2.0 * K - 0.05)
        fd = (
            jacobi_ratio("c", "s", u + step, m) - jacobi_ratio("c", "s", u - step, m)
        ) / (2.0 * step)
        sn, _, dn = jacobi_sn_cn_dn(u, m)
        exact = -dn / (sn * sn)
        assert abs(fd - exact) <= 1e-6 * abs(exact)


# ---------------------------------------------------------------------------
# Oracle equivalence: every operation against quadrature of its defining
# integral on a 50-point random grid
# ---------------------------------------------------------------------------


class TestOracleEquivalence:
    rng_seed = 20260810

    def _samples(self, count=50):
        rng = random.Random(self.rng_seed)
        return [(rng.uniform(0.0, 0.99), rng.random()) for _ in range(count)]

    def test_K_against_quadrature(self):
        for m, _ in self._samples():
            assert ellint_K(m) == pytest.approx(oracles.quad_K(m), abs=1e-9)

    def test_F_against_quadrature(self):
        for m, t in self._samples():
            theta = t * math.pi
            assert ellint_F(theta, m) == pytest.approx(oracles.quad_F(theta, m), abs=1e-9)

    def test_Pi_amp_against_quadrature(self):
        rng = random.Random(self.rng_seed + 1)
        for m, t in self._samples():
            theta = t * HALF_PI
            n = rng.uniform(-2.0, 0.9)
            assert ellint_Pi_amp(n, theta, m) == pytest.approx(
                oracles.quad_Pi_amp(n, theta, m), abs=1e-9
            )

    def test_arcsn_against_quadrature(self):
        for m, t in self._samples():
            x = 0.999 * t
            assert arcsn(x, m) == pytest.approx(oracles.quad_arcsn(x, m), abs=1e-9)

    def test_triple_against_inversion(self):
        for m, t in self._samples():
            K = ellint_K(m)
            u = t * 2.0 * K
            sn_ref, cn_ref = oracles.sn_cn_by_inversion(u, m, K)
            sn, cn, dn = jacobi_sn_cn_dn(u, m)
            assert sn == pytest.approx(sn_ref, abs=1e-9)
            assert cn == pytest.approx(cn_ref, abs=1e-9)
            assert dn == pytest.approx(math.sqrt(1.0 - m * sn_ref * sn_ref), abs=1e-9)

    def test_am_against_inversion(self):
        for m, t in self._samples():
            K = ellint_K(m)
            u = t * K
            assert jacobi_am(u, m) == pytest.approx(oracles.invert_F(u, m), abs=1e-9)
