from fractions import Fraction as F

import pytest

from conecalc.cone import (
    Verdict,
    ball_sandwich,
    certify_nonnegative,
    certify_sum_of_powers,
    john_ball_C,
    lf_loewner,
    loewner_ball_Cstar,
    max_extreme_form,
    orbit_loewner,
    outer_radius_sq_C,
    powerball_radius_sq,
    reflect_through_center,
    symmetry_coefficient,
)
from conecalc.errors import DegenerateMax, OddDegree, ZeroIntegral, ZeroProjection
from conecalc.harmonic import dim_forms, dual_point, harmonic_decompose, legendre_harmonic, rational_sphere_point
from conecalc.poly import HomoForm, linear_form, parse_form, r_power
from conecalc.sphere import inner_product, integral, norm_squared, sphere_max, sphere_min
from conecalc.suite import random_form, rng_for


def test_orbit_loewner_examples():
    assert orbit_loewner([5], [5], 5) == ([F(1)], F(5))
    assert orbit_loewner([7], [1], 7) == ([F(7)], F(7))
    assert orbit_loewner([3, 5], [F(1, 3), 5], 8) == ([F(9), F(1)], F(8))
    with pytest.raises(ZeroProjection):
        orbit_loewner([3, 5], [0, 1], 8)


def test_ball_radii():
    assert john_ball_C(3, 1).radius_squared == F(1, 5)
    assert john_ball_C(2, 1).radius_squared == F(1, 2)
    assert john_ball_C(3, 2).radius_squared == F(1, 14)
    assert loewner_ball_Cstar(3, 1).radius_squared == 5
    for n in (2, 3, 4):
        for k in (1, 2):
            assert loewner_ball_Cstar(n, k).radius_squared == dim_forms(n, 2 * k) - 1


def test_dual_point_on_loewner_boundary():
    for n, k in [(3, 1), (3, 2), (4, 1)]:
        p = dual_point(n, 2 * k)
        ell = loewner_ball_Cstar(n, k)
        assert norm_squared(p - r_power(n, k)) == ell.radius_squared
        assert ell.functional(r_power(n, k)) == 0


def test_lf_loewner():
    ell = lf_loewner(3, 1)
    assert ell.weights == {2: F(25, 4)} and ell.bound == 5
    assert ell.functional(parse_form("3*x3^2", 3)) == 5
    assert ell.functional(r_power(3, 1)) == 0


def test_powers_on_lf_boundary():
    rng = rng_for(41)
    for n, k in [(2, 1), (3, 1), (3, 2), (4, 2)]:
        ell = lf_loewner(n, k)
        for _ in range(3):
            y = [F(int(a), int(b)) for a, b in zip(rng.integers(-4, 5, n - 1), rng.integers(1, 5, n - 1))]
            g = linear_form(rational_sphere_point(y)) ** (2 * k)
            assert ell.functional(g / integral(g)) == ell.bound


def test_symmetry_coefficients():
    assert symmetry_coefficient("nonneg", 3, 1) == F(1, 2)
    assert symmetry_coefficient("powers", 3, 2) == F(1, 5)
    assert symmetry_coefficient("nonneg", 2, 1) == 1
    with pytest.raises(ValueError):
        symmetry_coefficient("psd", 3, 1)


def test_ball_sandwich():
    assert outer_radius_sq_C(3, 1) == 2
    assert powerball_radius_sq(3, 1) == F(2, 25)
    assert ball_sandwich(1, 3, 1) == 3
    assert ball_sandwich(1, 3, 1, known="john") == 3
    with pytest.raises(ValueError):
        ball_sandwich(2, 1, 1)


def test_nesting():
    for n in (2, 3, 4):
        for k in (1, 2, 3):
            assert john_ball_C(n, k).radius_squared <= dim_forms(n, k) - 1
            assert powerball_radius_sq(n, k) <= dim_forms(n, 2 * k) - 1
            assert john_ball_C(n, k).radius_squared <= outer_radius_sq_C(n, k)


def test_reflection():
    f = parse_form("3*x3^2", 3)
    fbar = reflect_through_center(f, 3)
    assert fbar == parse_form("3/2*x1^2 + 3/2*x2^2", 3)
    assert sphere_min(fbar).value == pytest.approx(0.0, abs=1e-12)
    assert sphere_max(fbar).value == pytest.approx(1.5, abs=1e-12)
    r = r_power(3, 1)
    assert norm_squared(f - r) == 4 * norm_squared(fbar - r)
    with pytest.raises(DegenerateMax):
        reflect_through_center(r, 1)


def test_max_extreme_form():
    assert max_extreme_form(3, 1) == parse_form("3*x3^2", 3)
    f = max_extreme_form(3, 2)
    assert f == (5 * legendre_harmonic(3, 2) + r_power(3, 1)) ** 2 / 6
    assert integral(f) == 1 and f((0, 0, 1)) == 6


def test_duality_inequality():
    # p on the boundary of the dual Loewner ball, g in the John ball: <p - r, g - r> >= -1
    rng = rng_for(42)
    for n, k in [(2, 1), (3, 1), (3, 2)]:
        r = r_power(n, k)
        rad = john_ball_C(n, k).radius_squared
        for _ in range(5):
            y = [F(int(a), 3) for a in rng.integers(-4, 5, n - 1)]
            p = dual_point(n, 2 * k, rational_sphere_point(y))
            h = random_form(n, 2 * k, rng)
            h = h - r * integral(h)
            s = F(1)
            while s * s * norm_squared(h) > rad:
                s /= 2
            g = r + h * s
            assert inner_product(p - r, g - r) >= -1


def test_certify_nonnegative_examples():
    c = certify_nonnegative(parse_form("3*x3^2", 3))
    assert c.verdict is Verdict.INCONCLUSIVE and c.distance == F(4, 5)
    c = certify_nonnegative(parse_form("r2 - 10*(3*x3^2 - r2)/2", 3))
    assert c.verdict is Verdict.PROVED_NON_MEMBER and c.distance == 20
    c = certify_nonnegative(r_power(3, 2) * 7)
    assert c.verdict is Verdict.PROVED_MEMBER and c.scale == 7 and c.distance == 0
    c = certify_nonnegative(-r_power(3, 1))
    assert c.verdict is Verdict.PROVED_NON_MEMBER and c.basis == "negative-integral"


def test_certify_boundary_instance():
    # radius exactly the John radius: the closed ball is inside the cone
    L = legendre_harmonic(3, 2)
    f = r_power(3, 1) + L * F(1, 2)  # ||L/2||^2 = 1/20
    scaled = r_power(3, 1) + L * 2  # ||2L||^2 = 4/5
    assert certify_nonnegative(scaled).verdict is Verdict.INCONCLUSIVE
    g = r_power(3, 1) + L  # ||L||^2 = 1/5 exactly the John radius^2
    c = certify_nonnegative(g)
    assert c.verdict is Verdict.PROVED_MEMBER and c.boundary
    assert sphere_min(g).value >= -1e-12
    assert certify_nonnegative(f).verdict is Verdict.PROVED_MEMBER


def test_certify_sum_of_powers_examples():
    assert certify_sum_of_powers(r_power(3, 1)).verdict is Verdict.PROVED_MEMBER
    c = certify_sum_of_powers(parse_form("3*x3^2", 3))
    assert c.verdict is Verdict.INCONCLUSIVE and c.boundary and c.distance == 5
    c = certify_sum_of_powers(r_power(3, 1) + legendre_harmonic(3, 2) * 3)
    assert c.verdict is Verdict.PROVED_NON_MEMBER and c.distance == F(45, 4)


def test_certificate_errors():
    with pytest.raises(OddDegree):
        certify_nonnegative(parse_form("x1^3", 2))
    with pytest.raises(ZeroIntegral):
        certify_nonnegative(legendre_harmonic(3, 2))


def test_certificate_soundness_random():
    rng = rng_for(43)
    for n, k in [(2, 1), (3, 1), (3, 2)]:
        r = r_power(n, k)
        for _ in range(10):
            h = harmonic_decompose(random_form(n, 2 * k, rng)).level(2 * k)
            if h.is_zero():
                continue
            for s in (F(1, 20), F(1, 2), F(3), F(30)):
                f = r + h * (s / max(abs(c) for c in h.terms.values()))
                c = certify_nonnegative(f)
                lo = sphere_min(f).value
                if c.verdict is Verdict.PROVED_MEMBER:
                    assert lo >= -1e-9
                elif c.verdict is Verdict.PROVED_NON_MEMBER:
                    assert lo < -1e-12
