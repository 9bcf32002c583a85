from fractions import Fraction as F

import pytest

from conecalc.errors import BadDegrees, BadEpsilon, DegreeMismatch
from conecalc.poly import HomoForm, parse_form, r_power, signed_permute
from conecalc.power import (
    apply_t,
    apply_t_integral,
    degree_for_epsilon,
    power_expansion,
    t_coefficients,
    volume_ratio_bound,
)
from conecalc.sphere import integral, sphere_min
from conecalc.suite import random_form, rng_for, sample_sos


def test_t_coefficient_examples():
    assert t_coefficients(3, 1, 1).coeffs == (1, F(2, 5))
    assert t_coefficients(3, 1, 2).coeffs == (1, F(4, 7))
    for n in (2, 3, 4):
        for k in (1, 2):
            for m in (k, k + 3):
                assert t_coefficients(n, k, m).coeffs[0] == 1
    with pytest.raises(BadDegrees):
        t_coefficients(3, 2, 1)


def test_apply_t_examples():
    f = parse_form("3*x3^2", 3)
    assert apply_t(t_coefficients(3, 1, 2), f) == parse_form("3/7*r2 + 12/7*x3^2", 3)
    for k in (1, 2):
        assert apply_t(t_coefficients(3, k, k + 2), r_power(3, k)) == r_power(3, k)
    with pytest.raises(DegreeMismatch):
        apply_t(t_coefficients(3, 1, 2), parse_form("x3^4", 3))


def test_power_expansion_examples():
    assert power_expansion(3, 1) == parse_form("3*x3^2", 3)
    assert power_expansion(3, 2) == parse_form("5*x3^4", 3)


@pytest.mark.parametrize("n", [2, 3])
def test_integral_definition_matches_diagonal(n):
    rng = rng_for(31, n)
    for k in (1, 2):
        for m in range(k, 4):
            spec = t_coefficients(n, k, m)
            for _ in range(3):
                f = random_form(n, 2 * k, rng)
                assert apply_t_integral(n, k, m, f) == r_power(n, m - k) * apply_t(spec, f)


def test_equivariance():
    rng = rng_for(32)
    spec = t_coefficients(3, 2, 4)
    for _ in range(5):
        f = random_form(3, 4, rng)
        perm = tuple(int(i) for i in rng.permutation(3))
        signs = tuple(int(s) for s in rng.choice([-1, 1], 3))
        assert apply_t(spec, signed_permute(f, perm, signs)) == signed_permute(apply_t(spec, f), perm, signs)


def test_coefficients_increase_toward_one():
    for n in (2, 3, 4):
        for k in (1, 2, 3):
            prev = t_coefficients(n, k, k).coeffs
            for m in range(k + 1, k + 12):
                cur = t_coefficients(n, k, m).coeffs
                for i in range(1, k + 1):
                    assert prev[i] < cur[i] < 1
                prev = cur


def test_t_preserves_integral_and_nonnegativity():
    for n, k in [(2, 1), (3, 1), (3, 2)]:
        spec = t_coefficients(n, k, k + 2)
        for t in range(5):
            f = sample_sos(n, k, 2, seed=33, stream=(n, k, t))
            g = apply_t(spec, f)
            assert integral(g) == integral(f) == 1
            lifted = r_power(n, 2) * g
            assert sphere_min(lifted).value >= -1e-9


def test_volume_ratio_bound_examples():
    assert volume_ratio_bound(3, 1, 2) == F(4, 7)
    assert volume_ratio_bound(3, 1, 10) == F(20, 23)
    assert volume_ratio_bound(3, 1, 1) == F(2, 5)


def test_degree_for_epsilon():
    assert degree_for_epsilon(3, 1, F(1, 2)) == 10
    assert degree_for_epsilon(3, 1, 1) == 5
    assert degree_for_epsilon(2, 2, F(1, 4)) == 48
    for n in (2, 3, 4):
        for k in (1, 2):
            for eps in (F(1), F(1, 2), F(1, 4), F(1, 10)):
                m = degree_for_epsilon(n, k, eps)
                assert volume_ratio_bound(n, k, m) >= 1 - eps
    for bad in (0, F(3, 2), -1):
        with pytest.raises(BadEpsilon):
            degree_for_epsilon(3, 1, bad)


def test_power_expansion_level_zero_coefficient():
    for n in (2, 3, 4):
        for k in (1, 2):
            f = power_expansion(n, k)
            assert isinstance(f, HomoForm)
            assert integral(f) == 1
