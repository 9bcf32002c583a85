from fractions import Fraction as F

import numpy as np
import pytest
from scipy.special import eval_gegenbauer

from conecalc.errors import BadLevel, DimensionTooSmall, NotUnitVector
from conecalc.harmonic import (
    dim_forms,
    dim_harmonics,
    dual_point,
    harmonic_decompose,
    legendre_harmonic,
    legendre_polynomial,
    level_components,
    project_level,
    rational_sphere_point,
    space_dims,
)
from conecalc.poly import HomoForm, laplacian, monomial_exponents, parse_form, r_power
from conecalc.sphere import inner_product, norm_squared
from conecalc.suite import random_form, rng_for
from conecalc.univariate import padd, peval, pscale


def test_space_dims_examples():
    assert space_dims(3, 2) == space_dims(3, 2)
    s = space_dims(3, 2)
    assert (s.D, s.N) == (6, 5)
    s = space_dims(3, 0)
    assert (s.D, s.N) == (1, 1)
    assert space_dims(4, 3).D == 20
    for n in range(2, 7):
        assert dim_harmonics(n, 1) == n
    with pytest.raises(DimensionTooSmall):
        space_dims(1, 2)


def test_level_dims_sum():
    for n in range(2, 7):
        for d in range(9):
            s = space_dims(n, d)
            assert sum(s.N_by_level) == s.D


def _laplacian_matrix(n, d):
    rows = {e: i for i, e in enumerate(monomial_exponents(n, d - 2))}
    cols = monomial_exponents(n, d)
    A = np.zeros((len(rows), len(cols)))
    for j, e in enumerate(cols):
        for ex, c in laplacian(HomoForm.monomial(e)).terms.items():
            A[rows[ex], j] = float(c)
    return A


def test_harmonic_dimension_by_laplacian_rank():
    for n in (2, 3, 4, 5):
        for d in range(2, 7):
            A = _laplacian_matrix(n, d)
            kernel = A.shape[1] - np.linalg.matrix_rank(A)
            assert kernel == dim_harmonics(n, d)


def test_decompose_example():
    parts = harmonic_decompose(parse_form("x3^2", 3))
    assert parts.level(2) == parse_form("x3^2 - r2/3", 3)
    assert parts.level(0) == HomoForm.constant(3, F(1, 3))


def test_decompose_trivial_cases():
    parts = harmonic_decompose(r_power(4, 2))
    assert parts.level(0) == HomoForm.constant(4, 1)
    assert parts.level(4).is_zero() and parts.level(2).is_zero()
    L = legendre_harmonic(3, 2)
    assert harmonic_decompose(L).level(2) == L


@pytest.mark.parametrize("n", [2, 3, 4])
def test_reconstruction_and_harmonicity(n):
    rng = rng_for(21, n)
    for d in range(2, 9):
        for _ in range(6 if d > 6 else 15):
            f = random_form(n, d, rng)
            parts = harmonic_decompose(f)
            assert parts.reconstruct() == f
            for h in parts.parts:
                assert laplacian(h).is_zero()


def test_parseval():
    rng = rng_for(22)
    for n, d in [(2, 4), (3, 4), (4, 3), (3, 6)]:
        f = random_form(n, d, rng)
        comps = level_components(f)
        assert norm_squared(f) == sum(norm_squared(c) for c in comps.values())
        js = sorted(comps)
        for a in js:
            for b in js:
                if a != b:
                    assert inner_product(comps[a], comps[b]) == 0


def test_project_level():
    f = parse_form("3*x3^2", 3)
    assert project_level(f, 2) == parse_form("3*x3^2 - r2", 3)
    assert project_level(r_power(3, 2), 0) == r_power(3, 2)
    assert project_level(legendre_harmonic(3, 2), 0).is_zero()
    g = project_level(random_form(3, 4, rng_for(1)), 2)
    assert project_level(g, 2) == g
    with pytest.raises(BadLevel):
        project_level(f, 1)


def test_legendre_example():
    assert legendre_harmonic(3, 2) == parse_form("(3*x3^2 - r2)/2", 3)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_legendre_postconditions(n):
    e = (0,) * (n - 1) + (1,)
    for d in range(7):
        L = legendre_harmonic(n, d)
        assert laplacian(L).is_zero()
        assert L(e) == 1
        assert norm_squared(L) == F(1, dim_harmonics(n, d))


def test_legendre_recurrence():
    # (d + n - 3) Q_d = (2d + n - 4) t Q_{d-1} - (d - 1) Q_{d-2}, Q_0 = 1, Q_1 = t
    for n in range(2, 7):
        qs = [[F(1)], [F(0), F(1)]]
        for d in range(2, 8):
            a = pscale([F(0)] + qs[d - 1], F(2 * d + n - 4, d + n - 3))
            b = pscale(qs[d - 2], F(-(d - 1), d + n - 3))
            qs.append(padd(a, b))
        for d in range(8):
            assert legendre_polynomial(n, d) == qs[d]


def test_legendre_against_scipy_gegenbauer():
    t = np.linspace(-1, 1, 11)
    for n in range(3, 7):
        lam = (n - 2) / 2
        for d in range(7):
            q = legendre_polynomial(n, d)
            ours = np.array([float(peval(q, F(x))) for x in t])
            ref = eval_gegenbauer(d, lam, t) / eval_gegenbauer(d, lam, 1.0)
            assert np.allclose(ours, ref, atol=1e-12)


def test_legendre_general_axis():
    v = (F(3, 5), F(0), F(4, 5))
    L = legendre_harmonic(3, 3, v)
    assert L(v) == 1 and laplacian(L).is_zero()
    assert norm_squared(L) == F(1, dim_harmonics(3, 3))
    with pytest.raises(NotUnitVector):
        legendre_harmonic(3, 2, (1, 1, 0))


def test_rational_sphere_point():
    for y in [(F(1, 2),), (F(2), F(-3, 7)), (F(0), F(0), F(5))]:
        v = rational_sphere_point(y)
        assert sum(a * a for a in v) == 1


@pytest.mark.parametrize("n,d", [(2, 2), (2, 4), (3, 2), (3, 4), (4, 2), (4, 4), (3, 3)])
def test_reproducing_property(n, d):
    rng = rng_for(23, n, d)
    for y in [(F(1, 3),) * (n - 1), tuple(F(i + 1, 5) for i in range(n - 1))]:
        v = rational_sphere_point(y)
        p = dual_point(n, d, v)
        for _ in range(10):
            f = random_form(n, d, rng)
            assert inner_product(p, f) == f(v)


def test_dual_point_example():
    p = dual_point(3, 2)
    assert p((0, 0, 1)) == 6
    assert inner_product(p, parse_form("x3^2", 3)) == 1
    assert norm_squared(p) == dim_forms(3, 2)


def test_extremal_ratio():
    # |h(v)|^2 <= N(n,d) ||h||^2 on harmonics, with equality at the Legendre harmonic
    rng = rng_for(24)
    for n, d in [(3, 2), (3, 3), (4, 2)]:
        N = dim_harmonics(n, d)
        v = (0,) * (n - 1) + (1,)
        L = legendre_harmonic(n, d)
        assert L(v) ** 2 == N * norm_squared(L)
        for _ in range(10):
            h = harmonic_decompose(random_form(n, d, rng)).level(d)
            if not h.is_zero():
                assert h(v) ** 2 <= N * norm_squared(h)
