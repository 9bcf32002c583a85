"""The averaging operator T_{2m,2k}, the zonal expansion of x_n^{2k}, and the K(2m) bound.

All Gamma-function ratios here have arguments differing by integers, so
they are computed as finite rational products.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import BadDegrees, BadEpsilon, DegreeMismatch, DimensionMismatch, DimensionTooSmall
from .harmonic import dim_harmonics, harmonic_decompose, legendre_harmonic
from .poly import HomoForm, monomial_exponents, r_power
from .sphere import monomial_sphere_integral


def rising(a: Fraction, j: int) -> Fraction:
    """``Gamma(a + j) / Gamma(a)`` for a nonnegative integer ``j``."""
    out = Fraction(1)
    for s in range(j):
        out *= a + s
    return out


def shrink_factor(n: int, m: int, i: int) -> Fraction:
    """``m! Gamma((2m+n)/2) / ((m-i)! Gamma((2m+2i+n)/2))``."""
    return Fraction(math.factorial(m), math.factorial(m - i)) / rising(Fraction(2 * m + n, 2), i)


@dataclass(frozen=True)
class OperatorSpec:
    n: int
    k: int
    m: int
    coeffs: tuple  # coeffs[i] scales the level-2i component


def t_coefficients(n: int, k: int, m: int) -> OperatorSpec:
    if n < 2:
        raise DimensionTooSmall("need n >= 2")
    if k < 1 or m < k:
        raise BadDegrees(f"need m >= k >= 1, got k={k}, m={m}")
    return OperatorSpec(n, k, m, tuple(shrink_factor(n, m, i) for i in range(k + 1)))


def apply_t(spec: OperatorSpec, f: HomoForm) -> HomoForm:
    """``T_{2m,2k} f``: scale the level-``2i`` component of ``f`` by ``coeffs[i]``."""
    if f.n != spec.n:
        raise DimensionMismatch(f"form has {f.n} variables, operator expects {spec.n}")
    if f.d != 2 * spec.k:
        raise DegreeMismatch(f"form has degree {f.d}, operator expects {2 * spec.k}")
    parts = harmonic_decompose(f)
    out = HomoForm.zero(f.n, f.d)
    for i, c in enumerate(spec.coeffs):
        out = out + r_power(f.n, spec.k - i) * parts.level(2 * i) * c
    return out


def apply_t_integral(n: int, k: int, m: int, f: HomoForm) -> HomoForm:
    """``T_{2m,2k} f`` from its integral definition, as a form of degree ``2m``.

    ``<x, v>^(2m)`` is expanded multinomially and each ``v``-monomial is
    integrated against ``f(v)`` exactly.  On the sphere this agrees with
    ``r^(2(m-k)) * apply_t(...)``; it is an independent check, not a fast path.
    """
    if f.n != n or f.d != 2 * k:
        raise DegreeMismatch(f"expected a degree-{2 * k} form in {n} variables")
    if m < k:
        raise BadDegrees("need m >= k")
    norm = monomial_sphere_integral((0,) * (n - 1) + (2 * m,))
    terms = {}
    for beta in monomial_exponents(n, 2 * m):
        multinom = math.factorial(2 * m)
        for b in beta:
            multinom //= math.factorial(b)
        acc = Fraction(0)
        for alpha, c in f.terms.items():
            acc += c * monomial_sphere_integral(tuple(a + b for a, b in zip(alpha, beta)))
        if acc:
            terms[beta] = multinom * acc / norm
    return HomoForm(n, 2 * m, terms)


def power_expansion(n: int, k: int) -> HomoForm:
    """``sum_l c_l N(n,2l) r^(2k-2l) L_{n,2l}``, which equals ``x_n^(2k) / int x_n^(2k)``."""
    spec = t_coefficients(n, k, k)
    out = HomoForm.zero(n, 2 * k)
    for l, c in enumerate(spec.coeffs):
        out = out + r_power(n, k - l) * legendre_harmonic(n, 2 * l) * (c * dim_harmonics(n, 2 * l))
    return out


def volume_ratio_bound(n: int, k: int, m: int) -> Fraction:
    """Lower bound on ``(vol K(2m) / vol C)^(1/(D-1))``: the smallest shrink factor."""
    return t_coefficients(n, k, m).coeffs[k]


def degree_for_epsilon(n: int, k: int, epsilon) -> int:
    """Smallest integer ``m >= (2k^2 + kn) / epsilon``; its bound is at least ``1 - epsilon``."""
    eps = Fraction(epsilon)
    if not 0 < eps <= 1:
        raise BadEpsilon(f"epsilon must lie in (0, 1], got {epsilon}")
    m = math.ceil(Fraction(2 * k * k + k * n) / eps)
    if volume_ratio_bound(n, k, m) < 1 - eps:
        raise ArithmeticError(f"bound for m={m} fell below 1 - {eps}")
    return m
