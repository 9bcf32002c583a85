"""Harmonic levels of forms, Legendre (zonal) harmonics and dual points."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Sequence

from .errors import BadLevel, DimensionTooSmall, NotUnitVector
from .poly import HomoForm, laplacian, linear_form, r_power
from .sphere import axial_profile


def dim_forms(n: int, d: int) -> int:
    """Dimension of the space of degree-``d`` forms in ``n`` variables."""
    if d < 0:
        return 0
    return comb(n + d - 1, d)


def dim_harmonics(n: int, d: int) -> int:
    """Dimension of the degree-``d`` harmonic forms in ``n`` variables."""
    if n < 2:
        raise DimensionTooSmall("harmonic dimensions need n >= 2")
    if d < 0:
        return 0
    if d == 0:
        return 1
    return (2 * d + n - 2) * factorial(d + n - 3) // (factorial(d) * factorial(n - 2))


@dataclass(frozen=True)
class LevelDims:
    D: int
    N_by_level: tuple  # N(n, d - 2i) for i = 0 .. d//2

    @property
    def N(self) -> int:
        return self.N_by_level[0]


def space_dims(n: int, d: int) -> LevelDims:
    if n < 2:
        raise DimensionTooSmall("need n >= 2")
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return LevelDims(dim_forms(n, d), tuple(dim_harmonics(n, d - 2 * i) for i in range(d // 2 + 1)))


@dataclass(frozen=True)
class HarmonicParts:
    """``f = sum_i r^(2i) * parts[i]`` with ``parts[i]`` harmonic of degree ``d - 2i``."""

    n: int
    d: int
    parts: tuple

    def level(self, j: int) -> HomoForm:
        if j < 0 or j > self.d or (self.d - j) % 2:
            raise BadLevel(f"level {j} is not available in degree {self.d}")
        return self.parts[(self.d - j) // 2]

    def levels(self) -> dict:
        return {self.d - 2 * i: h for i, h in enumerate(self.parts)}

    def reconstruct(self) -> HomoForm:
        out = HomoForm.zero(self.n, self.d)
        for i, h in enumerate(self.parts):
            out = out + r_power(self.n, i) * h
        return out


def _lap_factor(i: int, j: int, n: int) -> int:
    """``Delta(r^(2i) h) = factor * r^(2i-2) h`` for harmonic ``h`` of degree ``j``."""
    return 2 * i * (2 * j + 2 * i + n - 2)


def harmonic_decompose(f: HomoForm) -> HarmonicParts:
    """Split ``f`` into its harmonic levels.

    Writing ``f = sum_i r^(2i) h_{d-2i}``, the ``s``-th Laplacian power only
    sees the parts with ``i >= s``, each scaled by a known nonzero integer.
    Solving from ``s = d//2`` downwards is a back-substitution.
    """
    n, d = f.n, f.d
    top = d // 2
    lap = [f]
    for _ in range(top):
        lap.append(laplacian(lap[-1]))
    parts: dict[int, HomoForm] = {}
    for s in range(top, -1, -1):
        rhs = lap[s]
        for i in range(s + 1, top + 1):
            j = d - 2 * i
            c = 1
            for t in range(s):
                c *= _lap_factor(i - t, j, n)
            rhs = rhs - r_power(n, i - s) * parts[i] * c
        j = d - 2 * s
        c = 1
        for t in range(s):
            c *= _lap_factor(s - t, j, n)
        parts[s] = rhs / c
    return HarmonicParts(n, d, tuple(parts[i] for i in range(top + 1)))


def project_level(f: HomoForm, j: int) -> HomoForm:
    """Component of ``f`` in ``r^(d-j) H_j``."""
    if j < 0 or j > f.d or (f.d - j) % 2:
        raise BadLevel(f"level {j} is not available in degree {f.d}")
    h = harmonic_decompose(f).level(j)
    return r_power(f.n, (f.d - j) // 2) * h


def level_components(f: HomoForm) -> dict:
    """Every level projection of ``f`` as ``{j: r^(d-j) h_j}``."""
    parts = harmonic_decompose(f)
    return {j: r_power(f.n, (f.d - j) // 2) * h for j, h in parts.levels().items()}


def _unit_axis(n: int, axis) -> tuple:
    if axis is None:
        return (Fraction(0),) * (n - 1) + (Fraction(1),)
    if isinstance(axis, int):
        v = [Fraction(0)] * n
        v[axis] = Fraction(1)
        return tuple(v)
    v = tuple(Fraction(a) for a in axis)
    if len(v) != n:
        raise NotUnitVector(f"axis has {len(v)} entries, expected {n}")
    if sum(a * a for a in v) != 1:
        raise NotUnitVector(f"axis {v} is not an exact unit vector")
    return v


def legendre_harmonic(n: int, d: int, axis=None) -> HomoForm:
    """The degree-``d`` harmonic invariant about ``axis`` with value 1 there.

    ``axis`` is None (last coordinate), a 0-based coordinate index, or an
    exact rational unit vector.  Built as the top harmonic level of
    ``<x, axis>^d``, rescaled.
    """
    if n < 2:
        raise DimensionTooSmall("need n >= 2")
    return _legendre(n, d, _unit_axis(n, axis))


@lru_cache(maxsize=None)
def _legendre(n: int, d: int, v: tuple) -> HomoForm:
    top = harmonic_decompose(linear_form(v) ** d).level(d)
    return top / top(v)


def legendre_polynomial(n: int, d: int) -> list:
    """``Q_{n,d}(t)`` with ``L_{n,d}(x) = Q(x_n)`` on the sphere (ascending coefficients)."""
    return axial_profile(legendre_harmonic(n, d))


def dual_point(n: int, d: int, v=None) -> HomoForm:
    """The form ``p_v`` with ``<p_v, f> = f(v)`` for every degree-``d`` form ``f``."""
    v = _unit_axis(n, v)
    out = HomoForm.zero(n, d)
    for i in range(d // 2 + 1):
        j = d - 2 * i
        out = out + r_power(n, i) * _legendre(n, j, v) * dim_harmonics(n, j)
    return out


def rational_sphere_point(y: Sequence) -> tuple:
    """Exact unit vector in ``len(y) + 1`` dimensions by inverse stereographic projection."""
    y = [Fraction(a) for a in y]
    s = sum(a * a for a in y)
    return tuple(2 * a / (s + 1) for a in y) + ((s - 1) / (s + 1),)
