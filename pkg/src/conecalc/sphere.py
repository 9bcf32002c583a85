"""Integration over the unit sphere with the rotation-invariant probability measure.

Monomial integrals are exact rationals, so inner products, L2 norms and the
even moments ``int f^(2l)`` are exact.  The sup norm is a float: exact up to
root refinement for forms that are symmetric about a coordinate axis, and a
best-found lower bound from multi-start projected gradient ascent otherwise.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np
from scipy.special import ndtri
from scipy.stats import qmc

from . import _kernels
from .errors import DegreeMismatch, DimensionMismatch, DimensionTooSmall, TermBudgetExceeded
from .poly import HomoForm, multiply, r_power
from .univariate import interval_extrema, one_minus_t2_power, padd, pmul

TERM_BUDGET = 10**6
LINF_TOL = 1e-10
N_STARTS = 64
N_ITERS = 200


@lru_cache(maxsize=None)
def monomial_sphere_integral(alpha: tuple) -> Fraction:
    """``int x^alpha dsigma`` over S^{n-1}, with ``n = len(alpha)``.

    Zero if any exponent is odd, else ``prod (a_i - 1)!! / (n (n+2) ... (n+|a|-2))``.
    """
    alpha = tuple(alpha)
    n = len(alpha)
    if n < 2:
        raise DimensionTooSmall("sphere integrals need n >= 2")
    if any(a % 2 for a in alpha):
        return Fraction(0)
    num = 1
    for a in alpha:
        for j in range(a - 1, 0, -2):
            num *= j
    den = 1
    for j in range(n, n + sum(alpha) - 1, 2):
        den *= j
    return Fraction(num, den)


def integral(f: HomoForm) -> Fraction:
    if f.d % 2:
        return Fraction(0)
    return sum((c * monomial_sphere_integral(e) for e, c in f.terms.items()), Fraction(0))


def inner_product(f: HomoForm, g: HomoForm) -> Fraction:
    """``<f, g> = int f g dsigma``; both forms must share ``n`` and ``d``."""
    if f.n != g.n:
        raise DimensionMismatch(f"forms live in {f.n} and {g.n} variables")
    if f.d != g.d:
        raise DegreeMismatch(
            f"degrees {f.d} and {g.d} differ; multiply the lower one by a power of r^2 first"
        )
    n = f.n
    total = Fraction(0)
    gt = list(g.terms.items())
    for ea, ca in f.terms.items():
        for eb, cb in gt:
            e = tuple(ea[i] + eb[i] for i in range(n))
            v = monomial_sphere_integral(e)
            if v:
                total += ca * cb * v
    return total


def norm_squared(f: HomoForm) -> Fraction:
    return inner_product(f, f)


def power_integral(f: HomoForm, p: int, budget: int = TERM_BUDGET) -> Fraction:
    """Exact ``int f^p dsigma`` for a positive integer ``p``."""
    if p < 1:
        raise ValueError("p must be positive")
    if p == 2:
        return norm_squared(f)
    # int f^p = <f^a, f^b> with a + b = p; keeps the expansion at half size
    a = p // 2
    b = p - a
    if a == 0:
        return integral(f)
    fa = _bounded_power(f, a, budget)
    fb = fa if a == b else multiply(fa, f)
    if len(fb) > budget:
        raise TermBudgetExceeded(f"f^{b} has {len(fb)} terms (budget {budget})")
    return inner_product(fa, fb)


def _bounded_power(f: HomoForm, k: int, budget: int) -> HomoForm:
    est = math.comb(f.n + f.d * k - 1, f.d * k)
    out = HomoForm.constant(f.n, 1)
    for _ in range(k):
        out = multiply(out, f)
        if len(out) > budget:
            raise TermBudgetExceeded(f"f^{k} expansion exceeds {budget} terms (up to {est} possible)")
    return out


# sup norm -------------------------------------------------------------------

@dataclass(frozen=True)
class Extremum:
    """A maximum or minimum of a form on the sphere.

    ``certified`` is true when the value comes from the exact univariate
    restriction of an axially symmetric form; ``width`` then bounds the
    error.  Otherwise ``value`` is attained at ``point`` but is not claimed
    to be the global optimum.
    """

    value: float
    point: tuple
    certified: bool
    width: float


@dataclass(frozen=True)
class NormReport:
    l1: Fraction | None
    l2_squared: Fraction
    l2l_power: Fraction | None
    l: int | None
    linf: float
    linf_argmax: tuple
    linf_certified: bool
    linf_width: float


def axial_profile(f: HomoForm, axis: int | None = None) -> list | None:
    """Univariate restriction ``Q`` with ``f(x) = Q(x_axis)`` on the sphere, or None.

    ``f`` qualifies when, grouped by the power of ``x_axis``, each coefficient
    form in the remaining variables is a multiple of a power of their squared
    norm.  Then on the sphere that norm equals ``1 - t^2``.
    """
    n = f.n
    axis = n - 1 if axis is None else axis
    if n < 2:
        return None
    others = [i for i in range(n) if i != axis]
    groups: dict[int, dict] = {}
    for e, c in f.terms.items():
        rest = tuple(e[i] for i in others)
        groups.setdefault(e[axis], {})[rest] = c
    q: list = []
    for a, sub in groups.items():
        rem = f.d - a
        if rem % 2:
            return None
        lead = sub.get((rem,) + (0,) * (n - 2), Fraction(0))
        if not lead:
            return None
        model = r_power(n - 1, rem // 2)
        if len(model) != len(sub) or any(sub.get(e) != lead * c for e, c in model.terms.items()):
            return None
        piece = [Fraction(0)] * a + [lead]
        q = padd(q, pmul(piece, one_minus_t2_power(rem // 2)))
    return q


def find_axial_profile(f: HomoForm):
    """``(axis, Q)`` for the first coordinate axis ``f`` is symmetric about, or None."""
    if f.n < 2:
        return None
    for axis in [f.n - 1] + list(range(f.n - 1)):
        q = axial_profile(f, axis)
        if q is not None:
            return axis, q
    return None


def _axial_point(n: int, axis: int, t) -> tuple:
    t = float(t)
    x = [0.0] * n
    x[axis] = t
    x[(axis + 1) % n if n > 1 else axis] = math.sqrt(max(0.0, 1.0 - t * t))
    return tuple(x)


@lru_cache(maxsize=None)
def start_points(n: int, count: int = N_STARTS) -> np.ndarray:
    """Deterministic starts: the 2n signed axes, then Halton points mapped to the sphere."""
    axes = np.vstack([np.eye(n), -np.eye(n)])
    m = max(0, count - axes.shape[0])
    halton = qmc.Halton(d=n, scramble=False).random(m + 1)[1:]
    gauss = ndtri(np.clip(halton, 1e-12, 1 - 1e-12))
    gauss /= np.linalg.norm(gauss, axis=1, keepdims=True)
    pts = np.vstack([axes, gauss])[:count]
    pts.setflags(write=False)
    return pts


def _as_arrays(f: HomoForm):
    items = f.items()
    exps = np.array([e for e, _ in items], dtype=np.int64).reshape(len(items), f.n)
    coeffs = np.array([float(c) for _, c in items], dtype=np.float64)
    return exps, coeffs


def sphere_max(f: HomoForm, tol: float = LINF_TOL, starts: int = N_STARTS,
               iters: int = N_ITERS, backend: str | None = None) -> Extremum:
    """Maximum of ``f`` on S^{n-1}."""
    if f.is_zero() or f.d == 0:
        val = float(f.coefficient((0,) * f.n)) if f.d == 0 else 0.0
        return Extremum(val, (0.0,) * (f.n - 1) + (1.0,), True, 0.0)
    axial = find_axial_profile(f)
    if axial is not None:
        axis, q = axial
        step = Fraction(tol).limit_denominator(2**60) / 4
        _, (tmax, vmax) = interval_extrema(q, tol=step)
        return Extremum(float(vmax), _axial_point(f.n, axis, tmax), True, float(tol))
    exps, coeffs = _as_arrays(f)
    vals, pts = _kernels.ascend(exps, coeffs, start_points(f.n, starts), iters=iters, backend=backend)
    best = int(np.argmax(vals))  # first index wins ties, so the result is order-deterministic
    return Extremum(float(vals[best]), tuple(float(x) for x in pts[best]), False, math.inf)


def sphere_min(f: HomoForm, **kw) -> Extremum:
    e = sphere_max(-f, **kw)
    return Extremum(0.0 - e.value, e.point, e.certified, e.width)


def sup_norm(f: HomoForm, **kw) -> Extremum:
    hi = sphere_max(f, **kw)
    lo = sphere_min(f, **kw)
    if abs(lo.value) > abs(hi.value):
        return Extremum(abs(lo.value), lo.point, lo.certified and hi.certified, max(lo.width, hi.width))
    return Extremum(abs(hi.value), hi.point, lo.certified and hi.certified, max(lo.width, hi.width))


def lp_norm(f: HomoForm, p, *, budget: int = TERM_BUDGET, **kw):
    """Norm data of ``f`` for ``p`` in {1, 2, even 2l, inf}.

    * ``p=1``: ``int f`` (the caller asserts ``f >= 0``).
    * ``p=2`` or even ``p``: the exact ``p``-th power of the norm, ``int f^p``.
    * ``p=inf``: an :class:`Extremum` for ``max |f|``.
    """
    if p == math.inf or p == "inf":
        return sup_norm(f, **kw)
    if p == 1:
        return integral(f)
    if isinstance(p, int) and p >= 2 and p % 2 == 0:
        return power_integral(f, p, budget=budget)
    raise ValueError(f"unsupported norm selector {p!r}")


def norm_report(f: HomoForm, l: int | None = None, nonnegative: bool = False, **kw) -> NormReport:
    sup = sup_norm(f, **kw)
    return NormReport(
        l1=integral(f) if nonnegative else None,
        l2_squared=norm_squared(f),
        l2l_power=power_integral(f, 2 * l) if l else None,
        l=l,
        linf=sup.value,
        linf_argmax=sup.point,
        linf_certified=sup.certified,
        linf_width=sup.width,
    )

