"""Ellipsoids, symmetry coefficients and membership certificates.

Everything works in the hyperplane of forms with integral 1 and measures
distances from the centre ``r^(2k)`` in the sphere L2 norm.  Radii are
carried as exact squared values.
"""
from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (
    DegenerateMax,
    DimensionTooSmall,
    NotNormalized,
    OddDegree,
    ZeroIntegral,
    ZeroProjection,
)
from .harmonic import dim_forms, dim_harmonics, dual_point, level_components
from .poly import HomoForm, r_power
from .power import t_coefficients
from .sphere import integral, norm_squared

log = logging.getLogger(__name__)

NONNEG = "nonneg"
POWERS = "powers"
_CONE_ALIASES = {"nonneg": NONNEG, "c": NONNEG, "C": NONNEG, "powers": POWERS, "lf": POWERS, "Lf": POWERS}


@dataclass(frozen=True)
class EllipsoidSpec:
    """``{f : int f = 1, sum_j weights[j] * ||l_j(f - center)||^2 <= bound}``."""

    center: HomoForm
    weights: dict  # level j -> weight
    bound: Fraction
    tag: str = ""

    def functional(self, f: HomoForm) -> Fraction:
        comps = level_components(f - self.center)
        total = Fraction(0)
        for j, comp in comps.items():
            if j == 0:
                continue
            total += self.weights[j] * norm_squared(comp)
        return total

    def contains(self, f: HomoForm) -> bool:
        return self.functional(f) <= self.bound

    @property
    def is_ball(self) -> bool:
        return len(set(self.weights.values())) <= 1

    @property
    def radius_squared(self) -> Fraction | None:
        """Squared radius when all weights agree, else None."""
        if not self.is_ball:
            return None
        w = next(iter(self.weights.values()), Fraction(1))
        return self.bound / w

    @property
    def inscribed_radius_squared(self) -> Fraction:
        return self.bound / max(self.weights.values())


def orbit_loewner(dims: Sequence[int], proj_norms_sq: Sequence, D: int):
    """Weights and bound of the minimal ellipsoid around a group orbit.

    Given the dimensions ``D_i`` of the irreducible pieces and the squared
    norms of the point's projections onto them, the ellipsoid is
    ``sum_i D_i / ||l_i(v)||^2 * ||l_i(x)||^2 <= D``.
    """
    if sum(dims) != D:
        raise ValueError(f"level dimensions sum to {sum(dims)}, not {D}")
    weights = []
    for Di, q in zip(dims, proj_norms_sq):
        q = Fraction(q)
        if q <= 0:
            raise ZeroProjection("the point has no component in one of the listed levels")
        weights.append(Fraction(Di) / q)
    return weights, Fraction(D)


def _check(n: int, k: int):
    if n < 2:
        raise DimensionTooSmall("need n >= 2")
    if k < 1:
        raise ValueError("need k >= 1")


def _levels(k: int) -> list[int]:
    return [2 * i for i in range(1, k + 1)]


def john_ball_C(n: int, k: int) -> EllipsoidSpec:
    """Maximal inscribed ellipsoid of the nonnegative forms: a ball of radius^2 1/(D(n,2k)-1)."""
    _check(n, k)
    return EllipsoidSpec(
        r_power(n, k),
        {j: Fraction(1) for j in _levels(k)},
        Fraction(1, dim_forms(n, 2 * k) - 1),
        "john-ball/nonneg",
    )


def loewner_ball_Cstar(n: int, k: int) -> EllipsoidSpec:
    """Minimal ellipsoid around the dual cone's base, from the orbit of ``p_{e_n}``."""
    _check(n, k)
    p = dual_point(n, 2 * k)
    comps = level_components(p)
    levels = _levels(k)
    dims = [dim_harmonics(n, j) for j in levels]
    weights, bound = orbit_loewner(dims, [norm_squared(comps[j]) for j in levels], sum(dims))
    return EllipsoidSpec(r_power(n, k), dict(zip(levels, weights)), bound, "loewner-ball/dual-cone")


def lf_loewner(n: int, k: int) -> EllipsoidSpec:
    """Minimal ellipsoid around the base of the cone of sums of 2k-th powers."""
    _check(n, k)
    coeffs = t_coefficients(n, k, k).coeffs
    weights = {2 * i: 1 / coeffs[i] ** 2 for i in range(1, k + 1)}
    return EllipsoidSpec(r_power(n, k), weights, Fraction(dim_forms(n, 2 * k) - 1), "loewner-ellipsoid/powers")


def symmetry_coefficient(cone: str, n: int, k: int) -> Fraction:
    """Symmetry coefficient about ``r^(2k)``; both cones give ``1/(D(n,k)-1)``."""
    if cone not in _CONE_ALIASES:
        raise ValueError(f"unknown cone {cone!r}")
    _check(n, k)
    val = Fraction(1, dim_forms(n, k) - 1)
    if val == 1:
        log.info("symmetry coefficient is 1 for n=%d, k=%d: the base is centrally symmetric", n, k)
    return val


def outer_radius_sq_C(n: int, k: int) -> Fraction:
    """Squared radius of the ball about ``r^(2k)`` containing every normalized nonnegative form."""
    return ball_sandwich(symmetry_coefficient(NONNEG, n, k), john_ball_C(n, k).radius_squared,
                         dim_forms(n, 2 * k) - 1, known="john")


def powerball_radius_sq(n: int, k: int) -> Fraction:
    """Squared radius of a ball about ``r^(2k)`` inside the sums-of-powers base."""
    return ball_sandwich(symmetry_coefficient(POWERS, n, k), lf_loewner(n, k).inscribed_radius_squared,
                         dim_forms(n, 2 * k) - 1, known="loewner")


def ball_sandwich(alpha, radius_sq, dim: int, known: str = "loewner") -> Fraction:
    """Squared radius on the other side of the symmetry-coefficient sandwich.

    With ``known="loewner"`` the input is a circumscribed radius and the
    result is the inscribed one, ``radius^2 * alpha / dim``.  With
    ``known="john"`` the input is inscribed and the result circumscribed,
    ``radius^2 * dim / alpha``.
    """
    alpha = Fraction(alpha)
    if not 0 < alpha <= 1:
        raise ValueError("alpha must lie in (0, 1]")
    if dim < 1:
        raise ValueError("dim must be positive")
    if known == "loewner":
        return Fraction(radius_sq) * alpha / dim
    if known == "john":
        return Fraction(radius_sq) * dim / alpha
    raise ValueError(f"known must be 'loewner' or 'john', not {known!r}")


def reflect_through_center(f: HomoForm, linf) -> HomoForm:
    """The boundary form opposite ``f`` across ``r^(2k)``.

    ``f`` must have integral 1 and minimum 0 on the sphere; ``linf`` is its
    maximum.  The result has the same integral and its maximum is
    ``linf / (linf - 1)``.
    """
    if f.d % 2:
        raise OddDegree("need an even-degree form")
    if integral(f) != 1:
        raise NotNormalized("form must have integral 1")
    M = Fraction(linf)
    if M <= 1:
        raise DegenerateMax("maximum must exceed 1 (f is the centre itself)")
    center = r_power(f.n, f.d // 2)
    return (center - f) / (M - 1) + center


def max_extreme_form(n: int, k: int) -> HomoForm:
    """A normalized nonnegative degree-2k form whose maximum is ``D(n,k)``.

    It is ``h^2 / D(n,k)`` where ``h`` is the degree-``k`` dual point at
    ``e_n``.
    """
    _check(n, k)
    h = dual_point(n, k)
    return h * h / dim_forms(n, k)


# certificates ----------------------------------------------------------------

class Verdict(enum.Enum):
    PROVED_MEMBER = "ProvedMember"
    PROVED_NON_MEMBER = "ProvedNonMember"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Certificate:
    verdict: Verdict
    distance: Fraction
    inner: Fraction
    outer: Fraction
    basis: str
    boundary: bool = False
    scale: Fraction = Fraction(1)
    normalized: HomoForm | None = field(default=None, compare=False)

    @property
    def threshold(self) -> Fraction:
        return self.outer if self.verdict is not Verdict.PROVED_MEMBER else self.inner


def _normalize(f: HomoForm):
    if f.d % 2:
        raise OddDegree("certificates apply to even-degree forms")
    s = integral(f)
    if s == 0:
        raise ZeroIntegral("cannot normalize a form with zero integral")
    return s, f / s


def certify_nonnegative(f: HomoForm) -> Certificate:
    """Decide ``f >= 0`` where a ball test settles it.

    Inside the inscribed ball of radius^2 ``1/(D(n,2k)-1)`` the form is
    nonnegative; beyond radius^2 ``D(n,k)-1`` it takes a negative value.
    """
    n, k = f.n, f.d // 2
    scale, g = _normalize(f)
    inner = john_ball_C(n, k).radius_squared
    outer = outer_radius_sq_C(n, k)
    if scale < 0:
        return Certificate(Verdict.PROVED_NON_MEMBER, scale, inner, outer, "negative-integral",
                           scale=scale, normalized=g)
    dist = norm_squared(g - r_power(n, k))
    return _decide(dist, inner, outer, dist, outer, scale, g, "john-ball/nonneg", "outer-ball/nonneg")


def certify_sum_of_powers(f: HomoForm) -> Certificate:
    """Decide membership in the cone of sums of 2k-th powers of linear forms where a test settles it."""
    n, k = f.n, f.d // 2
    scale, g = _normalize(f)
    inner = powerball_radius_sq(n, k)
    ell = lf_loewner(n, k)
    if scale < 0:
        return Certificate(Verdict.PROVED_NON_MEMBER, scale, inner, ell.bound, "negative-integral",
                           scale=scale, normalized=g)
    dist = norm_squared(g - r_power(n, k))
    return _decide(dist, inner, ell.bound, ell.functional(g), ell.bound, scale, g,
                   "inscribed-ball/powers", "loewner-ellipsoid/powers")


def _decide(dist, inner, outer, outer_value, outer_bound, scale, g, inner_tag, outer_tag):
    if dist <= inner:
        return Certificate(Verdict.PROVED_MEMBER, dist, inner, outer, inner_tag,
                           boundary=dist == inner, scale=scale, normalized=g)
    if outer_value > outer_bound:
        return Certificate(Verdict.PROVED_NON_MEMBER, outer_value, inner, outer, outer_tag,
                           scale=scale, normalized=g)
    return Certificate(Verdict.INCONCLUSIVE, outer_value if outer_value == outer_bound else dist,
                       inner, outer, "none", boundary=outer_value == outer_bound,
                       scale=scale, normalized=g)


def cone_name(cone: str) -> str:
    try:
        return _CONE_ALIASES[cone]
    except KeyError:
        raise ValueError(f"unknown cone {cone!r}") from None
