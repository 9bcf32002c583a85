"""Exact univariate polynomials as ascending coefficient lists of Fractions.

Used for axial restrictions of forms to the sphere and for the weighted
one-dimensional integrals behind the Legendre-polynomial identities.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Poly = list  # ascending coefficients, Fractions


def trim(p: Sequence) -> Poly:
    p = [Fraction(c) for c in p]
    while p and not p[-1]:
        p.pop()
    return p


def degree(p: Sequence) -> int:
    return len(trim(p)) - 1


def peval(p: Sequence, t):
    acc = 0
    for c in reversed(p):
        acc = acc * t + c
    return acc


def padd(p: Sequence, q: Sequence) -> Poly:
    out = [Fraction(0)] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def pscale(p: Sequence, c) -> Poly:
    return trim([c * a for a in p])


def pmul(p: Sequence, q: Sequence) -> Poly:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def ppow(p: Sequence, k: int) -> Poly:
    out: Poly = [Fraction(1)]
    for _ in range(k):
        out = pmul(out, p)
    return out


def pderiv(p: Sequence, times: int = 1) -> Poly:
    p = list(p)
    for _ in range(times):
        p = [i * c for i, c in enumerate(p)][1:]
    return trim(p)


def integrate_interval(p: Sequence) -> Fraction:
    """Exact integral of ``p`` over ``[-1, 1]``."""
    return sum((Fraction(2 * c, i + 1) for i, c in enumerate(p) if i % 2 == 0), Fraction(0))


def one_minus_t2_power(j: int) -> Poly:
    """``(1 - t^2)^j`` for a nonnegative integer ``j``."""
    return ppow([Fraction(1), Fraction(0), Fraction(-1)], j)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def real_roots(p: Sequence, a: Fraction, b: Fraction, tol: Fraction) -> list[Fraction]:
    """Approximate the odd-multiplicity roots of ``p`` inside ``[a, b]``.

    Roots are isolated recursively: between consecutive critical points
    ``p`` is monotone, so each sign change brackets exactly one root, which
    is then bisected down to width ``tol``.  Roots of even multiplicity are
    skipped because ``p`` does not change sign there, which is harmless for
    the extremum search built on top.
    """
    p = trim(p)
    if len(p) <= 1:
        return []
    if len(p) == 2:
        r = -p[0] / p[1]
        return [r] if a <= r <= b else []
    crit = real_roots(pderiv(p), a, b, tol)
    knots = [a] + [c for c in crit if a < c < b] + [b]
    roots = []
    for lo, hi in zip(knots, knots[1:]):
        flo, fhi = peval(p, lo), peval(p, hi)
        if flo == 0:
            roots.append(lo)
            continue
        if _sign(flo) * _sign(fhi) >= 0:
            continue
        slo = _sign(flo)
        while hi - lo > tol:
            mid = (lo + hi) / 2
            fm = peval(p, mid)
            if fm == 0:
                lo = hi = mid
                break
            if _sign(fm) == slo:
                lo = mid
            else:
                hi = mid
        roots.append((lo + hi) / 2)
    if peval(p, b) == 0 and (not roots or roots[-1] != b):
        roots.append(b)
    return roots


def interval_extrema(p: Sequence, a=Fraction(-1), b=Fraction(1), tol=Fraction(1, 2**50)):
    """Minimum and maximum of ``p`` on ``[a, b]`` as ``((tmin, vmin), (tmax, vmax))``.

    Candidates are the endpoints and the critical points; values are exact
    evaluations at the refined candidate abscissae.
    """
    a, b, tol = Fraction(a), Fraction(b), Fraction(tol)
    candidates = [a, b] + real_roots(pderiv(p), a, b, tol)
    vals = [(peval(p, t), t) for t in candidates]
    vmin, tmin = min(vals, key=lambda vt: (vt[0], vt[1]))
    vmax, tmax = max(vals, key=lambda vt: (vt[0], -vt[1]))
    return (tmin, vmin), (tmax, vmax)
