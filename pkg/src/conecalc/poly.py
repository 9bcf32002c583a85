"""Exact homogeneous forms over the rationals.

A :class:`HomoForm` is a sparse map from exponent tuples to nonzero
:class:`~fractions.Fraction` coefficients, tagged with the number of
variables ``n`` and the total degree ``d``.  Values are immutable; every
operation returns a new form.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import factorial
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import (
    ArityMismatch,
    DegreeMismatch,
    DimensionMismatch,
    FormSyntaxError,
    MixedDegree,
    WrongArity,
)

Exponent = tuple

__all__ = [
    "HomoForm",
    "parse_form",
    "format_form",
    "evaluate",
    "multiply",
    "laplacian",
    "r_power",
    "linear_form",
    "signed_permute",
    "monomial_exponents",
]


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, float):
        raise TypeError("float coefficients are not allowed; pass a Fraction")
    return Fraction(c)


class HomoForm:
    __slots__ = ("n", "d", "_terms", "_hash")

    def __init__(self, n: int, d: int, terms: Mapping[Sequence[int], object] | None = None):
        if n < 1:
            raise ValueError("need at least one variable")
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n:
                raise DimensionMismatch(f"exponent {exps} has length {len(exps)}, expected {n}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if sum(exps) != d:
                raise MixedDegree(f"exponent {exps} does not have degree {d}")
            c = _frac(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if not clean[exps]:
                    del clean[exps]
        if d < 0 and clean:
            raise ValueError("negative degree is only allowed for the zero form")
        self.n = n
        self.d = d
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n: int, d: int, terms: dict) -> "HomoForm":
        # terms must already be canonical (tuples, Fractions, no zeros)
        self = object.__new__(cls)
        self.n = n
        self.d = d
        self._terms = terms
        self._hash = None
        return self

    # constructors

    @classmethod
    def zero(cls, n: int, d: int) -> "HomoForm":
        return cls._raw(n, d, {})

    @classmethod
    def constant(cls, n: int, c=1) -> "HomoForm":
        c = _frac(c)
        return cls._raw(n, 0, {(0,) * n: c} if c else {})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1) -> "HomoForm":
        exps = tuple(exps)
        return cls(len(exps), sum(exps), {exps: coeff})

    @classmethod
    def variable(cls, n: int, i: int) -> "HomoForm":
        """The coordinate ``x_i`` (0-based index)."""
        e = [0] * n
        e[i] = 1
        return cls._raw(n, 1, {tuple(e): Fraction(1)})

    # container protocol

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return MappingProxyType(self._terms)

    def items(self):
        """Terms in canonical (descending lexicographic) exponent order."""
        return sorted(self._terms.items(), reverse=True)

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, HomoForm):
            return NotImplemented
        return self.n == other.n and self.d == other.d and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.d, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"HomoForm(n={self.n}, d={self.d}, {format_form(self)!r})"

    def __str__(self):
        return format_form(self)

    # arithmetic

    def _check_same(self, other: "HomoForm"):
        if self.n != other.n:
            raise DimensionMismatch(f"forms live in {self.n} and {other.n} variables")
        if self.d != other.d:
            raise DegreeMismatch(f"cannot add forms of degree {self.d} and {other.d}")

    def __add__(self, other):
        if not isinstance(other, HomoForm):
            return NotImplemented
        self._check_same(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return HomoForm._raw(self.n, self.d, out)

    def __neg__(self):
        return HomoForm._raw(self.n, self.d, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, HomoForm):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "HomoForm":
        c = _frac(c)
        if not c:
            return HomoForm.zero(self.n, self.d)
        return HomoForm._raw(self.n, self.d, {e: c * v for e, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, HomoForm):
            return multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = HomoForm.constant(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = multiply(result, base)
            k >>= 1
            if k:
                base = multiply(base, base)
        return result

    def __call__(self, point):
        return evaluate(self, point)


def multiply(f: HomoForm, g: HomoForm) -> HomoForm:
    if f.n != g.n:
        raise DimensionMismatch(f"forms live in {f.n} and {g.n} variables")
    out: dict = {}
    n = f.n
    for ea, ca in f._terms.items():
        for eb, cb in g._terms.items():
            e = tuple(ea[i] + eb[i] for i in range(n))
            out[e] = out.get(e, 0) + ca * cb
    return HomoForm._raw(n, f.d + g.d, {e: c for e, c in out.items() if c})


def evaluate(f: HomoForm, point: Sequence):
    """Exact value of ``f`` at ``point`` (floats in, float out)."""
    if len(point) != f.n:
        raise ArityMismatch(f"point has {len(point)} coordinates, form has {f.n} variables")
    total = 0
    for exps, c in f._terms.items():
        term = c
        for x, e in zip(point, exps):
            if e:
                term *= x ** e
        total += term
    if not f._terms and all(isinstance(x, (int, Fraction)) for x in point):
        return Fraction(0)
    return total


def laplacian(f: HomoForm) -> HomoForm:
    out: dict = {}
    for exps, c in f._terms.items():
        for i, a in enumerate(exps):
            if a >= 2:
                e = exps[:i] + (a - 2,) + exps[i + 1:]
                out[e] = out.get(e, 0) + c * a * (a - 1)
    return HomoForm._raw(f.n, f.d - 2, {e: c for e, c in out.items() if c})


@lru_cache(maxsize=None)
def r_power(n: int, k: int) -> HomoForm:
    """``(x_1^2 + ... + x_n^2)^k``, expanded by the multinomial theorem."""
    terms = {}
    for combo in combinations_with_replacement(range(n), k):
        half = [0] * n
        for i in combo:
            half[i] += 1
        coeff = factorial(k)
        for h in half:
            coeff //= factorial(h)
        terms[tuple(2 * h for h in half)] = Fraction(coeff)
    return HomoForm._raw(n, 2 * k, terms)


def linear_form(coeffs: Sequence) -> HomoForm:
    n = len(coeffs)
    terms = {}
    for i, c in enumerate(coeffs):
        c = _frac(c)
        if c:
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
    return HomoForm._raw(n, 1, terms)


def signed_permute(f: HomoForm, perm: Sequence[int], signs: Sequence[int]) -> HomoForm:
    """Substitute ``x_i -> signs[i] * x_{perm[i]}``.

    Signed permutation matrices are exact orthogonal maps, which makes them
    the natural test rotations for exact invariance checks.
    """
    if sorted(perm) != list(range(f.n)) or len(signs) != f.n:
        raise ValueError("perm must be a permutation of range(n) with one sign per variable")
    out = {}
    for exps, c in f._terms.items():
        e = [0] * f.n
        sign = 1
        for i, a in enumerate(exps):
            e[perm[i]] = a
            if signs[i] < 0 and a % 2:
                sign = -sign
        out[tuple(e)] = sign * c
    return HomoForm._raw(f.n, f.d, out)


def monomial_exponents(n: int, d: int) -> list[Exponent]:
    """All exponent tuples of degree ``d`` in ``n`` variables, descending lex order."""
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return sorted(out, reverse=True)


# text format ----------------------------------------------------------------

def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_form(f: HomoForm) -> str:
    if not f._terms:
        return "0"
    pieces = []
    for exps, c in f.items():
        mono = "*".join(
            f"x{i + 1}" if a == 1 else f"x{i + 1}^{a}" for i, a in enumerate(exps) if a
        )
        mag = abs(c)
        if not mono:
            body = _format_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_coeff(mag)}*{mono}"
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append((" - " if c < 0 else " + ") + body)
    return "".join(pieces)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>x\d+)|(?P<r2>r2)|(?P<op>[-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    toks = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise FormSyntaxError(f"unexpected character at position {pos}: {text[pos:pos + 10]!r}")
        pos = m.end()
        kind = m.lastgroup
        toks.append((kind, m.group(kind)))
    return toks


class _Poly:
    """Possibly inhomogeneous intermediate used while parsing.

    ``degs`` records the degrees of every monomial that went into the value,
    so a cancellation to zero still reveals mixed input.
    """

    __slots__ = ("t", "degs")

    def __init__(self, t, degs):
        self.t = t
        self.degs = degs

    def add(self, o, sign=1):
        t = dict(self.t)
        for e, c in o.t.items():
            s = t.get(e, 0) + sign * c
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        return _Poly(t, self.degs | o.degs)

    def neg(self):
        return _Poly({e: -c for e, c in self.t.items()}, self.degs)

    def mul(self, o):
        t = {}
        for ea, ca in self.t.items():
            for eb, cb in o.t.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                t[e] = t.get(e, 0) + ca * cb
        return _Poly({e: c for e, c in t.items() if c}, frozenset(a + b for a in self.degs for b in o.degs))

    def constant_value(self):
        if self.degs != frozenset({0}):
            return None
        return next(iter(self.t.values()), Fraction(0))


class _Parser:
    def __init__(self, text: str, n: int):
        self.toks = _tokenize(text)
        self.i = 0
        self.n = n

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, value):
        kind, v = self.take()
        if v != value:
            raise FormSyntaxError(f"expected {value!r}, got {v!r}")

    def const(self, c) -> _Poly:
        c = Fraction(c)
        return _Poly({(0,) * self.n: c} if c else {}, frozenset({0}))

    def parse(self) -> _Poly:
        if not self.toks:
            raise FormSyntaxError("empty form")
        p = self.expr()
        if self.i != len(self.toks):
            raise FormSyntaxError(f"trailing input at token {self.peek()[1]!r}")
        return p

    def expr(self) -> _Poly:
        kind, v = self.peek()
        sign = 1
        if v in ("+", "-"):
            self.take()
            sign = -1 if v == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = acc.neg()
        while self.peek()[1] in ("+", "-"):
            _, op = self.take()
            acc = acc.add(self.term(), 1 if op == "+" else -1)
        return acc

    def term(self) -> _Poly:
        acc = self.power()
        while self.peek()[1] in ("*", "/"):
            _, op = self.take()
            rhs = self.power()
            if op == "*":
                acc = acc.mul(rhs)
            else:
                c = rhs.constant_value()
                if c is None:
                    raise FormSyntaxError("division is only allowed by a rational constant")
                if not c:
                    raise FormSyntaxError("division by zero")
                acc = acc.mul(self.const(1 / c))
        return acc

    def power(self) -> _Poly:
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            kind, v = self.take()
            if kind != "num":
                raise FormSyntaxError("exponent must be a nonnegative integer")
            e = int(v)
            out = self.const(1)
            for _ in range(e):
                out = out.mul(base)
            return out
        return base

    def atom(self) -> _Poly:
        kind, v = self.take()
        if kind == "num":
            return self.const(int(v))
        if kind == "var":
            idx = int(v[1:])
            if not 1 <= idx <= self.n:
                raise WrongArity(f"variable {v} outside x1..x{self.n}")
            e = [0] * self.n
            e[idx - 1] = 1
            return _Poly({tuple(e): Fraction(1)}, frozenset({1}))
        if kind == "r2":
            r2 = r_power(self.n, 1)
            return _Poly(dict(r2.terms), frozenset({2}))
        if v == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if v == "-":
            return self.power().neg()
        raise FormSyntaxError(f"unexpected token {v!r}")


def parse_form(text: str, n: int, d: int | None = None) -> HomoForm:
    """Parse ``text`` into a form in ``n`` variables.

    Accepts the plain grammar ``[coeff*]x1^a*x2^b ± ...`` plus the ``r2``
    token, parentheses, integer powers and division by constants.  ``d`` is
    only consulted when the text evaluates to zero.
    """
    p = _Parser(text, n).parse()
    nonzero_degs = {sum(e) for e in p.t}
    if len(nonzero_degs) > 1 or len(p.degs) > 1:
        raise MixedDegree(f"monomials of degrees {sorted(p.degs)} in {text!r}")
    if p.t:
        deg = nonzero_degs.pop()
        if d is not None and d != deg:
            raise DegreeMismatch(f"expected degree {d}, parsed degree {deg}")
    else:
        deg = d if d is not None else next(iter(p.degs))
    return HomoForm._raw(n, deg, dict(p.t))


def form_from_coefficients(n: int, d: int, coeffs: Iterable) -> HomoForm:
    """Build a form from coefficients listed in :func:`monomial_exponents` order."""
    return HomoForm(n, d, dict(zip(monomial_exponents(n, d), coeffs)))
