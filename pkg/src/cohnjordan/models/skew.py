"""Skew polynomials D[t; sigma] over D = union of Q(x^(1/2^n)), sigma(x) = x^2.

Coefficients are written on the left and t*a = sigma(a)*t.  The subring
R = Q(x)[t; sigma] (coefficients of level 0) is a base ring in its own
right, and D[t; sigma] is the Cohn-Jordan extension of R.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .. import sparse
from ..contract import SRing, Verdict
from ..monoid import MonoidElement
from .puiseux import DyadicPuiseux


def _raise_level(p: sparse.SPoly, by: int) -> sparse.SPoly:
    return sparse.stretch(p, 2 ** by) if by else p


class DyadicRatFunc:
    """An element of D, stored as a reduced fraction of polynomials in y = x^(1/2^level).

    The level is minimal and the denominator monic, so the triple
    (level, numerator, denominator) is canonical.
    """

    __slots__ = ("level", "num", "den", "_hash")

    def __init__(self, num=0, den=1):
        num = num if isinstance(num, DyadicPuiseux) else DyadicPuiseux.const(num)
        den = den if isinstance(den, DyadicPuiseux) else DyadicPuiseux.const(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        n = max(num.level, den.level)
        self._set(n, num.to_poly(n), den.to_poly(n))

    @classmethod
    def _from_polys(cls, level: int, num: sparse.SPoly, den: sparse.SPoly) -> "DyadicRatFunc":
        obj = cls.__new__(cls)
        obj._set(level, num, den)
        return obj

    def _set(self, level, num, den):
        if not num:
            self.level, self.num, self.den = 0, {}, {0: Fraction(1)}
            self._hash = None
            return
        g = sparse.gcd(num, den)
        num = sparse.divmod_(num, g)[0]
        den = sparse.divmod_(den, g)[0]
        c = sparse.lc(den)
        num, den = sparse.scale(num, 1 / c), sparse.scale(den, 1 / c)
        while level > 0 and sparse.all_divisible(num, 2) and sparse.all_divisible(den, 2):
            num, den = sparse.squeeze(num, 2), sparse.squeeze(den, 2)
            level -= 1
        self.level, self.num, self.den = level, num, den
        self._hash = None

    @classmethod
    def of(cls, value) -> "DyadicRatFunc":
        if isinstance(value, DyadicRatFunc):
            return value
        return cls(value)

    def _at(self, level: int):
        by = level - self.level
        return _raise_level(self.num, by), _raise_level(self.den, by)

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other):
        other = DyadicRatFunc.of(other)
        n = max(self.level, other.level)
        a, b = self._at(n)
        c, d = other._at(n)
        return DyadicRatFunc._from_polys(n, sparse.add(sparse.mul(a, d), sparse.mul(c, b)),
                                         sparse.mul(b, d))

    __radd__ = __add__

    def __neg__(self):
        return DyadicRatFunc._from_polys(self.level, sparse.scale(self.num, -1), self.den)

    def __sub__(self, other):
        return self + (-DyadicRatFunc.of(other))

    def __rsub__(self, other):
        return DyadicRatFunc.of(other) - self

    def __mul__(self, other):
        other = DyadicRatFunc.of(other)
        n = max(self.level, other.level)
        a, b = self._at(n)
        c, d = other._at(n)
        return DyadicRatFunc._from_polys(n, sparse.mul(a, c), sparse.mul(b, d))

    __rmul__ = __mul__

    def inverse(self) -> "DyadicRatFunc":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return DyadicRatFunc._from_polys(self.level, self.den, self.num)

    def __truediv__(self, other):
        return self * DyadicRatFunc.of(other).inverse()

    def __rtruediv__(self, other):
        return DyadicRatFunc.of(other) * self.inverse()

    def act(self, n: int) -> "DyadicRatFunc":
        """sigma^n: doubling exponents n times, or halving for n < 0."""
        if n >= 0:
            m = 2 ** n
            return DyadicRatFunc._from_polys(self.level, sparse.stretch(self.num, m),
                                             sparse.stretch(self.den, m))
        return DyadicRatFunc._from_polys(self.level - n, self.num, self.den)

    def key(self):
        return (self.level, tuple(sorted(self.num.items())), tuple(sorted(self.den.items())))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, DyadicPuiseux)):
            other = DyadicRatFunc(other)
        if not isinstance(other, DyadicRatFunc):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    def numerator(self) -> DyadicPuiseux:
        return DyadicPuiseux.from_poly(self.level, self.num)

    def denominator(self) -> DyadicPuiseux:
        return DyadicPuiseux.from_poly(self.level, self.den)

    def __str__(self):
        num = str(self.numerator())
        if self.den == {0: 1}:
            return num
        if " " in num:
            num = f"({num})"
        return f"{num}/({self.denominator()})"

    def __repr__(self):
        return f"DyadicRatFunc({self})"


class SkewPoly:
    """sum_i c_i t^i with c_i in D, coefficients on the left."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Sequence = ()):
        cs = [DyadicRatFunc.of(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def t(cls, power: int = 1) -> "SkewPoly":
        return cls([0] * power + [1])

    @classmethod
    def const(cls, c) -> "SkewPoly":
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> DyadicRatFunc:
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def _lift(self, other):
        if isinstance(other, SkewPoly):
            return other
        if isinstance(other, (int, Fraction, DyadicPuiseux, DyadicRatFunc)):
            return SkewPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        zero = DyadicRatFunc(0)
        return SkewPoly([(self.coeffs[i] if i < len(self.coeffs) else zero)
                         + (other.coeffs[i] if i < len(other.coeffs) else zero)
                         for i in range(n)])

    def __radd__(self, other):
        return self._lift(other) + self

    def __neg__(self):
        return SkewPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return skew_mul(self, other)

    def __rmul__(self, other):
        return skew_mul(self._lift(other), self)

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("SkewPoly", self.coeffs))
        return self._hash

    def act(self, n: int) -> "SkewPoly":
        """sigma^n applied coefficientwise; sigma(t) = t."""
        return SkewPoly([c.act(n) for c in self.coeffs])

    @property
    def level(self) -> int:
        return max((c.level for c in self.coeffs), default=0)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            cs = str(c)
            if not mono:
                parts.append(f"({cs})" if " " in cs else cs)
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"({cs})*{mono}" if " " in cs or "/" in cs else f"{cs}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"SkewPoly({self})"


def skew_mul(p: SkewPoly, q: SkewPoly) -> SkewPoly:
    """(a t^i)(b t^j) = a sigma^i(b) t^(i+j), extended bilinearly."""
    if not p.coeffs or not q.coeffs:
        return SkewPoly(())
    out = [DyadicRatFunc(0)] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if not a:
            continue
        for j, b in enumerate(q.coeffs):
            if b:
                out[i + j] = out[i + j] + a * b.act(i)
    return SkewPoly(out)


def skew_in_R(p: SkewPoly) -> bool:
    """Are all coefficients rational functions of x (level 0)?"""
    return all(c.level == 0 for c in p.coeffs)


def skew_right_divmod(p: SkewPoly, c: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """(q, r) with p == q*c + r and deg r < deg c."""
    if not c:
        raise ZeroDivisionError("right division by zero")
    q = [DyadicRatFunc(0)] * max(p.degree - c.degree + 1, 0)
    r = p
    while r and r.degree >= c.degree:
        k = r.degree - c.degree
        f = r.lc / c.lc.act(k)
        q[k] = q[k] + f
        r = r - skew_mul(SkewPoly([0] * k + [f]), c)
    return SkewPoly(q), r


def skew_right_gcd(gens: Sequence[SkewPoly]) -> SkewPoly:
    """Monic generator of the left ideal sum A*g."""
    g = SkewPoly(())
    for h in gens:
        a, b = h, g
        while b:
            a, b = b, skew_right_divmod(a, b)[1]
        g = a
    if not g:
        return g
    return skew_mul(SkewPoly.const(g.lc.inverse()), g)


class SkewRing(SRing):
    """R = Q(x)[t; sigma] with the action of sigma on coefficients (sigma(t) = t)."""

    k = 1
    name = "Skew{}"

    def descriptor(self):
        return "Skew{}"

    def __eq__(self, other):
        return isinstance(other, SkewRing)

    def __hash__(self):
        return hash("SkewRing")

    def zero(self):
        return SkewPoly(())

    def one(self):
        return SkewPoly.const(1)

    def coerce(self, c):
        return SkewPoly.const(c)

    def parse(self, text: str):
        from ..parsing import parse_skew
        p = parse_skew(text)
        if not skew_in_R(p):
            raise ValueError(f"{text!r} has coefficients outside Q(x)")
        return p

    @property
    def image_is_summand(self) -> bool:
        # coefficientwise projection Q(x) -> Q(x^2) is right sigma(R)-linear
        return True

    def act(self, s, r):
        return r.act(self.mono(s)[0])

    def preimage(self, s, r):
        q = r.act(-self.mono(s)[0])
        return q if skew_in_R(q) else None

    def ideal_membership(self, r, gens):
        g = skew_right_gcd(list(gens))
        if not g:
            ok = not r
        else:
            ok = not skew_right_divmod(r, g)[1]
        if ok:
            return Verdict.member(MonoidElement.zero(1), f"right-divisible by {g}")
        return Verdict.non_member(f"nonzero right remainder modulo {g}")

    def reduce_ideal(self, gens):
        g = skew_right_gcd(list(gens))
        return [g] if g else []

    def random_element(self, rng: random.Random, degree: int = 2, bound: int = 3):
        # t^i twists coefficients by sigma^i, so products grow like 2^degree
        degree = min(degree, 2)
        coeffs = []
        for _ in range(rng.randint(0, degree) + 1):
            num = DyadicPuiseux({i: rng.randint(-bound, bound) for i in range(rng.randint(0, 2) + 1)})
            den = DyadicPuiseux({0: 1, 1: rng.randint(0, bound)})
            coeffs.append(DyadicRatFunc(num, den))
        return SkewPoly(coeffs)


def random_dyadic_ratfunc(rng: random.Random, max_level: int = 2, bound: int = 3) -> DyadicRatFunc:
    level = rng.randint(0, max_level)
    step = Fraction(1, 2 ** level)

    def poly(terms):
        return DyadicPuiseux({i * step: rng.randint(-bound, bound) for i in range(terms)})

    num = poly(rng.randint(1, 3))
    den = poly(rng.randint(1, 2))
    if not den:
        den = DyadicPuiseux.const(1)
    return DyadicRatFunc(num, den)


def random_skew(rng: random.Random, degree: int = 2, max_level: int = 2, bound: int = 3) -> SkewPoly:
    return SkewPoly([random_dyadic_ratfunc(rng, max_level, bound) for _ in range(rng.randint(0, degree) + 1)])

