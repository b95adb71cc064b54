"""Dyadic Puiseux polynomials K[x^(1/2^n) | n >= 0] over Q.

This ring is the explicit model of A(Q[x]; x -> x^2).  Every element lives
at some *level* n, meaning it is an ordinary polynomial in y = x^(1/2^n);
gcds and divisibility are computed there.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .. import sparse


def _is_dyadic(q: Fraction) -> bool:
    d = q.denominator
    return d & (d - 1) == 0


def _level_of(q: Fraction) -> int:
    return q.denominator.bit_length() - 1


class DyadicPuiseux:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        for e, c in (terms or {}).items():
            e, c = Fraction(e), Fraction(c)
            if e < 0 or not _is_dyadic(e):
                raise ValueError(f"exponent {e} is not a non-negative dyadic rational")
            if c:
                clean[e] = clean.get(e, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    @classmethod
    def const(cls, c) -> "DyadicPuiseux":
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent, c=1) -> "DyadicPuiseux":
        return cls({exponent: c})

    @classmethod
    def x(cls) -> "DyadicPuiseux":
        return cls({1: 1})

    @property
    def level(self) -> int:
        return max((_level_of(e) for e in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _lift(self, other):
        if isinstance(other, DyadicPuiseux):
            return other
        if isinstance(other, (int, Fraction)):
            return DyadicPuiseux.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return DyadicPuiseux(out)

    __radd__ = __add__

    def __neg__(self):
        return DyadicPuiseux({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for e, a in self.terms.items():
            for f, b in other.terms.items():
                out[e + f] = out.get(e + f, 0) + a * b
        return DyadicPuiseux(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = DyadicPuiseux.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def act(self, n: int) -> "DyadicPuiseux":
        """sigma^n with sigma(x) = x^2; n may be negative."""
        f = Fraction(2) ** n
        return DyadicPuiseux({e * f: c for e, c in self.terms.items()})

    def to_poly(self, level: Optional[int] = None) -> sparse.SPoly:
        """Coefficients as a polynomial in y = x^(1/2^level)."""
        n = self.level if level is None else level
        scale = 2 ** n
        out = {}
        for e, c in self.terms.items():
            k = e * scale
            if k.denominator != 1:
                raise ValueError(f"{self} does not live at level {n}")
            out[int(k)] = c
        return out

    @classmethod
    def from_poly(cls, level: int, p: sparse.SPoly) -> "DyadicPuiseux":
        scale = Fraction(1, 2 ** level)
        return cls({e * scale: c for e, c in p.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            neg = c < 0
            a = -c if neg else c
            if e == 0:
                body = str(a)
            else:
                mono = "x" if e == 1 else (f"x^{e}" if e.denominator == 1 else f"x^({e})")
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((neg, body))
        out = ("-" if parts[0][0] else "") + parts[0][1]
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __repr__(self):
        return f"DyadicPuiseux({self})"


def puiseux_level(a: DyadicPuiseux) -> int:
    return a.level


def _common_level(*elems: DyadicPuiseux) -> int:
    return max(a.level for a in elems)


def puiseux_gcd(a: DyadicPuiseux, b: DyadicPuiseux) -> DyadicPuiseux:
    """Monic (in y at its level) generator of A*a + A*b."""
    return puiseux_xgcd(a, b)[0]


def puiseux_xgcd(a: DyadicPuiseux, b: DyadicPuiseux):
    """(g, u, v) with u*a + v*b == g."""
    if not a and not b:
        raise ValueError("gcd of two zeros")
    n = _common_level(a, b)
    g, u, v = sparse.xgcd(a.to_poly(n), b.to_poly(n))
    # monic in y at level n is monic at the minimal level too
    return tuple(DyadicPuiseux.from_poly(n, p) for p in (g, u, v))


def puiseux_gcd_many(elems) -> DyadicPuiseux:
    elems = [e for e in elems if e]
    if not elems:
        return DyadicPuiseux()
    if len(elems) == 1:
        g = elems[0]
        return DyadicPuiseux.from_poly(g.level, sparse.monic(g.to_poly()))
    g = elems[0]
    for e in elems[1:]:
        g = puiseux_gcd(g, e)
    return g


def puiseux_quotient(a: DyadicPuiseux, b: DyadicPuiseux) -> Optional[DyadicPuiseux]:
    """b / a when it is again a dyadic Puiseux polynomial, else None."""
    if not a:
        raise ZeroDivisionError("division by the zero Puiseux polynomial")
    n = _common_level(a, b)
    q, r = sparse.divmod_(b.to_poly(n), a.to_poly(n))
    if r:
        return None
    return DyadicPuiseux.from_poly(n, q)


def puiseux_divides(a: DyadicPuiseux, b: DyadicPuiseux) -> bool:
    return puiseux_quotient(a, b) is not None


def puiseux_contract(g: DyadicPuiseux) -> DyadicPuiseux:
    """Monic generator of (A*g) & Q[x].

    Walks down one level at a time: an even polynomial in y is divisible by
    P(y) iff it is divisible by P(-y) too, hence by their lcm, made even.
    """
    if not g:
        return g
    n = g.level
    p = sparse.monic(g.to_poly(n))
    while n > 0:
        L = sparse.lcm(p, sparse.reflect(p))
        if not sparse.all_divisible(L, 2):
            # L is odd, so an even multiple of it is a multiple of y*L
            L = {e + 1: c for e, c in L.items()}
        p = sparse.monic(sparse.squeeze(L, 2))
        n -= 1
    return DyadicPuiseux.from_poly(0, p)
