"""The ring Z + Z[1/2][x]x inside Q[x].

This is the explicit model of A(Z[x]; x -> 2x): phi^{-1}(x) = x/2, so
fractions reach every dyadic coefficient except in the constant term.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .. import sparse


def _dyadic(c: Fraction) -> bool:
    d = c.denominator
    return d & (d - 1) == 0


def halfint_membership(q) -> bool:
    """Is the rational polynomial ``q`` (coefficients low to high) in Z + Z[1/2][x]x?"""
    coeffs = q.coeffs if hasattr(q, "coeffs") else q
    coeffs = [Fraction(c) for c in coeffs]
    if not coeffs:
        return True
    return coeffs[0].denominator == 1 and all(_dyadic(c) for c in coeffs[1:])


class HalfIntPoly:
    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Sequence = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        if not halfint_membership(cs):
            raise ValueError(f"{cs} is not in Z + Z[1/2][x]x")
        self.coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def _unchecked(cls, coeffs) -> "HalfIntPoly":
        # products and sums of members stay members
        p = cls.__new__(cls)
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        p.coeffs = tuple(cs)
        p._hash = None
        return p

    def to_sparse(self) -> sparse.SPoly:
        return {i: c for i, c in enumerate(self.coeffs) if c}

    @classmethod
    def from_sparse(cls, p: sparse.SPoly) -> "HalfIntPoly":
        if not p:
            return cls(())
        cs = [Fraction(0)] * (max(p) + 1)
        for e, c in p.items():
            cs[e] = c
        return cls(cs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def _lift(self, other):
        if isinstance(other, HalfIntPoly):
            return other
        if isinstance(other, int):
            return HalfIntPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return HalfIntPoly._unchecked(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return HalfIntPoly._unchecked(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return HalfIntPoly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return HalfIntPoly._unchecked(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("HalfIntPoly", self.coeffs))
        return self._hash

    def act(self, n: int) -> "HalfIntPoly":
        """sigma^n with sigma(f)(x) = f(2x); n may be negative."""
        f = Fraction(2) ** n
        return HalfIntPoly._unchecked(c * f ** i for i, c in enumerate(self.coeffs))

    def __str__(self):
        from ..polys import format_coeff_poly
        return format_coeff_poly(self.coeffs)

    def __repr__(self):
        return f"HalfIntPoly({self})"


def halfint_quotient(a: HalfIntPoly, b: HalfIntPoly) -> Optional[HalfIntPoly]:
    """b / a if it lies in the model ring, else None."""
    if not a:
        raise ZeroDivisionError("division by zero")
    q, r = sparse.divmod_(b.to_sparse(), a.to_sparse())
    if r:
        return None
    cs = [Fraction(0)] * (max(q) + 1 if q else 0)
    for e, c in q.items():
        cs[e] = c
    if not halfint_membership(cs):
        return None
    return HalfIntPoly(cs)


def halfint_contract(g: HalfIntPoly) -> list[list[int]]:
    """Integer coefficient lists generating (A*g) & Z[x], for g in Z[x].

    With g = 2^e * o * p (o odd, p primitive) this is Z[x]*g + Z[x]*x*o*p:
    a quotient q = q0 + x*q' (q0 in Z, q' dyadic) keeps g*q integral iff
    o*p*q' is integral, and Gauss's lemma forces q' into Z[x].
    """
    if any(c.denominator != 1 for c in g.coeffs):
        raise ValueError("contraction needs g with integer coefficients")
    ints = [int(c) for c in g.coeffs]
    content = 0
    for c in ints:
        content = gcd(content, c)
    two = content & -content
    reduced = [0] + [c // two for c in ints]
    return [ints, reduced]
