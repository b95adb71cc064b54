"""Registered explicit models of A(R; S) and the isomorphisms into them.

A model answers membership questions in A by its own arithmetic.  Each
answer is ``True``/``False`` when the model can decide it and ``None``
otherwise; only decided answers are ever turned into verdicts.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .. import sparse
from ..contract import NoModelRegistered, SRing
from ..extension import ExtElement, Extension
from ..polys import QPoly, ZPoly
from ..rings import QPolyRing, ZPolyRing
from .halfint import HalfIntPoly, halfint_contract, halfint_quotient
from .puiseux import (DyadicPuiseux, puiseux_contract, puiseux_divides,
                      puiseux_gcd_many)
from .skew import (DyadicRatFunc, SkewPoly, SkewRing, skew_right_divmod,
                   skew_right_gcd)


class Model:
    name = "model"

    def __init__(self, ext: Extension):
        self.ext = ext

    def to_model(self, a: ExtElement):
        raise NotImplementedError

    def from_model(self, m) -> ExtElement:
        raise NotImplementedError

    def act(self, n: int, m):
        return m.act(n)

    def ideal_member(self, m, gens: Sequence) -> Optional[bool]:
        raise NotImplementedError

    def contract(self, gens: Sequence) -> Optional[list]:
        """Base-ring generators of (A * gens) & R, if the model can tell."""
        return None

    def principal_generator(self, gens: Sequence):
        return None

    def render(self, m) -> str:
        return str(m)


class PuiseuxModel(Model):
    """A(Q[x]; x -> x^2) = Q[x^(1/2^n) | n >= 0]."""

    name = "DyadicPuiseux"

    def to_model(self, a):
        step = Fraction(1, 2 ** a.denom[0])
        return DyadicPuiseux({i * step: c for i, c in enumerate(a.num.coeffs) if c})

    def from_model(self, m):
        n = m.level
        p = m.to_poly(n)
        coeffs = [Fraction(0)] * (max(p) + 1 if p else 0)
        for e, c in p.items():
            coeffs[e] = c
        return self.ext.normalize(n, QPoly(coeffs))

    def ideal_member(self, m, gens):
        g = puiseux_gcd_many(gens)
        if not g:
            return not m
        return puiseux_divides(g, m)

    def principal_generator(self, gens):
        return puiseux_gcd_many(gens)

    def contract(self, gens):
        g = puiseux_gcd_many(gens)
        if not g:
            return []
        c = puiseux_contract(g).to_poly(0)
        coeffs = [Fraction(0)] * (max(c) + 1)
        for e, v in c.items():
            coeffs[e] = v
        return [QPoly(coeffs)]


class HalfIntModel(Model):
    """A(Z[x]; x -> 2x) = Z + Z[1/2][x]x inside Q[x]."""

    name = "HalfIntPoly"

    def to_model(self, a):
        f = Fraction(1, 2 ** a.denom[0])
        return HalfIntPoly(c * f ** i for i, c in enumerate(a.num.coeffs))

    def from_model(self, m):
        n = 0
        for i, c in enumerate(m.coeffs):
            if i and c:
                v = c.denominator.bit_length() - 1
                n = max(n, -(-v // i))
        scale = 2 ** n
        return self.ext.normalize(n, ZPoly(int(c * scale ** i) for i, c in enumerate(m.coeffs)))

    def ideal_member(self, m, gens):
        gens = [g for g in gens if g]
        if not gens:
            return not m
        if len(gens) == 1:
            return halfint_quotient(gens[0], m) is not None
        # a member of A*gens is a member of Q[x]*gens
        g = {}
        for h in gens:
            g = sparse.gcd(g, h.to_sparse()) if g else sparse.monic(h.to_sparse())
        if sparse.divmod_(m.to_sparse(), g)[1]:
            return False
        return None

    def principal_generator(self, gens):
        gens = [g for g in gens if g]
        if len(gens) == 1:
            return gens[0]
        return None

    def contract(self, gens):
        gens = [g for g in gens if g]
        if not gens:
            return []
        if len(gens) != 1 or any(c.denominator != 1 for c in gens[0].coeffs):
            return None
        return [ZPoly(c) for c in halfint_contract(gens[0])]


class SkewModel(Model):
    """A(Q(x)[t; sigma]; sigma) = D[t; sigma]."""

    name = "SkewPoly"

    def to_model(self, a):
        return a.num.act(-a.denom[0])

    def from_model(self, m):
        n = m.level
        return self.ext.normalize(n, m.act(n))

    def ideal_member(self, m, gens):
        g = skew_right_gcd(list(gens))
        if not g:
            return not m
        return not skew_right_divmod(m, g)[1]

    def principal_generator(self, gens):
        return skew_right_gcd(list(gens))


def model_for(ext: Extension | SRing) -> Model:
    if isinstance(ext, SRing):
        ext = Extension(ext)
    ring = ext.ring
    if isinstance(ring, QPolyRing) and ring.params == ((Fraction(1), 2),):
        return PuiseuxModel(ext)
    if isinstance(ring, ZPolyRing) and ring.params == ((2, 1),):
        return HalfIntModel(ext)
    if isinstance(ring, SkewRing):
        return SkewModel(ext)
    raise NoModelRegistered(f"no explicit model registered for {ring.descriptor()}")


def has_model(ext: Extension | SRing) -> bool:
    try:
        model_for(ext)
    except NoModelRegistered:
        return False
    return True


def iso_to_model(a: ExtElement):
    return model_for(a.ext).to_model(a)


def iso_from_model(m, ext: Extension) -> ExtElement:
    return model_for(ext).from_model(m)


__all__ = [
    "Model", "PuiseuxModel", "HalfIntModel", "SkewModel", "model_for", "has_model",
    "iso_to_model", "iso_from_model", "DyadicRatFunc", "SkewPoly",
]
