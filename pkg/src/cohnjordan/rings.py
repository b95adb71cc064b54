"""Base rings Q[x] and Z[x] acted on by sigma(x) = c * x^d.

Every composite of such maps is again of that shape, so ``act(s, f)`` is
``f(C * x^D)`` for constants (C, D) depending on s, and preimages reduce
to reading off coefficients at multiples of D.
"""

from __future__ import annotations

import random
import re
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

from .contract import DegreeBoundExceeded, SRing, Verdict
from .monoid import MonoidElement
from .polys import QPoly, ZPoly, _Poly
from . import zgroebner

DEFAULT_DEGREE_CAP = 24


class PolyRing(SRing):
    poly_type: type = _Poly
    coeff_domain = "?"

    def __init__(self, params: Sequence[tuple]):
        params = [self._check_param(c, d) for c, d in params]
        if not params:
            raise ValueError("need at least one generator of the action")
        self.params = tuple(params)
        self.k = len(params)
        self._certify_commuting()
        self._maps: dict[MonoidElement, tuple] = {}

    def _check_param(self, c, d):
        d = int(d)
        if c == 0:
            raise ValueError("sigma(x) = 0*x^d is not injective")
        if d < 1:
            raise ValueError("sigma(x) = c*x^d needs d >= 1 to be injective")
        return c, d

    def _certify_commuting(self):
        for i, (ci, di) in enumerate(self.params):
            for cj, dj in self.params[i + 1:]:
                # sigma_i(sigma_j(x)) = cj * ci^dj * x^(di*dj)
                if cj * ci ** dj != ci * cj ** di:
                    raise ValueError(f"actions {self.params} do not commute")

    # -- ring structure ------------------------------------------------------
    def zero(self):
        return self.poly_type(())

    def one(self):
        return self.poly_type.const(1)

    def x(self):
        return self.poly_type.x()

    def parse(self, text: str):
        from .parsing import parse_ring_element
        return parse_ring_element(self, text)

    def coerce(self, c):
        return self.poly_type.const(c)

    # -- action --------------------------------------------------------------
    def monomial_map(self, s: MonoidElement) -> tuple:
        """(C, D) with act(s, f) == f(C * x^D)."""
        s = self.mono(s)
        hit = self._maps.get(s)
        if hit is not None:
            return hit
        C, D = self.poly_type._coerce(1), 1
        for (c, d), n in zip(self.params, s.exps):
            for _ in range(n):
                # f(C x^D) then sigma: f(C (c x^d)^D) = f(C c^D x^(dD))
                C, D = C * c ** D, D * d
        self._maps[s] = (C, D)
        return C, D

    def act(self, s, r):
        C, D = self.monomial_map(s)
        if C == 1 and D == 1:
            return r
        return r.compose_monomial(C, D)

    def preimage(self, s, r):
        C, D = self.monomial_map(s)
        out = []
        power = self.poly_type._coerce(1)
        for i, a in enumerate(r.coeffs):
            if i % D == 0:
                q = self._divide_coeff(a, power)
                if q is None:
                    return None
                out.append(q)
                power = power * C
            elif a:
                return None
        return self.poly_type(out)

    def _divide_coeff(self, a, b):
        raise NotImplementedError

    # -- certificates and sampling -------------------------------------------
    def evaluation_points(self) -> list:
        pts = []
        for cand in (Fraction(0), Fraction(1), Fraction(-1)):
            if all(c * cand ** d == cand for c, d in self.params):
                pts.append(cand)
        return pts

    def evaluate(self, r, point):
        return r(point)

    def random_element(self, rng: random.Random, degree: int = 3, bound: int = 5):
        deg = rng.randint(0, degree)
        return self.poly_type([rng.randint(-bound, bound) for _ in range(deg + 1)])

    def descriptor(self) -> str:
        return f"{self.prefix}{{" + ";".join(f"c={c},d={d}" for c, d in self.params) + "}"

    def __eq__(self, other):
        return type(self) is type(other) and self.params == other.params

    def __hash__(self):
        return hash((type(self).__name__, self.params))

    @property
    def name(self):
        return self.descriptor()


class QPolyRing(PolyRing):
    """Q[x] with commuting actions x -> c_i x^(d_i).

    For k > 1 the image-intersection property im(phi_i) & im(phi_j) ==
    im(phi_i phi_j) holds exactly when the degrees are pairwise coprime,
    which the constructor checks.
    """

    poly_type = QPoly
    prefix = "QPoly"

    def __init__(self, params):
        super().__init__([(Fraction(c), d) for c, d in params])
        ds = [d for _, d in self.params]
        for i in range(len(ds)):
            for j in range(i + 1, len(ds)):
                if gcd(ds[i], ds[j]) != 1:
                    raise ValueError(
                        "QPoly with several generators needs pairwise coprime degrees")

    def _divide_coeff(self, a, b):
        return a / b

    @property
    def image_is_summand(self) -> bool:
        # Q[x] is free over Q[c x^d] with basis 1, x, ..., x^(d-1)
        return True

    def ideal_membership(self, r, gens):
        # Q[x] is free over Q[x^m]: divisibility and gcds can be taken in y = x^m
        m = _stride([r, *gens])
        g = _gcd_all([_squeeze(h, m) for h in gens])
        if g.divides(_squeeze(r, m)):
            return Verdict.member(MonoidElement.zero(self.k), f"divisible by gcd {_stretch(g, m)}")
        return Verdict.non_member(f"not divisible by gcd {_stretch(g, m)}")

    def ideal_generator(self, gens) -> QPoly:
        m = _stride(gens)
        return _stretch(_gcd_all([_squeeze(h, m) for h in gens]), m)

    def reduce_ideal(self, gens):
        g = self.ideal_generator(gens)
        return [g] if g else []

    def preimage_ideal(self, s, gens):
        """Generators of {f : act(s, f) in (gens)}."""
        s = self.mono(s)
        h = self.ideal_generator(gens)
        if not h:
            return []
        if h.degree == 0:
            return [QPoly.const(1)]
        h0 = self.preimage(s, h)
        if h0 is not None:
            return [h0.monic()]
        C, D = self.monomial_map(s)
        return [minimal_polynomial_mod(QPoly((0,) * D + (C,)), h)]


def _stride(polys) -> int:
    m = 0
    for p in polys:
        for i, c in enumerate(p.coeffs):
            if c and i:
                m = gcd(m, i)
                if m == 1:
                    return 1
    return m or 1


def _squeeze(p: QPoly, m: int) -> QPoly:
    return p if m == 1 else QPoly(p.coeffs[::m])


def _stretch(p: QPoly, m: int) -> QPoly:
    if m == 1 or not p:
        return p
    out = [Fraction(0)] * (m * p.degree + 1)
    out[::m] = p.coeffs
    return QPoly(out)


def _gcd_all(polys) -> QPoly:
    g = QPoly(())
    for h in polys:
        if h:
            g = g.gcd(h) if g else h.monic()
    return g


def minimal_polynomial_mod(y: QPoly, h: QPoly) -> QPoly:
    """Monic generator of the kernel of Q[t] -> Q[x]/(h), t -> y."""
    n = h.degree
    basis: list[tuple[list, list]] = []  # (reduced vector, combination)
    power = QPoly.const(1)
    y = y % h
    for j in range(n + 1):
        vec = [power[i] for i in range(n)]
        comb = [Fraction(0)] * (n + 1)
        comb[j] = Fraction(1)
        for pivot_vec, pivot_comb in basis:
            p = _pivot(pivot_vec)
            c = vec[p]
            if c:
                f = c / pivot_vec[p]
                vec = [a - f * b for a, b in zip(vec, pivot_vec)]
                comb = [a - f * b for a, b in zip(comb, pivot_comb)]
        if not any(vec):
            return QPoly(comb).monic()
        basis.append((vec, comb))
        power = (power * y) % h
    raise AssertionError("unreachable: n+1 vectors in an n-dimensional space")


def _pivot(vec) -> int:
    for i, c in enumerate(vec):
        if c:
            return i
    raise ValueError("zero vector")


class ZPolyRing(PolyRing):
    """Z[x] with x -> c x^d, c a nonzero integer.

    Left-ideal membership goes through strong Groebner bases over Z; the
    preimage of an ideal under the action is an elimination in Z[x, y].
    """

    poly_type = ZPoly
    prefix = "ZPoly"

    def __init__(self, params, degree_cap: int = DEFAULT_DEGREE_CAP):
        params = [(int(c), d) for c, d in params]
        if len(params) != 1:
            raise ValueError("ZPoly supports a single generator of the action only")
        super().__init__(params)
        self.degree_cap = degree_cap

    def _divide_coeff(self, a, b):
        if a % b:
            return None
        return a // b

    @property
    def image_is_summand(self) -> bool:
        # Z[x] is free over Z[c x^d] only when c is a unit
        return all(c in (1, -1) for c, _ in self.params)

    def scalar_member(self, v, vals) -> bool:
        g = 0
        for u in vals:
            g = gcd(g, int(u))
        return v % g == 0 if g else v == 0

    def groebner(self, gens) -> tuple:
        return _zpoly_groebner(tuple(g for g in gens if g))

    def ideal_membership(self, r, gens):
        basis = self.groebner(gens)
        if zgroebner.is_member(_to_dict(r), list(basis)):
            return Verdict.member(MonoidElement.zero(self.k), "top-reduces to 0 by a strong Groebner basis")
        return Verdict.non_member("nonzero strong normal form")

    def reduce_ideal(self, gens):
        return [_from_dict(g) for g in self.groebner(gens)]

    def preimage_ideal(self, s, gens):
        """Generators of {f : act(s, f) in (gens)} via elimination.

        Raises DegreeBoundExceeded when intermediate degrees pass
        ``max(degree_cap, input degree)``.
        """
        s = self.mono(s)
        gens = [g for g in gens if g]
        if not gens:
            return []
        if s.is_zero():
            return self.reduce_ideal(gens)
        C, D = self.monomial_map(s)
        # variables (x, y), lex with x > y; y stands for C * x^D
        polys = [{(i, 0): a for i, a in enumerate(g.coeffs) if a} for g in gens]
        polys.append({(0, 1): 1, (D, 0): -C})
        cap = max(self.degree_cap, D, max(g.degree for g in gens))
        basis = zgroebner.strong_groebner(polys, degree_cap=cap)
        out = []
        for b in basis:
            if all(m[0] == 0 for m in b):
                coeffs = [0] * (max(m[1] for m in b) + 1)
                for m, a in b.items():
                    coeffs[m[1]] = a
                out.append(ZPoly(coeffs))
        return self.reduce_ideal(out)


@lru_cache(maxsize=4096)
def _zpoly_groebner(gens: tuple) -> tuple:
    return tuple(zgroebner.strong_groebner([_to_dict(g) for g in gens]))


def _to_dict(p: ZPoly) -> dict:
    return {(i,): a for i, a in enumerate(p.coeffs) if a}


def _from_dict(p: dict) -> ZPoly:
    if not p:
        return ZPoly(())
    coeffs = [0] * (max(m[0] for m in p) + 1)
    for m, a in p.items():
        coeffs[m[0]] = a
    return ZPoly(coeffs)


_RING_RE = re.compile(r"^\s*(\w+)\s*\{(.*)\}\s*$")


def parse_ring(text: str) -> SRing:
    """Parse ``QPoly{c=1,d=2}``, ``ZPoly{2,1}``, ``QPoly{d=2;d=3}`` or ``Skew{}``."""
    m = _RING_RE.match(text)
    if not m:
        raise ValueError(f"bad ring descriptor {text!r}")
    kind, body = m.group(1), m.group(2).strip()
    if kind == "Skew":
        from .models.skew import SkewRing
        return SkewRing()
    if kind not in ("QPoly", "ZPoly"):
        raise ValueError(f"unknown ring {kind!r}")
    params = []
    for chunk in (body.split(";") if body else [""]):
        c, d = "1", None
        positional = []
        for item in filter(None, (p.strip() for p in chunk.split(","))):
            if "=" in item:
                key, val = (p.strip() for p in item.split("=", 1))
                if key == "c":
                    c = val
                elif key == "d":
                    d = val
                else:
                    raise ValueError(f"unknown ring parameter {key!r}")
            else:
                positional.append(item)
        if positional:
            if len(positional) != 2:
                raise ValueError(f"expected 'c,d' in {text!r}")
            c, d = positional
        if d is None:
            raise ValueError(f"missing degree d in {text!r}")
        params.append((Fraction(c), int(d)))
    if kind == "QPoly":
        return QPolyRing(params)
    for c, _ in params:
        if c.denominator != 1:
            raise ValueError("ZPoly needs an integer constant c")
    return ZPolyRing([(int(c), d) for c, d in params])
