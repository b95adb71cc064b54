"""Text syntax for ring elements, extension elements, model elements and ideals.

One recursive-descent parser serves every syntax; what differs is the
algebra the parsed atoms are built in.  Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' exponent)?
    atom   := NUMBER | NAME | '(' expr ')' | 'inv' '(' monoid ')' '[' expr ']'
    exponent := INT | '(' ['-'] INT ['/' INT] ')'
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Optional

from .monoid import MonoidElement, parse_monoid


class ParseError(ValueError):
    def __init__(self, text: str, pos: int, message: str):
        self.text, self.pos, self.message = text, pos, message
        super().__init__(f"{message} at position {pos}\n  {text}\n  {' ' * pos}^")


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        if m.group(1) is not None:
            out.append(("num", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            out.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, algebra):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.algebra = algebra

    # -- token helpers -------------------------------------------------------
    @property
    def tok(self):
        return self.toks[self.i]

    def error(self, message: str, pos: Optional[int] = None):
        raise ParseError(self.text, self.tok[2] if pos is None else pos, message)

    def accept(self, op: str) -> bool:
        if self.tok[0] == "op" and self.tok[1] == op:
            self.i += 1
            return True
        return False

    def expect(self, op: str):
        if not self.accept(op):
            found = self.tok[1] or "end of input"
            self.error(f"expected {op!r}, found {found!r}")

    def parse_all(self):
        value = self.expr(self.algebra)
        if self.tok[0] != "end":
            self.error(f"unexpected {self.tok[1]!r}")
        return value

    # -- grammar -------------------------------------------------------------
    def expr(self, alg):
        value = self.term(alg)
        while True:
            if self.accept("+"):
                value = alg.add(value, self.term(alg))
            elif self.accept("-"):
                value = alg.sub(value, self.term(alg))
            else:
                return value

    def term(self, alg):
        value = self.unary(alg)
        while True:
            if self.accept("*"):
                value = alg.mul(value, self.unary(alg))
            elif self.tok[0] == "op" and self.tok[1] == "/":
                pos = self.tok[2]
                self.i += 1
                divisor = self.unary(alg)
                try:
                    value = alg.div(value, divisor)
                except (ValueError, ZeroDivisionError) as exc:
                    self.error(str(exc), pos)
            else:
                return value

    def unary(self, alg):
        if self.accept("-"):
            return alg.neg(self.unary(alg))
        if self.accept("+"):
            return self.unary(alg)
        return self.power(alg)

    def power(self, alg):
        start = self.tok
        base, name = self.atom(alg)
        if not self.accept("^"):
            return base
        pos = self.tok[2]
        e = self.exponent()
        if name is not None and e.denominator != 1:
            try:
                return alg.var_power(name, e)
            except ValueError as exc:
                self.error(str(exc), pos)
        if e.denominator != 1 or e < 0:
            self.error(f"exponent {e} not allowed on {start[1] or 'this term'!r}", pos)
        if name is not None:
            try:
                return alg.var_power(name, e)
            except ValueError:
                pass
        return alg.pow(base, int(e))

    def exponent(self) -> Fraction:
        if self.tok[0] == "num":
            self.i += 1
            return Fraction(int(self.toks[self.i - 1][1]))
        self.expect("(")
        sign = -1 if self.accept("-") else 1
        num = self.integer()
        den = self.integer() if self.accept("/") else 1
        self.expect(")")
        if den == 0:
            self.error("zero denominator in exponent")
        return sign * Fraction(num, den)

    def integer(self) -> int:
        if self.tok[0] != "num":
            self.error("expected an integer")
        self.i += 1
        return int(self.toks[self.i - 1][1])

    def atom(self, alg):
        kind, val, pos = self.tok
        if kind == "num":
            self.i += 1
            return alg.const(Fraction(int(val))), None
        if kind == "name" and val == "inv":
            self.i += 1
            return self.inverse(alg, pos), None
        if kind == "name":
            self.i += 1
            try:
                return alg.var(val), val
            except ValueError as exc:
                self.error(str(exc), pos)
        if self.accept("("):
            value = self.expr(alg)
            self.expect(")")
            return value, None
        self.error("unexpected end of input" if kind == "end" else f"unexpected {val!r}")

    def inverse(self, alg, pos):
        if not hasattr(alg, "inv"):
            self.error("inv(...) is only allowed in extension elements", pos)
        self.expect("(")
        start = self.tok[2]
        while not (self.tok[0] == "op" and self.tok[1] == ")") and self.tok[0] != "end":
            self.i += 1
        body = self.text[start:self.tok[2]]
        self.expect(")")
        try:
            s = parse_monoid(body.replace(" ", ""), alg.k)
        except ValueError as exc:
            self.error(str(exc), start)
        self.expect("[")
        inner = self.expr(alg.base)
        self.expect("]")
        return alg.inv(s, inner)


# -- algebras ------------------------------------------------------------------

class _Algebra:
    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def pow(self, a, n: int):
        out = self.const(Fraction(1))
        for _ in range(n):
            out = self.mul(out, a)
        return out

    def var_power(self, name, e: Fraction):
        raise ValueError(f"fractional power of {name!r} not allowed here")


class _QPolyAlgebra(_Algebra):
    """Univariate polynomials over Q in x; the ring type decides integrality later."""

    def __init__(self, var: str = "x"):
        from .polys import QPoly
        self.QPoly = QPoly
        self.name = var

    def const(self, c):
        return self.QPoly.const(c)

    def var(self, name):
        if name != self.name:
            raise ValueError(f"unknown variable {name!r}")
        return self.QPoly.x()

    def div(self, a, b):
        if b.degree > 0:
            raise ValueError("can only divide by a nonzero constant")
        if not b:
            raise ZeroDivisionError("division by zero")
        return a * self.QPoly.const(1 / b[0])


class _RingAlgebra(_QPolyAlgebra):
    def __init__(self, ring):
        super().__init__()
        self.ring = ring

    def finish(self, value):
        from .polys import ZPoly
        if self.ring.poly_type is ZPoly:
            if any(c.denominator != 1 for c in value.coeffs):
                raise ValueError(f"{value} has non-integer coefficients")
            return ZPoly(int(c) for c in value.coeffs)
        return value


class _ExtAlgebra(_Algebra):
    """Extension elements; atoms are embedded base elements."""

    def __init__(self, ext, base):
        self.ext = ext
        self.base = base
        self.k = ext.k

    def _embed(self, v):
        return self.ext.embed(self.base.finish(v))

    def const(self, c):
        return self._embed(self.base.const(c))

    def var(self, name):
        return self._embed(self.base.var(name))

    def var_power(self, name, e):
        if e.denominator != 1:
            raise ValueError(f"write fractional powers as inv(s)[...], not {name}^({e})")
        return self._embed(self.base.var_power(name, e))

    def div(self, a, b):
        if not b.in_base():
            raise ValueError("can only divide by an element of R")
        inv = self.base.div(self.base.const(Fraction(1)), _unfinish(b.num))
        return self.ext.mul(a, self._embed(inv))

    def inv(self, s, inner):
        return self.ext.normalize(s, self.base.finish(inner))


def _unfinish(r):
    from .polys import QPoly, ZPoly
    if isinstance(r, ZPoly):
        return r.to_q()
    return r


class _PuiseuxAlgebra(_Algebra):
    def __init__(self):
        from .models.puiseux import DyadicPuiseux
        self.P = DyadicPuiseux

    def const(self, c):
        return self.P.const(c)

    def var(self, name):
        if name != "x":
            raise ValueError(f"unknown variable {name!r}")
        return self.P.x()

    def var_power(self, name, e):
        if name != "x":
            raise ValueError(f"unknown variable {name!r}")
        return self.P.monomial(e)

    def div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero")
        if b.level or any(e != 0 for e in b.terms):
            raise ValueError("can only divide by a nonzero constant")
        return a * self.P.const(1 / b.terms[Fraction(0)])

    def finish(self, v):
        return v


class _SkewAlgebra(_Algebra):
    """Skew polynomials with left coefficients; products keep their order."""

    def __init__(self, base_ring_only: bool = False):
        from .models.puiseux import DyadicPuiseux
        from .models.skew import DyadicRatFunc, SkewPoly
        self.P, self.F, self.S = DyadicPuiseux, DyadicRatFunc, SkewPoly
        self.base_ring_only = base_ring_only

    def const(self, c):
        return self.S.const(c)

    def var(self, name):
        if name == "t":
            return self.S.t()
        if name == "x":
            return self.S.const(self.F(self.P.x()))
        raise ValueError(f"unknown variable {name!r}")

    def var_power(self, name, e):
        if name == "x":
            if e < 0:
                return self.S.const(self.F(self.P.monomial(-e)).inverse())
            return self.S.const(self.F(self.P.monomial(e)))
        if name == "t" and e.denominator == 1 and e >= 0:
            return self.S.t(int(e))
        raise ValueError(f"exponent {e} not allowed on {name!r}")

    def div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero")
        if b.degree > 0:
            raise ValueError("can only divide by an element of D (degree 0 in t)")
        return a * self.S.const(b.coeffs[0].inverse())

    def finish(self, v):
        if self.base_ring_only:
            from .models.skew import skew_in_R
            if not skew_in_R(v):
                raise ValueError(f"{v} has coefficients outside Q(x)")
        return v


# -- entry points --------------------------------------------------------------

def _base_algebra(ring):
    from .models.skew import SkewRing
    if isinstance(ring, SkewRing):
        return _SkewAlgebra(base_ring_only=True)
    return _RingAlgebra(ring)


def parse_ring_element(ring, text: str):
    """Parse a base-ring element, e.g. ``3*x^2 - 1/2*x + 1``."""
    alg = _base_algebra(ring)
    value = _Parser(text, alg).parse_all()
    try:
        return alg.finish(value)
    except ValueError as exc:
        raise ParseError(text, 0, str(exc)) from None


def parse_ext_element(ext, text: str):
    """Parse an extension element, e.g. ``inv(1)[x] * inv(1)[x] + 2``."""
    return _Parser(text, _ExtAlgebra(ext, _base_algebra(ext.ring))).parse_all()


def parse_qpoly(text: str):
    return _Parser(text, _QPolyAlgebra()).parse_all()


def parse_puiseux(text: str):
    """Parse a dyadic Puiseux polynomial, e.g. ``x^(3/4) + 2*x - 1/2``."""
    return _Parser(text, _PuiseuxAlgebra()).parse_all()


def parse_skew(text: str):
    """Parse a skew polynomial over D, e.g. ``x*t^2 + (1/(x+1))*t``."""
    return _Parser(text, _SkewAlgebra()).parse_all()


def parse_window(text: str, k: int = 1) -> MonoidElement:
    return parse_monoid(str(text), k)


_IDEAL_RE = re.compile(r"^\s*ideal\s*\{\s*([AR])\s*\}\s*\[(.*)\]\s*$", re.S)


def split_top_level(body: str, sep: str = ";") -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append(body[start:i])
            start = i + 1
    parts.append(body[start:])
    return [p.strip() for p in parts if p.strip()]


def parse_ideal(ext, text: str):
    """Parse ``ideal{A}[g1; g2]`` or ``ideal{R}[g1; g2]`` into a FinGenLeftIdeal."""
    from .ideals import FinGenLeftIdeal
    m = _IDEAL_RE.match(text)
    if not m:
        raise ParseError(text, 0, "expected ideal{A}[...] or ideal{R}[...]")
    ambient, body = m.group(1), m.group(2)
    offset = m.start(2)
    gens = []
    for part in split_top_level(body):
        try:
            if ambient == "A":
                gens.append(parse_ext_element(ext, part))
            else:
                gens.append(parse_ring_element(ext.ring, part))
        except ParseError as exc:
            where = text.find(part, offset)
            raise ParseError(text, max(where, 0) + exc.pos, exc.message) from None
    return FinGenLeftIdeal(ext, ambient, gens)
