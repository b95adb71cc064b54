"""Dense univariate polynomials with exact coefficients.

``QPoly`` has ``Fraction`` coefficients, ``ZPoly`` has ``int`` ones.  Both
are immutable, trimmed (no trailing zeros) and hashable.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def _trim(coeffs: list) -> tuple:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def format_coeff_poly(coeffs, var: str = "x") -> str:
    """Render ``sum coeffs[i] * var^i`` highest degree first."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        neg = c < 0
        a = -c if neg else c
        if i == 0:
            body = str(a)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if a == 1 else f"{a}*{mono}"
        terms.append((neg, body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] else "") + terms[0][1]
    for neg, body in terms[1:]:
        out += (" - " if neg else " + ") + body
    return out


class _Poly:
    __slots__ = ("coeffs", "_hash")

    @staticmethod
    def _coerce(c):
        raise NotImplementedError

    def __init__(self, coeffs=()):
        self.coeffs = _trim([self._coerce(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple):
        # trusted constructor, coefficients already coerced and trimmed
        p = cls.__new__(cls)
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, c, n: int):
        return cls([0] * n + [c])

    @classmethod
    def x(cls):
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self._coerce(0)

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self._coerce(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def support(self) -> list[int]:
        return [i for i, c in enumerate(self.coeffs) if c]

    def _lift(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, (int, Rational)):
            return type(self).const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return type(self)._raw(_trim(out))

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, _Poly):
            c = self._coerce(other)
            if c == 0:
                return type(self)._raw(())
            return type(self)._raw(tuple(a * c for a in self.coeffs))
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return type(self)._raw(())
        out = [self._coerce(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        bs = [(j, b) for j, b in enumerate(other.coeffs) if b]
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in bs:
                out[i + j] += a * b
        return type(self)._raw(_trim(out))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = type(self).const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, _Poly):
            return type(self) is type(other) and self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.coeffs == _trim([self._coerce(other)])
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, self.coeffs))
        return self._hash

    def __call__(self, point):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def compose_monomial(self, c, d: int):
        """Return f(c * x^d)."""
        if not self.coeffs:
            return self
        out = [self._coerce(0)] * (d * (len(self.coeffs) - 1) + 1)
        power = self._coerce(1)
        for i, a in enumerate(self.coeffs):
            if a:
                out[d * i] = a * power
            power = power * c
        return type(self)._raw(tuple(out))

    def derivative(self):
        return type(self)._raw(_trim([i * c for i, c in enumerate(self.coeffs)][1:]))

    def __str__(self):
        return format_coeff_poly(self.coeffs)

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class QPoly(_Poly):
    __slots__ = ()

    @staticmethod
    def _coerce(c):
        return c if type(c) is Fraction else Fraction(c)

    def divmod(self, other: "QPoly") -> tuple["QPoly", "QPoly"]:
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = other.degree
        lead_inv = 1 / other.lc
        q = [Fraction(0)] * max(len(rem) - dd, 0)
        divisor = [(j, b) for j, b in enumerate(other.coeffs[:-1]) if b]
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if not c:
                continue
            f = c * lead_inv
            q[i - dd] = f
            rem[i] = Fraction(0)
            base = i - dd
            for j, b in divisor:
                rem[base + j] -= f * b
        return QPoly._raw(_trim(q)), QPoly._raw(_trim(rem[:dd] if dd > 0 else []))

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def divides(self, other: "QPoly") -> bool:
        if not self.coeffs:
            return not other.coeffs
        return not (other % self).coeffs

    def monic(self) -> "QPoly":
        if not self.coeffs or self.lc == 1:
            return self
        return self * (1 / self.lc)

    def gcd(self, other: "QPoly") -> "QPoly":
        a, b = self, other
        while b.coeffs:
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other: "QPoly") -> tuple["QPoly", "QPoly", "QPoly"]:
        """Return (g, u, v) with u*self + v*other == g, g monic."""
        r0, r1 = self, other
        s0, s1 = QPoly.const(1), QPoly(())
        t0, t1 = QPoly(()), QPoly.const(1)
        while r1.coeffs:
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if not r0.coeffs:
            return r0, s0, t0
        inv = 1 / r0.lc
        return r0 * inv, s0 * inv, t0 * inv


class ZPoly(_Poly):
    __slots__ = ()

    @staticmethod
    def _coerce(c):
        if type(c) is int:
            return c
        if isinstance(c, Rational):
            if c.denominator != 1:
                raise ValueError(f"non-integral coefficient {c} in ZPoly")
            return int(c.numerator)
        raise TypeError(f"bad ZPoly coefficient {c!r}")

    def to_q(self) -> QPoly:
        return QPoly._raw(tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def from_q(cls, p: QPoly) -> "ZPoly":
        return cls(p.coeffs)
