"""Elements of the Cohn-Jordan extension A(R; S) as normalized fractions.

An element is a pair (s, r) standing for phi_s^{-1}(r).  Two elements are
combined by lifting both to the join of their denominators, where the
numerators live in R; the result is normalized by dividing out the action
generator by generator for as long as preimages exist.
"""

from __future__ import annotations

from typing import Any, Iterable, Sequence

from .contract import SRing
from .monoid import MonoidElement, as_group, divide_exact, join


class ExtElement:
    __slots__ = ("ext", "denom", "num", "_hash")

    def __init__(self, ext: "Extension", denom: MonoidElement, num: Any):
        # use Extension.normalize; this constructor trusts its input
        self.ext = ext
        self.denom = denom
        self.num = num
        self._hash = None

    def _coerce(self, other) -> "ExtElement":
        if isinstance(other, ExtElement):
            if other.ext.ring != self.ext.ring:
                raise ValueError("elements of different extensions")
            return other
        return self.ext.embed(self.ext.ring.parse(str(other)) if isinstance(other, str)
                              else self.ext.coerce_base(other))

    def __add__(self, other):
        return self.ext.add(self, self._coerce(other))

    def __radd__(self, other):
        return self.ext.add(self._coerce(other), self)

    def __sub__(self, other):
        return self.ext.sub(self, self._coerce(other))

    def __rsub__(self, other):
        return self.ext.sub(self._coerce(other), self)

    def __neg__(self):
        return self.ext.neg(self)

    def __mul__(self, other):
        return self.ext.mul(self, self._coerce(other))

    def __rmul__(self, other):
        return self.ext.mul(self._coerce(other), self)

    def __eq__(self, other):
        if not isinstance(other, ExtElement):
            return NotImplemented
        # normal forms are canonical
        return (self.ext.ring == other.ext.ring and self.denom == other.denom
                and self.num == other.num)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.denom, self.num))
        return self._hash

    def is_zero(self) -> bool:
        return self.ext.ring.is_zero(self.num)

    def in_base(self) -> bool:
        return self.denom.is_zero()

    def __str__(self):
        return self.ext.format(self)

    def __repr__(self):
        return f"ExtElement({self})"


class Extension:
    """The ring A(R; S) for a base ring R with an N^k action."""

    def __init__(self, ring: SRing):
        self.ring = ring
        self.k = ring.k

    def __eq__(self, other):
        return isinstance(other, Extension) and other.ring == self.ring

    def __hash__(self):
        return hash(("Extension", self.ring))

    def __repr__(self):
        return f"Extension({self.ring.descriptor()})"

    # -- construction --------------------------------------------------------
    def normalize(self, s, r) -> ExtElement:
        ring = self.ring
        s = ring.mono(s)
        if ring.is_zero(r):
            return ExtElement(self, MonoidElement.zero(self.k), r)
        exps = list(s.exps)
        progress = True
        while progress:
            progress = False
            for i in range(self.k):
                while exps[i] > 0:
                    pre = ring.preimage_gen(i, r)
                    if pre is None:
                        break
                    r = pre
                    exps[i] -= 1
                    progress = True
        return ExtElement(self, MonoidElement(tuple(exps)), r)

    element = normalize

    def embed(self, r) -> ExtElement:
        return ExtElement(self, MonoidElement.zero(self.k), r)

    def coerce_base(self, value):
        if hasattr(self.ring, "coerce"):
            return self.ring.coerce(value)
        raise TypeError(f"cannot coerce {value!r} into {self.ring}")

    def zero(self) -> ExtElement:
        return self.embed(self.ring.zero())

    def one(self) -> ExtElement:
        return self.embed(self.ring.one())

    # -- arithmetic ----------------------------------------------------------
    def lift(self, elems: Sequence[ExtElement], at: MonoidElement | None = None):
        """Common denominator t and numerators act(t - denom, num) in R."""
        t = MonoidElement.zero(self.k) if at is None else at
        for a in elems:
            t = join(t, a.denom)
        nums = []
        for a in elems:
            u = divide_exact(t, a.denom)
            if u is None:
                raise ValueError(f"lift target {t} below denominator {a.denom}")
            nums.append(self.ring.act(u, a.num))
        return t, nums

    def add(self, a: ExtElement, b: ExtElement) -> ExtElement:
        t, (x, y) = self.lift([a, b])
        return self.normalize(t, x + y)

    def sub(self, a: ExtElement, b: ExtElement) -> ExtElement:
        t, (x, y) = self.lift([a, b])
        return self.normalize(t, x - y)

    def neg(self, a: ExtElement) -> ExtElement:
        return ExtElement(self, a.denom, -a.num)

    def mul(self, a: ExtElement, b: ExtElement) -> ExtElement:
        t, (x, y) = self.lift([a, b])
        return self.normalize(t, x * y)

    def eq(self, a: ExtElement, b: ExtElement) -> bool:
        """Equality decided on lifted numerators, independent of normal forms."""
        _, (x, y) = self.lift([a, b])
        return x == y

    def act(self, g, a: ExtElement) -> ExtElement:
        """phi_g for g in the group Z^k; an automorphism of A."""
        g = as_group(g)
        if g.k != self.k:
            raise ValueError("rank mismatch")
        pos, neg = g.positive_part(), g.negative_part()
        return self.normalize(a.denom + neg, self.ring.act(pos, a.num))

    def power(self, a: ExtElement, n: int) -> ExtElement:
        out = self.one()
        for _ in range(n):
            out = self.mul(out, a)
        return out

    def sum(self, elems: Iterable[ExtElement]) -> ExtElement:
        out = self.zero()
        for a in elems:
            out = self.add(out, a)
        return out

    # -- text ----------------------------------------------------------------
    def parse(self, text: str) -> ExtElement:
        from .parsing import parse_ext_element
        return parse_ext_element(self, text)

    def format(self, a: ExtElement) -> str:
        return f"inv({a.denom})[{self.ring.format(a.num)}]"

