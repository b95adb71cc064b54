"""The acting monoid S = N^k and its group of quotients Z^k.

Elements are exponent vectors.  Composition is componentwise addition, so
the Ore pair of two elements is read off the componentwise maximum.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional


@dataclass(frozen=True)
class MonoidElement:
    exps: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exps)
        if not exps:
            raise ValueError("monoid element needs at least one exponent")
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in monoid element {exps}")
        object.__setattr__(self, "exps", exps)

    @classmethod
    def zero(cls, k: int = 1) -> "MonoidElement":
        return cls((0,) * k)

    @classmethod
    def unit(cls, i: int, k: int = 1) -> "MonoidElement":
        return cls(tuple(1 if j == i else 0 for j in range(k)))

    @property
    def k(self) -> int:
        return len(self.exps)

    @property
    def total(self) -> int:
        return sum(self.exps)

    def is_zero(self) -> bool:
        return not any(self.exps)

    def __add__(self, other: "MonoidElement") -> "MonoidElement":
        return compose(self, other)

    def __sub__(self, other: "MonoidElement") -> "GroupElement":
        _check_rank(self, other)
        return GroupElement(tuple(a - b for a, b in zip(self.exps, other.exps)))

    def __le__(self, other: "MonoidElement") -> bool:
        # divisibility order, which is only a partial order
        _check_rank(self, other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def __ge__(self, other: "MonoidElement") -> bool:
        return other <= self

    def __iter__(self):
        return iter(self.exps)

    def __getitem__(self, i: int) -> int:
        return self.exps[i]

    def sort_key(self):
        return (self.total, self.exps)

    def __str__(self):
        return ",".join(str(e) for e in self.exps)

    def __repr__(self):
        return f"MonoidElement({self})"


@dataclass(frozen=True)
class GroupElement:
    exps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exps", tuple(int(e) for e in self.exps))

    @classmethod
    def from_monoid(cls, s: MonoidElement) -> "GroupElement":
        return cls(s.exps)

    @property
    def k(self) -> int:
        return len(self.exps)

    def positive_part(self) -> MonoidElement:
        return MonoidElement(tuple(max(e, 0) for e in self.exps))

    def negative_part(self) -> MonoidElement:
        return MonoidElement(tuple(max(-e, 0) for e in self.exps))

    def __neg__(self) -> "GroupElement":
        return GroupElement(tuple(-e for e in self.exps))

    def __add__(self, other) -> "GroupElement":
        other = as_group(other)
        if other.k != self.k:
            raise ValueError("rank mismatch")
        return GroupElement(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __sub__(self, other) -> "GroupElement":
        return self + (-as_group(other))

    def __str__(self):
        return ",".join(str(e) for e in self.exps)

    def __repr__(self):
        return f"GroupElement({self})"


def as_group(g) -> GroupElement:
    if isinstance(g, GroupElement):
        return g
    if isinstance(g, MonoidElement):
        return GroupElement(g.exps)
    if isinstance(g, int):
        return GroupElement((g,))
    return GroupElement(tuple(g))


def as_monoid(s, k: int = 1) -> MonoidElement:
    if isinstance(s, MonoidElement):
        return s
    if isinstance(s, int):
        if k != 1:
            raise ValueError(f"scalar exponent given for rank {k}")
        return MonoidElement((s,))
    return MonoidElement(tuple(s))


def _check_rank(s: MonoidElement, t: MonoidElement) -> None:
    if s.k != t.k:
        raise ValueError(f"rank mismatch: {s!r} vs {t!r}")


def compose(s: MonoidElement, t: MonoidElement) -> MonoidElement:
    _check_rank(s, t)
    return MonoidElement(tuple(a + b for a, b in zip(s.exps, t.exps)))


def join(s: MonoidElement, t: MonoidElement) -> MonoidElement:
    """Componentwise maximum, the least common left multiple."""
    _check_rank(s, t)
    return MonoidElement(tuple(max(a, b) for a, b in zip(s.exps, t.exps)))


def ore_pair(s1: MonoidElement, s2: MonoidElement) -> tuple[MonoidElement, MonoidElement]:
    """Return the minimal (t1, t2) with t1*s1 == t2*s2."""
    w = join(s1, s2)
    return divide_exact(w, s1), divide_exact(w, s2)


def divide_exact(s: MonoidElement, t: MonoidElement) -> Optional[MonoidElement]:
    _check_rank(s, t)
    if not t <= s:
        return None
    return MonoidElement(tuple(a - b for a, b in zip(s.exps, t.exps)))


def box(bound: MonoidElement) -> Iterator[MonoidElement]:
    """All s <= bound, smallest total degree first."""
    pts = [MonoidElement(e) for e in product(*(range(b + 1) for b in bound.exps))]
    pts.sort(key=MonoidElement.sort_key)
    return iter(pts)


def parse_monoid(text: str, k: Optional[int] = None) -> MonoidElement:
    """Parse ``"3"``, ``"s=3"`` or ``"1,2"``."""
    body = text.strip()
    if body.startswith("s="):
        body = body[2:]
    try:
        exps = tuple(int(p) for p in body.split(","))
    except ValueError:
        raise ValueError(f"bad monoid element {text!r}") from None
    s = MonoidElement(exps)
    if k is not None and s.k != k:
        raise ValueError(f"expected {k} exponents, got {s.k} in {text!r}")
    return s
