"""What a computable base ring with an S-action must provide.

Base rings are descriptor objects; their elements are plain immutable
values with canonical equality.  Membership queries at the base level are
always decisive; the three-valued :class:`Verdict` only becomes genuinely
three-valued once searches over S are involved.
"""

from __future__ import annotations

import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Any, Optional, Sequence

from .monoid import MonoidElement, as_monoid


class DegreeBoundExceeded(RuntimeError):
    """A bounded Groebner computation hit its configured degree cap."""


class NoModelRegistered(LookupError):
    pass


class Outcome(str, Enum):
    MEMBER = "Member"
    NONMEMBER = "NonMember"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Verdict:
    """Result of a (possibly bounded) membership-style query.

    ``Member`` and ``NonMember`` are final.  ``Unknown`` records the window
    that was exhausted and may be refined by searching further.
    """

    outcome: Outcome
    witness: Any = None
    reason: str = ""
    window: Optional[MonoidElement] = None

    @classmethod
    def member(cls, witness=None, reason: str = "") -> "Verdict":
        return cls(Outcome.MEMBER, witness, reason)

    @classmethod
    def non_member(cls, certificate: str, witness=None) -> "Verdict":
        return cls(Outcome.NONMEMBER, witness, certificate)

    @classmethod
    def unknown(cls, window: Optional[MonoidElement], reason: str = "") -> "Verdict":
        return cls(Outcome.UNKNOWN, None, reason, window)

    @property
    def is_member(self) -> bool:
        return self.outcome is Outcome.MEMBER

    @property
    def is_non_member(self) -> bool:
        return self.outcome is Outcome.NONMEMBER

    @property
    def decisive(self) -> bool:
        return self.outcome is not Outcome.UNKNOWN

    def as_bool(self) -> Optional[bool]:
        if self.outcome is Outcome.UNKNOWN:
            return None
        return self.outcome is Outcome.MEMBER

    def matches(self, expected: str) -> bool:
        expected = expected.strip()
        if expected.lower() == "decisive":
            return self.decisive
        return self.outcome.value.lower() == expected.lower()

    def __str__(self):
        return self.outcome.value


class SRing(ABC):
    """A ring R together with an action of N^k by injective unital endomorphisms."""

    k: int = 1
    name: str = "R"

    # -- ring structure ------------------------------------------------------
    @abstractmethod
    def zero(self): ...

    @abstractmethod
    def one(self): ...

    @abstractmethod
    def parse(self, text: str): ...

    def format(self, r) -> str:
        return str(r)

    # -- action --------------------------------------------------------------
    @abstractmethod
    def act(self, s: MonoidElement, r):
        """Apply phi_s to ``r``."""

    @abstractmethod
    def preimage(self, s: MonoidElement, r):
        """Return the unique r' with act(s, r') == r, or None."""

    def preimage_gen(self, i: int, r):
        return self.preimage(MonoidElement.unit(i, self.k), r)

    # -- ideals --------------------------------------------------------------
    @abstractmethod
    def ideal_membership(self, r, gens: Sequence) -> Verdict:
        """Decide whether ``r`` lies in the left ideal generated by ``gens``."""

    def is_regular(self, r) -> bool:
        # every shipped base ring is a domain
        return not self.is_zero(r)

    def is_zero(self, r) -> bool:
        return r == self.zero()

    def reduce_ideal(self, gens: Sequence) -> list:
        """A tidier generating set for the same left ideal."""
        return [g for g in gens if not self.is_zero(g)]

    def preimage_ideal(self, s: MonoidElement, gens: Sequence) -> list:
        """Generators of {f : act(s, f) in R*gens}.

        The generic version only covers gens inside the image of phi_s on a
        ring whose images are direct summands, where the answer is R*preimages.
        """
        pre = [self.preimage(s, g) for g in gens]
        if self.image_is_summand and all(p is not None for p in pre):
            return self.reduce_ideal(pre)
        raise NotImplementedError(f"{self.name} cannot compute this preimage ideal")

    @property
    def image_is_summand(self) -> bool:
        """True when phi_s(R) is a direct summand of R as a right phi_s(R)-module.

        Then R*phi_s(J) & phi_s(R) == phi_s(J) for every left ideal J, so
        membership tests do not change along the action and a failure at
        s = 0 is final.
        """
        return False

    def scalar_member(self, v, vals: Sequence) -> bool:
        """Is ``v`` in the ideal of the evaluation codomain generated by ``vals``?"""
        return v == 0 or any(u != 0 for u in vals)

    def evaluation_points(self) -> list:
        """Points fixed by every generator of the action.

        Evaluation at such a point is a ring map that factors through A, so
        it yields monotone non-membership certificates.
        """
        return []

    def evaluate(self, r, point):
        raise NotImplementedError

    def random_element(self, rng: random.Random, degree: int = 3, bound: int = 5):
        raise NotImplementedError

    def mono(self, s) -> MonoidElement:
        s = as_monoid(s, self.k)
        if s.k != self.k:
            raise ValueError(f"{self.name} has rank {self.k}, got {s!r}")
        return s

    def descriptor(self) -> str:
        return self.name

    def __repr__(self):
        return self.descriptor()
