"""Canned demonstrations on the three explicit model rings.

Each demo is deterministic given its seed and returns a :class:`DemoReport`
holding machine-readable records plus a short human narrative.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import ideals
from .extension import Extension
from .ideals import FinGenLeftIdeal, SearchWindow
from .models.puiseux import DyadicPuiseux
from .models.skew import (DyadicRatFunc, SkewPoly, SkewRing, random_skew, skew_in_R,
                          skew_mul, skew_right_divmod)
from .monoid import MonoidElement
from .proptest import random_ext, random_ideal, sample_member
from .rings import QPolyRing


@dataclass
class DemoReport:
    name: str
    ring: str
    seed: int
    passed: bool = True
    summary: str = ""
    records: list = field(default_factory=list)
    narrative: list = field(default_factory=list)
    elapsed: float = 0.0

    def say(self, line: str) -> None:
        self.narrative.append(line)

    def to_json(self) -> dict:
        from .scenario import environment_stamp
        return {"demo": self.name, "ring": self.ring, "seed": self.seed, "passed": self.passed,
                "summary": self.summary, "environment": environment_stamp(),
                "records": self.records, "elapsed": round(self.elapsed, 6)}


DEMOS: dict[str, tuple[str, Callable]] = {}


def demo(name: str, summary: str):
    def deco(fn):
        DEMOS[name] = (summary, fn)
        return fn
    return deco


def _puiseux_ext() -> Extension:
    return Extension(QPolyRing([(1, 2)]))


@demo("non-noetherian", "strict chain A*x < A*x/2 < A*x/4 < ... over Z[x] with x -> 2x")
def non_noetherian(seed: int = 0, n: int = 10) -> DemoReport:
    chain = ideals.ascending_chain_demo(n)
    rep = DemoReport("non-noetherian", chain.ring, seed, chain.certified and len(chain.steps) == n)
    rep.records = chain.steps
    for st in chain.steps:
        rep.say(f"I_{st['m']} < I_{st['m'] + 1}: {st['old']} in A*{st['new']} ({st['inclusion']}), "
                f"converse {st['strict']} ({st['strict_certificate']})")
    rep.summary = f"{sum(1 for st in chain.steps if st['strict'] == 'NonMember')} strict inclusions certified"
    return rep


@demo("bezout-gcd", "random two-generator left ideals of A(Q[x]; x -> x^2) are principal")
def bezout_gcd(seed: int = 0, pairs: int = 100, window: int = 6) -> DemoReport:
    ext = _puiseux_ext()
    rng = random.Random(seed)
    w = SearchWindow(MonoidElement((window,)))
    rep = DemoReport("bezout-gcd", ext.ring.descriptor(), seed)
    ok = 0
    for i in range(pairs):
        a = random_ext(ext, rng, 3, 3, 5)
        while a.is_zero():
            a = random_ext(ext, rng, 3, 3, 5)
        b = random_ext(ext, rng, 3, 3, 5)
        v = ideals.principal_test(FinGenLeftIdeal(ext, "A", [a, b]), w)
        ok += v.is_member
        rep.records.append({"a": str(a), "b": str(b), "verdict": v.outcome.value,
                            "generator": str(v.witness) if v.is_member else None})
    rep.passed = ok == pairs
    rep.summary = f"{ok}/{pairs} ideals A*a + A*b certified principal"
    rep.say(rep.summary)
    return rep


@demo("skew-ore", "t*x^(1/2) = x*t in D[t; sigma], and left division stays in R")
def skew_ore(seed: int = 0, pairs: int = 100) -> DemoReport:
    ring = SkewRing()
    rng = random.Random(seed)
    rep = DemoReport("skew-ore", ring.descriptor(), seed)
    root = SkewPoly.const(DyadicRatFunc(DyadicPuiseux({Fraction(1, 2): 1})))
    x = SkewPoly.const(DyadicRatFunc(DyadicPuiseux.x()))
    t = SkewPoly.t()
    lhs, rhs = skew_mul(t, root), skew_mul(x, t)
    commutes = lhs == rhs
    outside = not skew_in_R(root)
    rep.say(f"t*x^(1/2) evaluates to {lhs}, x*t to {rhs}: {'equal' if commutes else 'DIFFERENT'}")
    rep.say(f"x^(1/2) in R: {skew_in_R(root)}")
    rep.records.append({"check": "commutation", "lhs": str(lhs), "rhs": str(rhs), "passed": commutes})
    rep.records.append({"check": "root-outside-R", "passed": outside})

    good = in_r = both = 0
    for i in range(pairs):
        c = ring.random_element(rng)
        while not c:
            c = ring.random_element(rng)
        # half the left factors are drawn from R, half from all of A
        a = ring.random_element(rng) if i % 2 == 0 else random_skew(rng)
        p = skew_mul(a, c)
        q, rem = skew_right_divmod(p, c)
        holds = (not skew_in_R(p) or skew_in_R(a)) and not rem and q == a
        in_r += skew_in_R(p)
        both += skew_in_R(p) and skew_in_R(a)
        good += holds
        rep.records.append({"check": "left-division", "a": str(a), "c": str(c),
                            "ac_in_R": skew_in_R(p), "a_in_R": skew_in_R(a), "passed": holds})
    rep.say(f"{in_r} of {pairs} products a*c landed in R, and a was in R for {both} of them")
    rep.say(f"{good}/{pairs} pairs passed, each a recovered from a*c by right division")
    rep.passed = commutes and outside and good == pairs
    rep.summary = f"commutation {commutes}, x^(1/2) outside R {outside}, left division {good}/{pairs}"
    return rep


@demo("correspondence", "membership in I agrees with membership in Delta(Gamma(I))")
def correspondence(seed: int = 0, n_ideals: int = 20, samples: int = 10, window: int = 6) -> DemoReport:
    ext = _puiseux_ext()
    rng = random.Random(seed)
    w = SearchWindow(MonoidElement((window,)))
    rep = DemoReport("correspondence", ext.ring.descriptor(), seed)
    agree = decisive = total = admissible = 0
    for i in range(n_ideals):
        I = random_ideal(ext, rng, 3, 2, 2, 4)
        for _ in range(samples):
            a = sample_member(ext, I, rng) if rng.random() < 0.5 else random_ext(ext, rng, 2, 2, 3)
            v1 = ideals.ext_ideal_member(a, I, w)
            v2 = ideals.delta_gamma_member(a, I, w)
            total += 1
            if v1.decisive and v2.decisive:
                decisive += 1
                agree += v1.outcome == v2.outcome
        adm = ideals.admissible_check(I, w, 5, seed + i)
        admissible += adm.is_member
        rep.records.append({"ideal": str(I), "admissible": adm.outcome.value})
    rep.passed = agree == decisive and decisive >= 0.95 * total and admissible == n_ideals
    rep.summary = (f"{agree}/{decisive} decisive pairs agree ({decisive}/{total} decisive), "
                   f"{admissible}/{n_ideals} families admissible")
    rep.say(rep.summary)
    return rep


def run_demo(name: str, seed: int = 0) -> DemoReport:
    if name not in DEMOS:
        raise KeyError(f"unknown demo {name!r}; try one of {', '.join(DEMOS)}")
    start = time.perf_counter()
    rep = DEMOS[name][1](seed)
    rep.elapsed = time.perf_counter() - start
    return rep
