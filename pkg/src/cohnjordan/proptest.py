"""Seeded randomized property suites with a shrinker.

Each property draws a case (a dict of values) from a seeded generator and
checks it.  A failing case is shrunk greedily: first polynomial degrees,
then coefficient magnitudes, then the search window, keeping only steps
that still fail.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Optional

from . import ideals
from .contract import DegreeBoundExceeded, SRing
from .extension import ExtElement, Extension
from .ideals import FinGenLeftIdeal, SearchWindow
from .models import registry
from .models.halfint import halfint_membership
from .models.puiseux import DyadicPuiseux, puiseux_divides, puiseux_gcd, puiseux_xgcd
from .models.skew import (DyadicRatFunc, SkewPoly, random_dyadic_ratfunc, random_skew,
                          skew_in_R, skew_mul)
from .monoid import MonoidElement, compose, divide_exact, join, ore_pair
from .polys import QPoly, ZPoly
from .rings import QPolyRing, ZPolyRing, parse_ring

SUITES = ("monoid", "ring", "extension", "ideals", "models")


# -- generators ----------------------------------------------------------------------

def random_monoid(rng: random.Random, k: int = 1, bound: int = 4) -> MonoidElement:
    return MonoidElement(tuple(rng.randint(0, bound) for _ in range(k)))


def random_ext(ext: Extension, rng: random.Random, max_denom: int = 2, degree: int = 3,
               bound: int = 5) -> ExtElement:
    s = random_monoid(rng, ext.k, max_denom)
    return ext.normalize(s, ext.ring.random_element(rng, degree, bound))


def random_ideal(ext: Extension, rng: random.Random, max_gens: int = 3, max_denom: int = 2,
                 degree: int = 2, bound: int = 4) -> FinGenLeftIdeal:
    gens = []
    while not gens:
        gens = [random_ext(ext, rng, max_denom, degree, bound)
                for _ in range(rng.randint(1, max_gens))]
        gens = [g for g in gens if not g.is_zero()]
    return FinGenLeftIdeal(ext, "A", gens)


def random_r_ideal(ext: Extension, rng: random.Random, max_gens: int = 3, degree: int = 3,
                   bound: int = 4) -> FinGenLeftIdeal:
    ring = ext.ring
    gens = []
    while not gens:
        gens = [g for g in (ring.random_element(rng, degree, bound)
                            for _ in range(rng.randint(1, max_gens))) if not ring.is_zero(g)]
    return FinGenLeftIdeal(ext, "R", gens)


def random_puiseux(rng: random.Random, terms: int = 3, max_level: int = 2, bound: int = 4) -> DyadicPuiseux:
    level = rng.randint(0, max_level)
    return DyadicPuiseux({Fraction(rng.randint(0, 3 * 2 ** level), 2 ** level): rng.randint(-bound, bound)
                          for _ in range(rng.randint(1, terms))})


def sample_member(ext: Extension, I: FinGenLeftIdeal, rng: random.Random) -> ExtElement:
    """A random A-combination of the generators of I (a member by construction)."""
    out = ext.zero()
    for g in I.promote().gens:
        out = out + random_ext(ext, rng, 2, 2, 3) * g
    return out


# -- shrinking -----------------------------------------------------------------------

def _shrink_poly(p) -> Iterator:
    if isinstance(p, (QPoly, ZPoly)) and p.coeffs:
        yield type(p)(p.coeffs[:-1])


def _shrink_coeffs(p) -> Iterator:
    if isinstance(p, ZPoly):
        if any(abs(c) > 1 for c in p.coeffs):
            yield ZPoly(int(c / 2) if abs(c) > 1 else c for c in p.coeffs)
    elif isinstance(p, QPoly):
        if any(abs(c.numerator) > 1 for c in p.coeffs):
            yield QPoly(Fraction(int(c.numerator / 2), c.denominator) if abs(c.numerator) > 1 else c
                        for c in p.coeffs)


def _shrink_value(v, how) -> Iterator:
    if isinstance(v, ExtElement):
        for num in how(v.num):
            yield v.ext.normalize(v.denom, num)
    elif isinstance(v, FinGenLeftIdeal):
        gens = list(v.gens)
        if how is _shrink_poly and len(gens) > 1:
            for i in range(len(gens)):
                yield FinGenLeftIdeal(v.ext, v.ambient, gens[:i] + gens[i + 1:])
        for i, g in enumerate(gens):
            for h in _shrink_value(g, how):
                yield FinGenLeftIdeal(v.ext, v.ambient, gens[:i] + [h] + gens[i + 1:])
    elif isinstance(v, list):
        for i, g in enumerate(v):
            for h in _shrink_value(g, how):
                yield v[:i] + [h] + v[i + 1:]
    else:
        yield from how(v)


def shrink_candidates(case: dict) -> Iterator[dict]:
    for how in (_shrink_poly, _shrink_coeffs):
        for key, val in case.items():
            for smaller in _shrink_value(val, how):
                yield {**case, key: smaller}
    w = case.get("window")
    if isinstance(w, int) and w > 0:
        yield {**case, "window": w - 1}


def shrink(case: dict, fails: Callable[[dict], bool], max_steps: int = 500) -> dict:
    """Greedy shrink; every accepted step still fails."""
    steps = 0
    improved = True
    while improved and steps < max_steps:
        improved = False
        for cand in shrink_candidates(case):
            steps += 1
            if fails(cand):
                case = cand
                improved = True
                break
            if steps >= max_steps:
                break
    return case


# -- properties ----------------------------------------------------------------------

@dataclass
class Property:
    suite: str
    name: str
    gen: Callable  # (rng, ctx) -> case dict
    check: Callable  # (case, ctx) -> bool
    applies: Callable = lambda ctx: True


@dataclass
class Context:
    ring: SRing
    ext: Extension
    window: int = 4
    margin: int = 3

    @property
    def k(self) -> int:
        return self.ring.k

    def win(self, case) -> SearchWindow:
        return SearchWindow(MonoidElement((case.get("window", self.window),) * self.k), self.margin)


PROPERTIES: list[Property] = []


def prop(suite, name, applies=None):
    def deco(fn):
        gen, check = fn()
        PROPERTIES.append(Property(suite, name, gen, check, applies or (lambda ctx: True)))
        return fn
    return deco


def _poly_ring(ctx):
    return isinstance(ctx.ring, (QPolyRing, ZPolyRing))


def _commutative(ctx):
    return _poly_ring(ctx)


# monoid

@prop("monoid", "compose-commutative")
def _():
    return (lambda rng, ctx: {"s": random_monoid(rng, ctx.k), "t": random_monoid(rng, ctx.k)},
            lambda c, ctx: compose(c["s"], c["t"]) == compose(c["t"], c["s"]))


@prop("monoid", "compose-associative")
def _():
    return (lambda rng, ctx: {n: random_monoid(rng, ctx.k) for n in "stu"},
            lambda c, ctx: compose(compose(c["s"], c["t"]), c["u"]) == compose(c["s"], compose(c["t"], c["u"])))


@prop("monoid", "cancellative")
def _():
    def gen(rng, ctx):
        t1 = random_monoid(rng, ctx.k)
        return {"s": random_monoid(rng, ctx.k), "t1": t1,
                "t2": t1 if rng.random() < 0.5 else random_monoid(rng, ctx.k)}
    return gen, lambda c, ctx: (compose(c["s"], c["t1"]) != compose(c["s"], c["t2"])) or c["t1"] == c["t2"]


@prop("monoid", "ore-pair-minimal")
def _():
    def check(c, ctx):
        s1, s2, u1 = c["s1"], c["s2"], c["u1"]
        t1, t2 = ore_pair(s1, s2)
        common = compose(t1, s1)
        if common != compose(t2, s2) or common != join(s1, s2):
            return False
        other = compose(u1, s1)
        if divide_exact(other, s2) is not None:
            return other >= common
        return True
    return (lambda rng, ctx: {"s1": random_monoid(rng, ctx.k), "s2": random_monoid(rng, ctx.k),
                              "u1": random_monoid(rng, ctx.k, 6)}, check)


@prop("monoid", "divide-exact")
def _():
    return (lambda rng, ctx: {"s": random_monoid(rng, ctx.k), "t": random_monoid(rng, ctx.k)},
            lambda c, ctx: divide_exact(compose(c["s"], c["t"]), c["t"]) == c["s"])


# ring

def _two_elems(rng, ctx):
    return {"a": ctx.ring.random_element(rng), "b": ctx.ring.random_element(rng),
            "s": random_monoid(rng, ctx.k, 3)}


@prop("ring", "act-additive")
def _():
    return _two_elems, lambda c, ctx: ctx.ring.act(c["s"], c["a"] + c["b"]) == \
        ctx.ring.act(c["s"], c["a"]) + ctx.ring.act(c["s"], c["b"])


@prop("ring", "act-multiplicative")
def _():
    return _two_elems, lambda c, ctx: ctx.ring.act(c["s"], c["a"] * c["b"]) == \
        ctx.ring.act(c["s"], c["a"]) * ctx.ring.act(c["s"], c["b"])


@prop("ring", "act-unital")
def _():
    return _two_elems, lambda c, ctx: ctx.ring.act(c["s"], ctx.ring.one()) == ctx.ring.one()


@prop("ring", "act-composition")
def _():
    def gen(rng, ctx):
        return {"a": ctx.ring.random_element(rng), "s": random_monoid(rng, ctx.k, 2),
                "t": random_monoid(rng, ctx.k, 2)}
    return gen, lambda c, ctx: ctx.ring.act(c["s"], ctx.ring.act(c["t"], c["a"])) == \
        ctx.ring.act(compose(c["s"], c["t"]), c["a"])


@prop("ring", "preimage-roundtrip")
def _():
    return _two_elems, lambda c, ctx: ctx.ring.preimage(c["s"], ctx.ring.act(c["s"], c["a"])) == c["a"]


@prop("ring", "membership-monotone")
def _():
    def gen(rng, ctx):
        ring = ctx.ring
        gens = [g for g in (ring.random_element(rng) for _ in range(2)) if not ring.is_zero(g)] or [ring.one()]
        return {"r": ring.random_element(rng) * gens[0], "gens": gens, "extra": ring.random_element(rng)}

    def check(c, ctx):
        ring = ctx.ring
        small = ring.ideal_membership(c["r"], c["gens"])
        big = ring.ideal_membership(c["r"], c["gens"] + [c["extra"]])
        return small.is_member and big.is_member
    return gen, check


@prop("ring", "preimage-ideal-sound", applies=_poly_ring)
def _():
    def gen(rng, ctx):
        ring = ctx.ring
        gens = [g for g in (ring.random_element(rng, 3, 4) for _ in range(2)) if not ring.is_zero(g)]
        return {"gens": gens or [ring.x()], "s": random_monoid(rng, ctx.k, 2)}

    def check(c, ctx):
        ring = ctx.ring
        try:
            pre = ring.preimage_ideal(c["s"], c["gens"])
        except DegreeBoundExceeded:
            return True
        return all(ring.ideal_membership(ring.act(c["s"], g), c["gens"]).is_member for g in pre)
    return gen, check


# extension

def _three(rng, ctx):
    case = {n: random_ext(ctx.ext, rng) for n in "abc"}
    for n in "ghu":
        case[n] = random_monoid(rng, ctx.k, 3)
    return case


@prop("extension", "add-associative")
def _():
    return _three, lambda c, ctx: (c["a"] + c["b"]) + c["c"] == c["a"] + (c["b"] + c["c"])


@prop("extension", "add-commutative")
def _():
    return _three, lambda c, ctx: c["a"] + c["b"] == c["b"] + c["a"]


@prop("extension", "mul-associative")
def _():
    return _three, lambda c, ctx: (c["a"] * c["b"]) * c["c"] == c["a"] * (c["b"] * c["c"])


@prop("extension", "distributive")
def _():
    return _three, lambda c, ctx: (c["a"] * (c["b"] + c["c"]) == c["a"] * c["b"] + c["a"] * c["c"]
                                   and (c["b"] + c["c"]) * c["a"] == c["b"] * c["a"] + c["c"] * c["a"])


@prop("extension", "mul-commutative", applies=_commutative)
def _():
    return _three, lambda c, ctx: c["a"] * c["b"] == c["b"] * c["a"]


@prop("extension", "normal-form-invariant")
def _():
    def check(c, ctx):
        a, t = c["a"], c["g"]
        return ctx.ext.normalize(compose(t, a.denom), ctx.ring.act(t, a.num)) == a
    return _three, check


@prop("extension", "denominator-witness")
def _():
    return _three, lambda c, ctx: ctx.ext.act(c["a"].denom - MonoidElement.zero(ctx.k), c["a"]) == \
        ctx.ext.embed(c["a"].num)


@prop("extension", "automorphism-mul")
def _():
    def check(c, ctx):
        g = c["g"] - c["h"]
        ext = ctx.ext
        return ext.act(g, c["a"] * c["b"]) == ext.act(g, c["a"]) * ext.act(g, c["b"])
    return _three, check


@prop("extension", "automorphism-inverse")
def _():
    def check(c, ctx):
        g = c["g"] - c["h"]
        return ctx.ext.act(g, ctx.ext.act(-g, c["a"])) == c["a"]
    return _three, check


@prop("extension", "action-group-law")
def _():
    def check(c, ctx):
        g1, g2 = c["g"] - c["h"], c["u"] - c["g"]
        ext = ctx.ext
        return ext.act(g1, ext.act(g2, c["a"])) == ext.act(g1 + g2, c["a"])
    return _three, check


@prop("extension", "eq-matches-lift")
def _():
    def gen(rng, ctx):
        a = random_ext(ctx.ext, rng)
        t = random_monoid(rng, ctx.k, 2)
        # same element written with a larger denominator
        b = ctx.ext.normalize(compose(t, a.denom), ctx.ring.act(t, a.num))
        return {"a": a, "b": b if rng.random() < 0.5 else random_ext(ctx.ext, rng)}
    return gen, lambda c, ctx: ctx.ext.eq(c["a"], c["b"]) == (c["a"] == c["b"])


@prop("extension", "iso-equivariant", applies=lambda ctx: registry.has_model(ctx.ext))
def _():
    def check(c, ctx):
        m = registry.model_for(ctx.ext)
        n = c["g"][0] - c["h"][0]
        return m.to_model(ctx.ext.act(c["g"] - c["h"], c["a"])) == m.act(n, m.to_model(c["a"]))
    return _three, check


# models (fixed rings, independent of the selected ring)

_PUISEUX = Extension(QPolyRing([(1, 2)]))
_HALFINT = Extension(ZPolyRing([(2, 1)]))


def _model_pair(ext):
    def gen(rng, ctx):
        return {"a": random_ext(ext, rng, 3), "b": random_ext(ext, rng, 3),
                "g": random_monoid(rng, 1, 3), "h": random_monoid(rng, 1, 3)}
    return gen


def _iso_check(ext):
    m = registry.model_for(ext)

    def check(c, ctx):
        a, b = c["a"], c["b"]
        ma, mb = m.to_model(a), m.to_model(b)
        n = c["g"][0] - c["h"][0]
        return (m.to_model(a + b) == ma + mb and m.to_model(a * b) == ma * mb
                and m.to_model(ext.act(c["g"] - c["h"], a)) == m.act(n, ma)
                and m.from_model(ma) == a)
    return check


for _ext, _label in ((_PUISEUX, "puiseux"), (_HALFINT, "halfint")):
    PROPERTIES.append(Property("models", f"iso-{_label}", _model_pair(_ext), _iso_check(_ext)))


@prop("models", "puiseux-bezout")
def _():
    def gen(rng, ctx):
        a = random_puiseux(rng)
        return {"pa": a if a else DyadicPuiseux.x(), "pb": random_puiseux(rng)}

    def check(c, ctx):
        a, b = c["pa"], c["pb"]
        g, u, v = puiseux_xgcd(a, b)
        return (g == puiseux_gcd(a, b) and puiseux_divides(g, a)
                and (not b or puiseux_divides(g, b)) and u * a + v * b == g)
    return gen, check


@prop("models", "skew-commutation")
def _():
    def check(c, ctx):
        coeff = c["coeff"]
        return skew_mul(SkewPoly.t(), SkewPoly.const(coeff)) == skew_mul(SkewPoly.const(coeff.act(1)), SkewPoly.t())
    return (lambda rng, ctx: {"coeff": random_dyadic_ratfunc(rng)}, check)


@prop("models", "skew-left-division")
def _():
    def gen(rng, ctx):
        from .models.skew import SkewRing
        R = SkewRing()
        c = R.random_element(rng)
        while not c:
            c = R.random_element(rng)
        a = R.random_element(rng) if rng.random() < 0.5 else random_skew(rng)
        return {"sa": a, "sc": c}
    return gen, lambda c, ctx: skew_in_R(skew_mul(c["sa"], c["sc"])) == skew_in_R(c["sa"])


@prop("models", "halfint-dyadic")
def _():
    def check(c, ctx):
        n = c["n"]
        return (halfint_membership([0, Fraction(1, 2 ** n)]) and not halfint_membership([Fraction(1, 2)])
                and halfint_membership([5, Fraction(1, 8)]))
    return (lambda rng, ctx: {"n": rng.randint(0, 20)}, check)


# ideals

def _ideal_case(rng, ctx):
    I = random_ideal(ctx.ext, rng, 2, 2, 2, 3)
    a = sample_member(ctx.ext, I, rng) if rng.random() < 0.5 else random_ext(ctx.ext, rng, 2, 2, 3)
    return {"I": I, "a": a, "window": ctx.window}


@prop("ideals", "delta-gamma-agreement")
def _():
    def check(c, ctx):
        w = ctx.win(c)
        v1 = ideals.ext_ideal_member(c["a"], c["I"], w)
        v2 = ideals.delta_gamma_member(c["a"], c["I"], w)
        return not (v1.decisive and v2.decisive) or v1.outcome == v2.outcome
    return _ideal_case, check


@prop("ideals", "members-are-members")
def _():
    def gen(rng, ctx):
        I = random_ideal(ctx.ext, rng, 2, 2, 2, 3)
        return {"I": I, "a": sample_member(ctx.ext, I, rng), "window": ctx.window}
    return gen, lambda c, ctx: not ideals.ext_ideal_member(c["a"], c["I"], ctx.win(c)).is_non_member


@prop("ideals", "verdict-soundness", applies=lambda ctx: registry.has_model(ctx.ext))
def _():
    def check(c, ctx):
        v = ideals.ext_ideal_member(c["a"], c["I"], ctx.win(c), use_model=False)
        if not v.decisive:
            return True
        m = registry.model_for(ctx.ext)
        truth = m.ideal_member(m.to_model(c["a"]), [m.to_model(g) for g in c["I"].gens])
        return truth is None or truth == v.is_member
    return _ideal_case, check


@prop("ideals", "shift-containment", applies=_poly_ring)
def _():
    def check(c, ctx):
        fam = ideals.gamma_family(c["I"], ctx.win(c))
        return ideals.shift_containment(fam).is_member
    return (lambda rng, ctx: {"I": random_ideal(ctx.ext, rng, 2, 2, 2, 3), "window": min(ctx.window, 3)}, check)


@prop("ideals", "closure-extensive-idempotent", applies=_poly_ring)
def _():
    def check(c, ctx):
        ring = ctx.ring
        w = ctx.win(c)
        M = c["M"]
        res = ideals.closure_generators(M, w)
        if not all(ring.ideal_membership(g, res.gens).is_member for g in M.gens):
            return False
        if not res.decisive:
            return True
        again = ideals.closure_generators(FinGenLeftIdeal(ctx.ext, "R", res.gens), w)
        return ideals.same_ideal(ring, again.gens, res.gens)
    return (lambda rng, ctx: {"M": random_r_ideal(ctx.ext, rng), "window": ctx.window}, check)


@prop("ideals", "closure-monotone", applies=_poly_ring)
def _():
    def gen(rng, ctx):
        M = random_r_ideal(ctx.ext, rng, 2)
        extra = ctx.ring.random_element(rng)
        return {"M": M, "N": FinGenLeftIdeal(ctx.ext, "R", list(M.gens) + [extra]), "window": ctx.window}

    def check(c, ctx):
        w = ctx.win(c)
        cm = ideals.closure_generators(c["M"], w)
        cn = ideals.closure_generators(c["N"], w)
        if not cn.decisive:
            return True
        return all(ctx.ring.ideal_membership(g, cn.gens).is_member for g in cm.gens)
    return gen, check


@prop("ideals", "stability-eventually", applies=lambda ctx: registry.has_model(ctx.ext) and _poly_ring(ctx))
def _():
    def check(c, ctx):
        w = SearchWindow(MonoidElement((8,) * ctx.k), ctx.margin)
        return ideals.stability_check(c["I"], w).is_member
    return (lambda rng, ctx: {"I": random_ideal(ctx.ext, rng, 2, 2, 2, 3)}, check)


# -- runner --------------------------------------------------------------------------

@dataclass
class PropertyResult:
    suite: str
    name: str
    trials: int = 0
    failures: int = 0
    counterexample: Optional[dict] = None
    error: Optional[str] = None

    def to_json(self) -> dict:
        out = {"suite": self.suite, "property": self.name, "trials": self.trials,
               "failures": self.failures, "passed": self.failures == 0}
        if self.counterexample is not None:
            out["counterexample"] = {k: str(v) for k, v in self.counterexample.items()}
        if self.error:
            out["error"] = self.error
        return out


@dataclass
class PropReport:
    ring: str
    suite: str
    seed: int
    trials: int
    results: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.failures == 0 for r in self.results)

    def to_json(self) -> dict:
        return {"operation": "proptest", "ring": self.ring, "suite": self.suite, "seed": self.seed,
                "trials": self.trials, "passed": self.passed,
                "properties": [r.to_json() for r in self.results],
                "elapsed": round(self.elapsed, 6)}


def _fails(p: Property, case: dict, ctx: Context) -> bool:
    try:
        return not p.check(case, ctx)
    except Exception:  # a crash counts as a failure of the property
        return True


def run_suite(suite: str = "all", ring="QPoly{c=1,d=2}", trials: int = 100, seed: int = 0,
              window: int = 4, margin: int = 3, properties: Optional[list] = None) -> PropReport:
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)} or all")
    ring = parse_ring(ring) if isinstance(ring, str) else ring
    ctx = Context(ring, Extension(ring), window, margin)
    start = time.perf_counter()
    report = PropReport(ring.descriptor(), suite, seed, trials)
    chosen = properties if properties is not None else [
        p for p in PROPERTIES if suite == "all" or p.suite == suite]
    for p in chosen:
        if trials <= 0 or not p.applies(ctx):
            continue
        # each property gets its own stream so adding one never perturbs another
        rng = random.Random(f"{seed}:{p.suite}:{p.name}")
        res = PropertyResult(p.suite, p.name)
        for _ in range(trials):
            case = p.gen(rng, ctx)
            res.trials += 1
            if _fails(p, case, ctx):
                res.failures += 1
                if res.counterexample is None:
                    res.counterexample = shrink(case, lambda c: _fails(p, c, ctx))
                    try:
                        p.check(res.counterexample, ctx)
                    except Exception as exc:
                        res.error = f"{type(exc).__name__}: {exc}"
        report.results.append(res)
    report.elapsed = time.perf_counter() - start
    return report
