"""Left ideals of R and of A(R; S): correspondence, closure, stability.

Every question here is of the form "is there s in S with ...", so answers
are windowed :class:`Verdict` values.  Member verdicts always come with a
search witness or an explicit model quotient; NonMember verdicts come only
from certificates that hold for every s at once:

* the base ring reports that its action images are direct summands, so
  membership at s = 0 already decides every s;
* a registered explicit model decides membership in A by its own arithmetic;
* evaluation at a point fixed by the action is a ring map out of A, and the
  evaluated element misses the evaluated ideal.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Any, Iterator, Optional, Sequence

from .contract import DegreeBoundExceeded, SRing, Verdict
from .extension import ExtElement, Extension
from .monoid import GroupElement, MonoidElement, as_monoid, box, divide_exact, join
from .models.registry import has_model, model_for


# -- data types ----------------------------------------------------------------

@dataclass(frozen=True)
class SearchWindow:
    bound: MonoidElement
    margin: int = 3

    def __post_init__(self):
        if any(e < 0 for e in self.bound.exps):
            raise ValueError("window bound must be non-negative")
        if self.margin < 1:
            raise ValueError("stabilization margin must be at least 1")

    @classmethod
    def of(cls, bound, k: int = 1, margin: int = 3) -> "SearchWindow":
        if isinstance(bound, SearchWindow):
            return bound
        if isinstance(bound, str):
            from .monoid import parse_monoid
            return cls(parse_monoid(bound, k), margin)
        return cls(as_monoid(bound, k), margin)

    @property
    def k(self) -> int:
        return self.bound.k

    def points(self) -> list[MonoidElement]:
        return list(box(self.bound))

    def __str__(self):
        return str(self.bound)


class FinGenLeftIdeal:
    """A finitely generated left ideal of R (ambient "R") or of A (ambient "A").

    Zero generators are dropped, so the zero ideal has an empty list.
    """

    __slots__ = ("ext", "ambient", "gens")

    def __init__(self, ext, ambient: str, gens: Sequence):
        if isinstance(ext, SRing):
            ext = Extension(ext)
        if ambient not in ("A", "R"):
            raise ValueError(f"ambient must be 'A' or 'R', not {ambient!r}")
        ring = ext.ring
        clean = []
        for g in gens:
            if isinstance(g, str):
                g = ext.parse(g) if ambient == "A" else ring.parse(g)
            elif ambient == "A" and not isinstance(g, ExtElement):
                g = ext.embed(g)
            if ambient == "R" and isinstance(g, ExtElement):
                if not g.in_base():
                    raise ValueError(f"{g} is not an element of R")
                g = g.num
            zero = g.is_zero() if isinstance(g, ExtElement) else ring.is_zero(g)
            if not zero:
                clean.append(g)
        self.ext = ext
        self.ambient = ambient
        self.gens = tuple(clean)

    @classmethod
    def in_ring(cls, ext, gens) -> "FinGenLeftIdeal":
        return cls(ext, "R", gens)

    @classmethod
    def in_ext(cls, ext, gens) -> "FinGenLeftIdeal":
        return cls(ext, "A", gens)

    @property
    def ring(self) -> SRing:
        return self.ext.ring

    def promote(self) -> "FinGenLeftIdeal":
        """The left ideal A*gens."""
        if self.ambient == "A":
            return self
        return FinGenLeftIdeal(self.ext, "A", [self.ext.embed(g) for g in self.gens])

    def is_zero(self) -> bool:
        return not self.gens

    def __str__(self):
        fmt = str if self.ambient == "A" else self.ring.format
        return f"ideal{{{self.ambient}}}[" + "; ".join(fmt(g) for g in self.gens) + "]"

    def __repr__(self):
        return f"FinGenLeftIdeal({self})"


@dataclass
class ClosureResult:
    """Generators of the closure accumulated over a window."""

    gens: list
    decisive: bool
    reason: str = ""
    steps: int = 0

    def __iter__(self):
        # unpacks as (gens, decisive)
        return iter((self.gens, self.decisive))


@dataclass
class WindowedFamily:
    """Generators for L_s, s in a window, with a decisiveness flag per entry."""

    ext: Extension
    bound: MonoidElement
    entries: dict = field(default_factory=dict)
    decisive: dict = field(default_factory=dict)

    @classmethod
    def from_lists(cls, ring_or_ext, entries: dict, decisive: bool = True) -> "WindowedFamily":
        ext = ring_or_ext if isinstance(ring_or_ext, Extension) else Extension(ring_or_ext)
        k = ext.k
        items = {as_monoid(s, k): list(g) for s, g in entries.items()}
        bound = MonoidElement.zero(k)
        for s in items:
            bound = join(bound, s)
        return cls(ext, bound, items, {s: decisive for s in items})

    @property
    def ring(self) -> SRing:
        return self.ext.ring

    def member(self, r, s) -> Verdict:
        s = as_monoid(s, self.ext.k)
        gens = self.entries[s]
        v = self.ring.ideal_membership(r, gens) if gens else (
            Verdict.member(s) if self.ring.is_zero(r) else Verdict.non_member("zero ideal"))
        if v.is_member:
            return Verdict.member(s, v.reason)
        if self.decisive.get(s):
            return v
        return Verdict.unknown(s, "entry is only an approximation from below")

    def __iter__(self) -> Iterator[MonoidElement]:
        return iter(sorted(self.entries, key=MonoidElement.sort_key))


# -- shared helpers --------------------------------------------------------------

def _ring_member(ring: SRing, r, gens) -> bool:
    if not gens:
        return ring.is_zero(r)
    return ring.ideal_membership(r, gens).is_member


def same_ideal(ring: SRing, g1: Sequence, g2: Sequence) -> bool:
    """Two-way generator membership."""
    return (all(_ring_member(ring, a, g2) for a in g1)
            and all(_ring_member(ring, b, g1) for b in g2))


def _search(ring: SRing, r, G: Sequence, w: SearchWindow) -> Optional[MonoidElement]:
    """Smallest s <= w.bound with act(s, r) in R*act(s, G), or None.

    Membership is monotone in s (apply act(u) to a witness), which allows
    one probe at the bound and a bisection for k = 1.
    """
    def member_at(s):
        return _ring_member(ring, ring.act(s, r), [ring.act(s, g) for g in G])

    zero = MonoidElement.zero(ring.k)
    if member_at(zero):
        return zero
    if ring.image_is_summand or w.bound.is_zero():
        return None
    if ring.k == 1:
        top = w.bound.exps[0]
        if not member_at(MonoidElement((top,))):
            return None
        lo, hi = 0, top
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if member_at(MonoidElement((mid,))):
                hi = mid
            else:
                lo = mid
        return MonoidElement((hi,))
    for s in box(w.bound):
        if not s.is_zero() and member_at(s):
            return s
    return None


def _evaluation_certificate(ext: Extension, a: ExtElement, gens: Sequence[ExtElement]) -> Optional[str]:
    ring = ext.ring
    for p in ring.evaluation_points():
        va = ring.evaluate(a.num, p)
        vals = [ring.evaluate(g.num, p) for g in gens]
        if not ring.scalar_member(va, vals):
            return (f"evaluation at the fixed point {p} extends to A and sends the element to "
                    f"{va}, outside the ideal generated by {', '.join(map(str, vals))}")
    return None


def _model_answer(ext: Extension, a: ExtElement, gens: Sequence[ExtElement]):
    if not has_model(ext):
        return None, ""
    model = model_for(ext)
    images = [model.to_model(g) for g in gens]
    return model.ideal_member(model.to_model(a), images), model.name


def _decide(ext, a, gens, w, found, t, use_model, what) -> Verdict:
    if found is not None:
        return Verdict.member(found, f"{what} at s={found} after lifting to level {t}")
    ring = ext.ring
    if ring.image_is_summand:
        return Verdict.non_member(
            "each action image is a direct summand of R, so failure at s=0 is final")
    if use_model:
        ans, name = _model_answer(ext, a, gens)
        if ans is False:
            return Verdict.non_member(f"{name} model: the quotient leaves the model ring")
        if ans is True:
            return Verdict.member(None, f"{name} model: exact quotient beyond window {w}")
    cert = _evaluation_certificate(ext, a, gens)
    if cert:
        return Verdict.non_member(cert)
    return Verdict.unknown(w.bound, f"no witness with s <= {w.bound} and no certificate")


def _window(w, k: int) -> SearchWindow:
    return w if isinstance(w, SearchWindow) else SearchWindow.of(w, k)


# -- membership ------------------------------------------------------------------

def ext_ideal_member(a: ExtElement, I: FinGenLeftIdeal, w, use_model: bool = True) -> Verdict:
    """Decide a in I for a left ideal I of A.

    Both sides are lifted to a common level t where they live in R; then
    a in I iff act(s, lifted a) lies in R*act(s, lifted gens) for some s.
    The witness is that s.
    """
    ext = I.ext
    I = I.promote()
    w = _window(w, ext.k)
    if isinstance(a, str):
        a = ext.parse(a)
    elif not isinstance(a, ExtElement):
        a = ext.embed(a)
    if not I.gens:
        if a.is_zero():
            return Verdict.member(MonoidElement.zero(ext.k), "zero element of the zero ideal")
        return Verdict.non_member("nonzero element of the zero ideal")
    t, nums = ext.lift([a, *I.gens])
    found = _search(ext.ring, nums[0], nums[1:], w)
    return _decide(ext, a, I.gens, w, found, t, use_model, "lifted element in the acted ideal")


def gamma_member(r, I: FinGenLeftIdeal, s, w, use_model: bool = True) -> Verdict:
    """Decide r in L_s = phi_s(I) & R.

    phi_s is an automorphism of A, so phi_s(I) = A*phi_s(gens) and the
    question becomes membership of the embedded r in that ideal.
    """
    ext = I.ext
    I = I.promote()
    s = as_monoid(s, ext.k)
    if isinstance(r, str):
        r = ext.ring.parse(r)
    moved = FinGenLeftIdeal(ext, "A", [ext.act(s, g) for g in I.gens])
    return ext_ideal_member(ext.embed(r), moved, w, use_model)


def closure_member(r, M: FinGenLeftIdeal, w, use_model: bool = True) -> Verdict:
    """Decide r in the closure A*M & R of a left ideal M of R."""
    ext = M.ext
    ring = ext.ring
    w = _window(w, ext.k)
    if isinstance(r, str):
        r = ring.parse(r)
    if M.ambient != "R":
        raise ValueError("closure_member needs an ideal of R")
    if not M.gens:
        if ring.is_zero(r):
            return Verdict.member(MonoidElement.zero(ext.k), "zero")
        return Verdict.non_member("the zero ideal is closed")
    found = _search(ring, r, M.gens, w)
    a = ext.embed(r)
    gens = [ext.embed(g) for g in M.gens]
    return _decide(ext, a, gens, w, found, MonoidElement.zero(ext.k), use_model,
                   "act(s, r) in R*act(s, M)")


def delta_gamma_member(a: ExtElement, I: FinGenLeftIdeal, w, use_model: bool = True) -> Verdict:
    """Decide a in Delta(Gamma(I)): does some lift of a land in L_s?

    Gamma families are admissible, so the answer at the first level s where
    a lifts into R already fixes the answer at every larger s.
    """
    ext = I.ext
    w = _window(w, ext.k)
    if isinstance(a, str):
        a = ext.parse(a)
    for s in box(join(w.bound, a.denom)):
        u = divide_exact(s, a.denom)
        if u is None:
            continue
        v = gamma_member(ext.ring.act(u, a.num), I, s, w, use_model)
        if v.decisive:
            return Verdict(v.outcome, s if v.is_member else v.witness,
                           f"lift at s={s}: {v.reason}")
    return Verdict.unknown(w.bound, "no decisive level in the window")


# -- closure ---------------------------------------------------------------------

def closure_generators(M: FinGenLeftIdeal, w, use_model: bool = True) -> ClosureResult:
    """Generators of the union of preimage ideals of R*act(s, M) over the window."""
    ext = M.ext
    ring = ext.ring
    w = _window(w, ext.k)
    base = ring.reduce_ideal(list(M.gens))
    if not base:
        return ClosureResult([], True, "zero ideal")
    if _ring_member(ring, ring.one(), base):
        reason = "unit ideal"
        if use_model and has_model(ext):
            model = model_for(ext)
            contracted = model.contract([model.to_model(ext.embed(g)) for g in base])
            if contracted is not None and same_ideal(ring, [ring.one()], contracted):
                reason = f"unit ideal; {model.name} model contraction agrees"
        return ClosureResult([ring.one()], True, reason)
    acc = list(base)
    quiet = 0
    steps = 0
    for s in box(w.bound):
        if s.is_zero():
            continue
        try:
            pre = ring.preimage_ideal(s, [ring.act(s, g) for g in base])
        except (DegreeBoundExceeded, NotImplementedError) as exc:
            return ClosureResult(acc, False, f"stopped at s={s}: {exc}", steps)
        steps += 1
        if all(_ring_member(ring, p, acc) for p in pre):
            quiet += 1
        else:
            acc = ring.reduce_ideal(acc + list(pre))
            quiet = 0
    if use_model and has_model(ext):
        model = model_for(ext)
        contracted = model.contract([model.to_model(ext.embed(g)) for g in base])
        if contracted is not None:
            if same_ideal(ring, acc, contracted):
                return ClosureResult(acc, True, f"{model.name} model contraction agrees", steps)
            if not ring.image_is_summand:
                return ClosureResult(acc, False,
                                     f"{model.name} model contraction is larger than window {w}", steps)
    if ring.image_is_summand:
        return ClosureResult(acc, True, "action images are direct summands; closure is trivial", steps)
    if quiet >= w.margin:
        return ClosureResult(acc, False, f"heuristic: unchanged for the last {quiet} steps", steps)
    return ClosureResult(acc, False, "window exhausted while still growing", steps)


def is_closed(M: FinGenLeftIdeal, w, use_model: bool = True) -> Verdict:
    """Closed means M == A*M & R."""
    ext = M.ext
    ring = ext.ring
    w = _window(w, ext.k)
    if not M.gens:
        return Verdict.member(None, "the zero ideal is closed")
    res = closure_generators(M, w, use_model)
    for g in res.gens:
        if not _ring_member(ring, g, list(M.gens)):
            return Verdict.non_member(f"{ring.format(g)} lies in the closure but not in M", g)
    if res.decisive:
        return Verdict.member(None, res.reason)
    return Verdict.unknown(w.bound, res.reason)


# -- the correspondence ------------------------------------------------------------

def _lift_ideal(I: FinGenLeftIdeal):
    I = I.promote()
    t, nums = I.ext.lift(list(I.gens)) if I.gens else (MonoidElement.zero(I.ext.k), [])
    return t, nums


def gamma_entry(I: FinGenLeftIdeal, s, w, use_model: bool = True) -> ClosureResult:
    """Generators of L_s = phi_s(I) & R.

    With I = A*phi_t^{-1}(H) and u = join(s, t): L_u is the closure of
    R*act(u - t, H), and L_s is its preimage under act(u - s).
    """
    ext = I.ext
    ring = ext.ring
    w = _window(w, ext.k)
    s = as_monoid(s, ext.k)
    t, H = _lift_ideal(I)
    if not H:
        return ClosureResult([], True, "zero ideal")
    u = join(s, t)
    moved = [ring.act(divide_exact(u, t), h) for h in H]
    res = closure_generators(FinGenLeftIdeal(ext, "R", moved), w, use_model)
    down = divide_exact(u, s)
    if down.is_zero():
        return res
    try:
        gens = ring.preimage_ideal(down, res.gens)
    except (DegreeBoundExceeded, NotImplementedError) as exc:
        return ClosureResult([], False, f"no preimage ideal: {exc}")
    return ClosureResult(ring.reduce_ideal(gens), res.decisive, res.reason, res.steps)


def gamma_family(I: FinGenLeftIdeal, w, use_model: bool = True) -> WindowedFamily:
    ext = I.ext
    w = _window(w, ext.k)
    fam = WindowedFamily(ext, w.bound)
    for s in box(w.bound):
        res = gamma_entry(I, s, w, use_model)
        fam.entries[s] = list(res.gens)
        fam.decisive[s] = res.decisive
    return fam


def shift_containment(fam: WindowedFamily) -> Verdict:
    """Check act(t, X_k) is inside X_{t+k} for every pair in the window."""
    ring = fam.ring
    for k in fam:
        for s in fam:
            target = k + s
            if s.is_zero() or target not in fam.entries:
                continue
            for g in fam.entries[k]:
                if not _ring_member(ring, ring.act(s, g), fam.entries[target]):
                    return Verdict.non_member(
                        f"act({s}, {ring.format(g)}) is not in X_{target}", (g, s, k))
    return Verdict.member(None, "containment holds on the window")


def family_admissible_check(fam: WindowedFamily) -> Verdict:
    """Check X_k == R & phi_s^{-1}(X_{s+k}) as ideals, for all s + k in the window."""
    ring = fam.ring
    exact = True
    for k in fam:
        for s in fam:
            target = k + s
            if s.is_zero() or target not in fam.entries:
                continue
            try:
                pre = ring.preimage_ideal(s, fam.entries[target]) if fam.entries[target] else []
            except (DegreeBoundExceeded, NotImplementedError):
                exact = False
                continue
            xk = fam.entries[k]
            for p in pre:
                if not _ring_member(ring, p, xk):
                    return Verdict.non_member(
                        f"{ring.format(p)} is in R & phi_{s}^-1(X_{target}) but not in X_{k}", (p, s, k))
            for g in xk:
                if not _ring_member(ring, g, pre):
                    return Verdict.non_member(
                        f"{ring.format(g)} is in X_{k} but act({s}, .) leaves X_{target}", (g, s, k))
    if not exact:
        return Verdict.unknown(fam.bound, "some preimage ideal hit the degree cap")
    return Verdict.member(None, "admissible on the window")


def admissible_check(I, w, samples: int = 20, seed: int = 0, use_model: bool = True) -> Verdict:
    """Sample r and compare r in X_k with act(s, r) in X_{s+k}, both via gamma_member.

    A :class:`WindowedFamily` is checked exactly instead.
    """
    if isinstance(I, WindowedFamily):
        return family_admissible_check(I)
    ext = I.ext
    ring = ext.ring
    w = _window(w, ext.k)
    rng = random.Random(seed)
    pts = list(box(w.bound))
    pool = []
    for s in pts:
        pool.extend(gamma_entry(I, s, w, use_model).gens)
    unknown = False
    for _ in range(samples):
        if pool and rng.random() < 0.5:
            r = ring.random_element(rng, 2, 3) * rng.choice(pool)
        else:
            r = ring.random_element(rng, 3, 4)
        k = rng.choice(pts)
        for s in pts:
            if s.is_zero() or not (k + s) <= w.bound:
                continue
            left = gamma_member(r, I, k, w, use_model)
            right = gamma_member(ring.act(s, r), I, k + s, w, use_model)
            if left.decisive and right.decisive and left.outcome != right.outcome:
                return Verdict.non_member(
                    f"r={ring.format(r)}: X_{k} says {left}, X_{k + s} after act({s}) says {right}",
                    (r, s, k))
            if not (left.decisive and right.decisive):
                unknown = True
    if unknown:
        return Verdict.unknown(w.bound, "some sampled membership was undecided")
    return Verdict.member(None, f"{samples} samples consistent on window {w}")


def stability_check(I: FinGenLeftIdeal, w, use_model: bool = True) -> Verdict:
    """Find k with phi_k(I) == A*(phi_k(I) & R); the witness is k."""
    ext = I.ext
    w = _window(w, ext.k)
    I = I.promote()
    if not I.gens:
        return Verdict.member(MonoidElement.zero(ext.k), "the zero ideal is stable")
    for k in box(w.bound):
        lk = gamma_entry(I, k, w, use_model)
        if not lk.gens:
            continue
        moved = FinGenLeftIdeal(ext, "A", [ext.act(k, g) for g in I.gens])
        generated = FinGenLeftIdeal(ext, "R", lk.gens).promote()
        ok = True
        for g in moved.gens:
            if not ext_ideal_member(g, generated, w, use_model).is_member:
                ok = False
                break
        if ok and all(ext_ideal_member(h, moved, w, use_model).is_member for h in generated.gens):
            return Verdict.member(k, f"phi_{k}(I) is generated by L_{k} = "
                                     + ", ".join(ext.ring.format(g) for g in lk.gens))
    return Verdict.unknown(w.bound, "no k in the window certified")


def principal_test(I: FinGenLeftIdeal, w, use_model: bool = True) -> Verdict:
    """Look for a single generator of I; the witness is that generator in A."""
    ext = I.ext
    ring = ext.ring
    w = _window(w, ext.k)
    I = I.promote()
    if not I.gens:
        return Verdict.member(ext.zero(), "the zero ideal")

    def generates(a: ExtElement, J: FinGenLeftIdeal) -> bool:
        single = FinGenLeftIdeal(ext, "A", [a])
        return (ext_ideal_member(a, J, w, use_model).is_member
                and all(ext_ideal_member(g, single, w, use_model).is_member for g in J.gens))

    if use_model and has_model(ext):
        model = model_for(ext)
        g = model.principal_generator([model.to_model(a) for a in I.gens])
        if g is not None and g:
            cand = model.from_model(g)
            if generates(cand, I):
                return Verdict.member(cand, f"{model.name} model gcd, verified both ways")
    for s in box(w.bound):
        moved = FinGenLeftIdeal(ext, "A", [ext.act(s, g) for g in I.gens])
        for a in gamma_entry(I, s, w, use_model).gens:
            if generates(ext.embed(a), moved):
                back = ext.act(GroupElement(tuple(-e for e in s.exps)), ext.embed(a))
                return Verdict.member(back, f"phi_{s}(I) = A*{ring.format(a)}, verified both ways")
    return Verdict.unknown(w.bound, "no candidate generator verified in the window")


# -- the non-noetherian chain ------------------------------------------------------

@dataclass
class ChainReport:
    ring: str
    n: int
    steps: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def certified(self) -> bool:
        return all(st["inclusion"] == "Member" and st["strict"] == "NonMember" for st in self.steps)

    def to_json(self) -> dict:
        return {"operation": "ascending-chain", "ring": self.ring, "n": self.n,
                "certified": self.certified, "steps": self.steps,
                "elapsed": round(self.elapsed, 6)}


def ascending_chain_demo(n: int, w=4, use_model: bool = True) -> ChainReport:
    """I_m = A*phi^{-m}(x) over Z[x] with x -> 2x, and I_m strictly inside I_{m+1}."""
    from .rings import ZPolyRing
    from .polys import ZPoly
    if n < 0:
        raise ValueError("n must be non-negative")
    start = time.perf_counter()
    ext = Extension(ZPolyRing([(2, 1)]))
    w = _window(w, 1)
    x = ext.embed(ZPoly.x())
    gens = [ext.act(GroupElement((-m,)), x) for m in range(n + 1)]
    report = ChainReport(ext.ring.descriptor(), n)
    for m in range(n):
        old, new = gens[m], gens[m + 1]
        inc = ext_ideal_member(old, FinGenLeftIdeal(ext, "A", [new]), w, use_model)
        strict = ext_ideal_member(new, FinGenLeftIdeal(ext, "A", [old]), w, use_model)
        report.steps.append({
            "m": m, "old": str(old), "new": str(new),
            "inclusion": inc.outcome.value, "inclusion_witness": _fmt(inc.witness),
            "strict": strict.outcome.value, "strict_certificate": strict.reason,
        })
    report.elapsed = time.perf_counter() - start
    return report


# -- JSON records ------------------------------------------------------------------

def _fmt(x: Any):
    if x is None:
        return None
    if isinstance(x, tuple):
        return [_fmt(v) for v in x]
    return str(x)


def record(operation: str, inputs: dict, verdict: Verdict, window, elapsed: float) -> dict:
    return {
        "operation": operation,
        "inputs": {k: str(v) for k, v in inputs.items()},
        "verdict": verdict.outcome.value,
        "witness": _fmt(verdict.witness),
        "reason": verdict.reason,
        "window": None if window is None else str(window),
        "elapsed": round(elapsed, 6),
    }
