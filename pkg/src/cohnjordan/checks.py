"""Named checks with string arguments, as used by the CLI and scenario files."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from . import ideals
from .contract import Outcome, Verdict
from .extension import Extension
from .ideals import SearchWindow, WindowedFamily, record
from .monoid import parse_monoid
from .parsing import parse_ideal


class CheckError(ValueError):
    """Unknown check or malformed arguments."""


@dataclass(frozen=True)
class Check:
    name: str
    params: tuple
    summary: str
    run: Callable


def _elem(ext: Extension, text: str):
    return ext.parse(text)


def _ring_elem(ext: Extension, text: str):
    return ext.ring.parse(text)


def _ideal(ext: Extension, text: str):
    return parse_ideal(ext, text)


def _closure_verdict(res) -> Verdict:
    gens = tuple(res.gens)
    if res.decisive:
        return Verdict.member(gens, res.reason)
    return Verdict(Outcome.UNKNOWN, gens, res.reason)


def _chain(ext, args, w, seed, use_model):
    rep = ideals.ascending_chain_demo(int(args.get("n", 10)), w, use_model)
    if rep.certified:
        return Verdict.member(rep.n, f"{rep.n} strict inclusions certified")
    bad = [st for st in rep.steps if st["inclusion"] != "Member" or st["strict"] != "NonMember"]
    return Verdict.unknown(w.bound, f"{len(bad)} steps not certified")


def _equal(ext, args, w, seed, use_model):
    a, b = _elem(ext, args["a"]), _elem(ext, args["b"])
    if ext.eq(a, b):
        return Verdict.member(str(a), "equal normal forms")
    return Verdict.non_member(f"{a} != {b}")


def _in_base(ext, args, w, seed, use_model):
    a = _elem(ext, args["a"])
    if a.in_base():
        return Verdict.member(str(a), "denominator is trivial")
    return Verdict.non_member(f"{a} is reduced with denominator {a.denom}")


def _family(ext, args, w, seed, use_model):
    entries = {}
    for key, val in args.items():
        if key.startswith("X."):
            entries[parse_monoid(key[2:], ext.k)] = list(parse_ideal(ext, val).gens)
    if not entries:
        raise CheckError("family-admissible needs entries X.0, X.1, ...")
    return ideals.family_admissible_check(WindowedFamily.from_lists(ext, entries))


CHECKS: dict[str, Check] = {}


def _register(name, params, summary, run):
    CHECKS[name] = Check(name, tuple(params), summary, run)


_register("ext-member", ("a", "I"), "a in the left ideal I of A",
          lambda ext, a, w, seed, um: ideals.ext_ideal_member(
              _elem(ext, a["a"]), _ideal(ext, a["I"]), w, um))
_register("gamma-member", ("r", "I", "s"), "r in phi_s(I) & R",
          lambda ext, a, w, seed, um: ideals.gamma_member(
              _ring_elem(ext, a["r"]), _ideal(ext, a["I"]), parse_monoid(a["s"], ext.k), w, um))
_register("delta-gamma", ("a", "I"), "a in Delta(Gamma(I))",
          lambda ext, a, w, seed, um: ideals.delta_gamma_member(
              _elem(ext, a["a"]), _ideal(ext, a["I"]), w, um))
_register("closure-member", ("r", "M"), "r in the closure of the left ideal M of R",
          lambda ext, a, w, seed, um: ideals.closure_member(
              _ring_elem(ext, a["r"]), _ideal(ext, a["M"]), w, um))
_register("closure-generators", ("M",), "generators of the closure of M",
          lambda ext, a, w, seed, um: _closure_verdict(
              ideals.closure_generators(_ideal(ext, a["M"]), w, um)))
_register("is-closed", ("M",), "M == A*M & R",
          lambda ext, a, w, seed, um: ideals.is_closed(_ideal(ext, a["M"]), w, um))
_register("admissible", ("I",), "sampled admissibility of the family of I",
          lambda ext, a, w, seed, um: ideals.admissible_check(
              _ideal(ext, a["I"]), w, int(a.get("samples", 20)), seed, um))
_register("family-admissible", ("X.<s>",), "exact admissibility of a hand-built family", _family)
_register("stability", ("I",), "some k with phi_k(I) = A*(phi_k(I) & R)",
          lambda ext, a, w, seed, um: ideals.stability_check(_ideal(ext, a["I"]), w, um))
_register("principal", ("I",), "a single verified generator of I",
          lambda ext, a, w, seed, um: ideals.principal_test(_ideal(ext, a["I"]), w, um))
_register("ascending-chain", ("n",), "strict chain A*phi^-m(x), Z[x] with x -> 2x", _chain)
_register("equal", ("a", "b"), "a == b in A", _equal)
_register("in-base", ("a",), "a lies in R", _in_base)


def run_check(ext: Extension, name: str, args: dict, window, seed: int = 0,
              use_model: bool = True) -> tuple[Verdict, dict]:
    """Run one named check; returns the verdict and its JSON record."""
    check = CHECKS.get(name)
    if check is None:
        raise CheckError(f"unknown check {name!r}; try one of {', '.join(sorted(CHECKS))}")
    w = window if isinstance(window, SearchWindow) else SearchWindow.of(window, ext.k)
    for p in check.params:
        if "<" not in p and p not in args and name != "ascending-chain":
            raise CheckError(f"check {name!r} needs argument {p}=...")
    start = time.perf_counter()
    verdict = check.run(ext, args, w, seed, use_model)
    elapsed = time.perf_counter() - start
    inputs = {"ring": ext.ring.descriptor(), **args}
    return verdict, record(name, inputs, verdict, w.bound, elapsed)


__all__ = ["CHECKS", "Check", "CheckError", "run_check"]
