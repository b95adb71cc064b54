"""Command-line front end.

Machine records go to standard output as JSON, narrative to standard error.
Exit status: 0 when every expectation is met, 1 on a mismatch, 2 on usage
or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .checks import CHECKS, CheckError, run_check
from .extension import Extension
from .ideals import SearchWindow
from .models.registry import has_model, model_for
from .monoid import parse_monoid
from .parsing import ParseError
from .rings import parse_ring

DEFAULT_RING = "QPoly{c=1,d=2}"
OK, MISMATCH, USAGE = 0, 1, 2


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=False))


def _note(*lines) -> None:
    for line in lines:
        print(line, file=sys.stderr)


def _window(args, k: int) -> SearchWindow:
    return SearchWindow(parse_monoid(args.window, k) if "," in args.window or k == 1
                        else parse_monoid(",".join([args.window] * k), k), args.margin)


def cmd_eval(args) -> int:
    ext = Extension(parse_ring(args.ring))
    a = ext.parse(args.expression)
    out = {"ring": ext.ring.descriptor(), "input": args.expression, "normal_form": str(a)}
    if has_model(ext):
        model = model_for(ext)
        out["model"] = model.render(model.to_model(a))
        out["model_name"] = model.name
    if args.json:
        _emit(out)
    else:
        print(out["normal_form"])
        if "model" in out:
            print(f"model ({out['model_name']}): {out['model']}")
    return OK


def _kv(pairs) -> dict:
    out = {}
    for item in pairs:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise CheckError(f"expected key=value, got {item!r}")
        out[key.strip()] = value.strip()
    return out


def cmd_check(args) -> int:
    if args.scenario:
        from .scenario import Scenario, find_scenario
        sc = Scenario.load(find_scenario(args.scenario))
        report = sc.run(parallel=args.parallel, use_model=not args.no_model)
        for rec in report.records:
            flag = "ok  " if rec["passed"] else "FAIL"
            _note(f"{flag} [{rec['index']}] {rec['operation']}: {rec['verdict']}"
                  f" (expected {rec['expect']})")
        _note(f"scenario {sc.name}: {'passed' if report.passed else 'FAILED'}")
        _emit(report.to_json())
        return OK if report.passed else MISMATCH
    if not args.name:
        raise CheckError("check needs a check name or --scenario FILE")
    ext = Extension(parse_ring(args.ring))
    verdict, rec = run_check(ext, args.name, _kv(args.params), _window(args, ext.k),
                             args.seed, not args.no_model)
    if args.expect:
        from .scenario import _matches
        rec["expect"] = args.expect
        rec["passed"] = _matches(verdict.outcome.value, args.expect)
    _note(f"{args.name}: {verdict.outcome.value}" + (f" ({verdict.reason})" if verdict.reason else ""))
    _emit(rec)
    return OK if rec.get("passed", True) else MISMATCH


def cmd_demo(args) -> int:
    from .demos import run_demo
    rep = run_demo(args.name, args.seed)
    _note(*rep.narrative)
    _note(f"demo {rep.name}: {'passed' if rep.passed else 'FAILED'} in {rep.elapsed:.2f}s")
    _emit(rep.to_json())
    return OK if rep.passed else MISMATCH


def cmd_proptest(args) -> int:
    from .proptest import run_suite
    window = int(args.window.split(",")[0])
    rep = run_suite(args.suite, args.ring, args.trials, args.seed, window, args.margin)
    for r in rep.results:
        if r.failures:
            _note(f"FAIL {r.suite}/{r.name}: {r.failures}/{r.trials}")
            if r.counterexample is not None:
                for k, v in r.counterexample.items():
                    _note(f"    {k} = {v}")
    _note(f"{len(rep.results)} properties, {rep.trials} trials each: "
          f"{'passed' if rep.passed else 'FAILED'} in {rep.elapsed:.2f}s")
    _emit(rep.to_json())
    return OK if rep.passed else MISMATCH


def cmd_list(args) -> int:
    from .demos import DEMOS
    from .proptest import SUITES
    from .scenario import shipped_scenarios
    listing = {
        "checks": {c.name: {"params": list(c.params), "summary": c.summary} for c in CHECKS.values()},
        "demos": {name: summary for name, (summary, _) in DEMOS.items()},
        "scenarios": sorted(shipped_scenarios()),
        "suites": list(SUITES) + ["all"],
    }
    if args.json:
        _emit(listing)
        return OK
    print("checks:")
    for name, info in listing["checks"].items():
        print(f"  {name:20s} {' '.join(p + '=' for p in info['params']):18s} {info['summary']}")
    print("demos:")
    for name, summary in listing["demos"].items():
        print(f"  {name:20s} {summary}")
    print("scenarios: " + ", ".join(listing["scenarios"]))
    print("suites:    " + ", ".join(listing["suites"]))
    return OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", default=DEFAULT_RING, help="ring descriptor, e.g. QPoly{1,2} or ZPoly{2,1}")
    common.add_argument("--window", default="4", help="search bound, '6' or '6,4' for two generators")
    common.add_argument("--margin", type=int, default=3, help="stabilization margin")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=100)
    common.add_argument("--json", action="store_true", help="machine-readable output for eval and list")
    common.add_argument("--parallel", action="store_true", help="run scenario checks in parallel")

    p = argparse.ArgumentParser(prog="cohnjordan", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    e = sub.add_parser("eval", parents=[common], help="normal form of an expression in A")
    e.add_argument("expression")
    e.set_defaults(fn=cmd_eval)

    c = sub.add_parser("check", parents=[common], help="run one check or a scenario file")
    c.add_argument("name", nargs="?")
    c.add_argument("params", nargs="*", metavar="key=value")
    c.add_argument("--scenario", metavar="FILE", help="a .cjx file or the name of a shipped scenario")
    c.add_argument("--expect", help="Member, NonMember, Unknown or decisive")
    c.add_argument("--no-model", action="store_true", help="do not consult registered models")
    c.set_defaults(fn=cmd_check)

    d = sub.add_parser("demo", parents=[common], help="run a canned demonstration")
    d.add_argument("name")
    d.set_defaults(fn=cmd_demo)

    t = sub.add_parser("proptest", parents=[common], help="randomized property suites")
    t.add_argument("suite", nargs="?", default="all")
    t.set_defaults(fn=cmd_proptest)

    ls = sub.add_parser("list", parents=[common], help="list checks, demos, scenarios and suites")
    ls.set_defaults(fn=cmd_list)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, CheckError, ValueError, KeyError, FileNotFoundError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        _note(f"error: {msg}")
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
