"""Declarative scenario files (``.cjx``) and their reports.

A scenario is an INI-style file::

    [scenario]
    name = bezout
    ring = QPoly{c=1,d=2}
    window = 6
    seed = 7

    [check.1]
    op = principal
    I = ideal{A}[x - 1; inv(1)[x] - 1]
    expect = Member

Every key of a check section other than ``op``, ``expect`` and ``window``
is passed to the check as an argument.
"""

from __future__ import annotations

import configparser
import platform
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional

from .checks import run_check
from .extension import Extension
from .ideals import SearchWindow
from .monoid import parse_monoid
from .rings import parse_ring

_RESERVED = {"op", "expect", "window"}


@dataclass
class CheckSpec:
    index: int
    op: str
    args: dict
    expect: Optional[str] = None
    window: Optional[str] = None


@dataclass
class Scenario:
    name: str
    ring: str
    window: str = "4"
    margin: int = 3
    seed: int = 0
    trials: int = 0
    description: str = ""
    checks: list = field(default_factory=list)

    @classmethod
    def from_text(cls, text: str, source: str = "<text>") -> "Scenario":
        cp = configparser.ConfigParser(interpolation=None)
        cp.optionxform = str  # keep argument names such as I and M
        cp.read_string(text, source=source)
        if not cp.has_section("scenario"):
            raise ValueError(f"{source}: missing [scenario] section")
        head = cp["scenario"]
        sc = cls(name=head.get("name", Path(source).stem), ring=head["ring"],
                 window=head.get("window", "4"), margin=head.getint("margin", 3),
                 seed=head.getint("seed", 0), trials=head.getint("trials", 0),
                 description=head.get("description", ""))
        for section in cp.sections():
            if not section.startswith("check."):
                continue
            body = cp[section]
            try:
                index = int(section.split(".", 1)[1])
            except ValueError:
                raise ValueError(f"{source}: bad section name [{section}]") from None
            args = {k: v for k, v in body.items() if k not in _RESERVED}
            sc.checks.append(CheckSpec(index, body["op"], args, body.get("expect"), body.get("window")))
        sc.checks.sort(key=lambda c: c.index)
        return sc

    @classmethod
    def load(cls, path) -> "Scenario":
        path = Path(path)
        return cls.from_text(path.read_text(), str(path))

    def run(self, parallel: bool = False, use_model: bool = True) -> "Report":
        jobs = [(self.ring, c.window or self.window, self.margin, self.seed, c.op, c.args, use_model)
                for c in self.checks]
        if parallel and len(jobs) > 1:
            with ProcessPoolExecutor() as pool:
                results = list(pool.map(_run_job, jobs))
        else:
            results = [_run_job(j) for j in jobs]
        report = Report(self.name, self.ring, self.seed)
        for chk, (outcome, rec) in zip(self.checks, results):
            rec["index"] = chk.index
            rec["expect"] = chk.expect
            rec["passed"] = chk.expect is None or _matches(outcome, chk.expect)
            report.records.append(rec)
        return report


def _matches(outcome: str, expect: str) -> bool:
    expect = expect.strip().lower()
    if expect == "decisive":
        return outcome != "Unknown"
    return outcome.lower() == expect


def _run_job(job):
    ring_text, window, margin, seed, op, args, use_model = job
    ext = Extension(parse_ring(ring_text))
    w = SearchWindow(parse_monoid(str(window), ext.k), margin)
    verdict, rec = run_check(ext, op, args, w, seed, use_model)
    return verdict.outcome.value, rec


def environment_stamp() -> dict:
    from . import __version__
    return {"package": f"cohnjordan {__version__}",
            "python": platform.python_version(),
            "implementation": sys.implementation.name}


@dataclass
class Report:
    name: str
    ring: str
    seed: int
    records: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.get("passed", True) for r in self.records)

    def to_json(self) -> dict:
        return {"scenario": self.name, "ring": self.ring, "seed": self.seed,
                "passed": self.passed, "environment": environment_stamp(),
                "checks": self.records}


def shipped_scenarios() -> dict[str, Path]:
    """Scenario files bundled with the package, by stem."""
    root = resources.files("cohnjordan") / "scenarios"
    return {Path(p.name).stem: Path(str(p)) for p in root.iterdir() if p.name.endswith(".cjx")}


def find_scenario(name_or_path: str) -> Path:
    p = Path(name_or_path)
    if p.suffix == ".cjx" and p.exists():
        return p
    shipped = shipped_scenarios()
    if name_or_path in shipped:
        return shipped[name_or_path]
    raise FileNotFoundError(f"no scenario {name_or_path!r}; shipped: {', '.join(sorted(shipped))}")
