import json

import pytest

from cohnjordan.polys import QPoly
from cohnjordan.proptest import PROPERTIES, SUITES, run_suite, shrink


def test_every_suite_has_properties():
    assert {p.suite for p in PROPERTIES} == set(SUITES)


@pytest.mark.parametrize("ring", ["QPoly{c=1,d=2}", "ZPoly{c=2,d=1}", "QPoly{c=2,d=1}",
                                  "QPoly{c=1,d=2;c=1,d=3}", "ZPoly{c=-1,d=2}", "Skew{}"])
def test_all_suites_pass(ring):
    rep = run_suite("all", ring, trials=15, seed=4)
    assert rep.passed, [r.to_json() for r in rep.results if r.failures]


def test_deterministic():
    a = run_suite("ideals", "QPoly{c=1,d=2}", 10, 3).to_json()
    b = run_suite("ideals", "QPoly{c=1,d=2}", 10, 3).to_json()
    a.pop("elapsed"), b.pop("elapsed")
    assert json.dumps(a) == json.dumps(b)


def test_shrink_keeps_failure_and_reduces():
    case = {"p": QPoly([7, -9, 4, 3]), "window": 6}

    def fails(c):
        return c["p"].degree >= 1

    small = shrink(case, fails)
    assert fails(small)
    assert small["p"].degree == 1
    assert all(abs(c) <= 1 for c in small["p"].coeffs)
    assert small["window"] == 0


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")
