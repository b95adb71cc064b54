import json

import pytest

from cohnjordan.scenario import Scenario, find_scenario, shipped_scenarios

SHIPPED = sorted(shipped_scenarios())


def _strip(obj):
    if isinstance(obj, dict):
        return {k: _strip(v) for k, v in obj.items() if k != "elapsed"}
    if isinstance(obj, list):
        return [_strip(v) for v in obj]
    return obj


@pytest.mark.parametrize("name", SHIPPED)
def test_shipped_scenarios_pass(name):
    report = Scenario.load(find_scenario(name)).run()
    failed = [r for r in report.records if not r["passed"]]
    assert report.passed, failed


@pytest.mark.parametrize("name", ["bezout", "nonnoetherian"])
def test_reports_are_reproducible(name):
    sc = Scenario.load(find_scenario(name))
    one = json.dumps(_strip(sc.run().to_json()), sort_keys=True)
    two = json.dumps(_strip(sc.run().to_json()), sort_keys=True)
    par = json.dumps(_strip(sc.run(parallel=True).to_json()), sort_keys=True)
    assert one == two == par


def test_from_text_and_expectations():
    text = """
[scenario]
name = tiny
ring = QPoly{1,2}
window = 3

[check.2]
op = closure-member
r = 1
M = ideal{R}[x]
expect = decisive

[check.1]
op = is-closed
M = ideal{R}[x]
expect = NonMember
"""
    sc = Scenario.from_text(text)
    assert [c.index for c in sc.checks] == [1, 2]
    report = sc.run()
    assert [r["passed"] for r in report.records] == [False, True]
    assert not report.passed


def test_bad_files(tmp_path):
    with pytest.raises(ValueError):
        Scenario.from_text("[check.1]\nop = equal\n")
    with pytest.raises(ValueError):
        Scenario.from_text("[scenario]\nring = QPoly{1,2}\n[check.x]\nop = equal\n")
    with pytest.raises(FileNotFoundError):
        find_scenario("missing")
    p = tmp_path / "mine.cjx"
    p.write_text("[scenario]\nring = QPoly{1,2}\n[check.1]\nop = in-base\na = x\nexpect = Member\n")
    assert Scenario.load(find_scenario(str(p))).run().passed
