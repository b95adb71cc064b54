import json

import pytest

from cohnjordan.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def test_eval_examples(capsys):
    rc, out, _ = run(capsys, "eval", "--ring", "QPoly{1,2}", "inv(1)[x] * inv(1)[x]")
    assert rc == 0 and out.splitlines() == ["inv(0)[x]", "model (DyadicPuiseux): x"]
    rc, out, _ = run(capsys, "eval", "inv(1)[x^2]")
    assert out.splitlines()[0] == "inv(0)[x]"
    rc, out, _ = run(capsys, "eval", "--ring", "ZPoly{2,1}", "--json", "inv(1)[x]")
    data = json.loads(out)
    assert data["normal_form"] == "inv(1)[x]" and data["model"] == "1/2*x"


def test_eval_without_model(capsys):
    rc, out, _ = run(capsys, "eval", "--ring", "QPoly{2,1}", "inv(1)[2*x]")
    assert rc == 0 and out.strip() == "inv(0)[x]"


def test_parse_error_exit_code(capsys):
    rc, _, err = run(capsys, "eval", "inv(1)[x + ]")
    assert rc == 2 and "position" in err


def test_check_examples(capsys):
    rc, out, _ = run(capsys, "check", "closure-member", "r=1", "M=ideal{R}[x]", "--expect", "NonMember")
    assert rc == 0 and json.loads(out)["verdict"] == "NonMember"
    rc, out, _ = run(capsys, "check", "stability", "I=ideal{A}[inv(1)[x]]", "--window", "4")
    rec = json.loads(out)
    assert rec["verdict"] == "Member" and rec["witness"] == "1"
    rc, out, _ = run(capsys, "check", "is-closed", "M=ideal{R}[1]", "--expect", "Member")
    assert rc == 0


def test_check_mismatch_and_usage(capsys):
    rc, _, _ = run(capsys, "check", "is-closed", "M=ideal{R}[1]", "--expect", "NonMember")
    assert rc == 1
    rc, _, err = run(capsys, "check", "no-such-check")
    assert rc == 2 and "unknown check" in err
    rc, _, err = run(capsys, "check", "is-closed")
    assert rc == 2
    rc, _, err = run(capsys, "check", "is-closed", "M=ideal{R}[x")
    assert rc == 2
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_check_scenario(capsys):
    rc, out, err = run(capsys, "check", "--scenario", "skew")
    assert rc == 0 and json.loads(out)["passed"]
    assert "scenario skew: passed" in err


def test_demo(capsys):
    rc, out, err = run(capsys, "demo", "non-noetherian")
    data = json.loads(out)
    assert rc == 0 and data["passed"] and data["summary"] == "10 strict inclusions certified"
    assert err.count("I_") >= 10
    rc, _, _ = run(capsys, "demo", "nope")
    assert rc == 2


def test_proptest(capsys):
    rc, out, _ = run(capsys, "proptest", "monoid", "--trials", "25")
    data = json.loads(out)
    assert rc == 0 and data["passed"] and all(p["trials"] == 25 for p in data["properties"])
    rc, out, _ = run(capsys, "proptest", "--trials", "0")
    assert rc == 0 and json.loads(out)["properties"] == []
    rc, _, _ = run(capsys, "proptest", "bogus")
    assert rc == 2


def test_list(capsys):
    rc, out, _ = run(capsys, "list", "--json")
    data = json.loads(out)
    assert {"bezout", "nonnoetherian", "skew", "correspondence"} <= set(data["scenarios"])
    assert "principal" in data["checks"] and "skew-ore" in data["demos"]
