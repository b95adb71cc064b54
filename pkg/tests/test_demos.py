from cohnjordan.demos import DEMOS, run_demo


def test_all_demos_pass():
    for name in DEMOS:
        rep = run_demo(name)
        assert rep.passed, (name, rep.summary)
        assert rep.to_json()["demo"] == name


def test_skew_demo_counts():
    rep = run_demo("skew-ore", seed=3)
    pairs = [r for r in rep.records if r["check"] == "left-division"]
    assert len(pairs) == 100
    assert all(r["a_in_R"] for r in pairs if r["ac_in_R"])
