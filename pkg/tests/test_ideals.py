import random

import pytest

from cohnjordan import ideals
from cohnjordan.extension import Extension
from cohnjordan.ideals import FinGenLeftIdeal, SearchWindow, WindowedFamily
from cohnjordan.models import iso_to_model, model_for
from cohnjordan.monoid import MonoidElement
from cohnjordan.parsing import parse_ideal, parse_puiseux
from cohnjordan.polys import QPoly, ZPoly
from cohnjordan.proptest import random_ext, random_ideal, random_r_ideal, sample_member
from cohnjordan.rings import QPolyRing, ZPolyRing
from oracles import q_ideal_contains, qpoly_expr

Q = Extension(QPolyRing([(1, 2)]))
Z = Extension(ZPolyRing([(2, 1)]))
W4 = SearchWindow.of(4)
W6 = SearchWindow.of(6)


def I(ext, text):
    return parse_ideal(ext, text)


def M(*e):
    return MonoidElement(e)


def test_ext_ideal_member_examples():
    assert ideals.ext_ideal_member(Q.parse("inv(1)[x]"), I(Q, "ideal{A}[x]"), W4).is_non_member
    v = ideals.ext_ideal_member(Q.parse("x^2 + x"), I(Q, "ideal{A}[x]"), W4)
    assert v.is_member and v.witness == M(0)
    assert ideals.ext_ideal_member(Q.parse("x"), I(Q, "ideal{A}[inv(1)[x]]"), W4).is_member


def test_gamma_member_examples():
    ring = Q.ring
    assert ideals.gamma_member(ring.parse("x"), I(Q, "ideal{A}[inv(1)[x]]"), M(0), W4).is_member
    for s in range(4):
        assert ideals.gamma_member(ring.one(), I(Q, "ideal{A}[x]"), M(s), W4).is_non_member
    assert ideals.gamma_member(ring.parse("x + 1"), I(Q, "ideal{A}[x + 1; inv(1)[x]]"), M(0), W4).is_member


def test_closure_member_examples():
    assert ideals.closure_member(Q.ring.parse("x"), I(Q, "ideal{R}[x]"), W4).is_member
    assert ideals.closure_member(Q.ring.one(), I(Q, "ideal{R}[x]"), W4).is_non_member
    v = ideals.closure_member(Z.ring.parse("2*x"), I(Z, "ideal{R}[4*x]"), W4)
    assert v.is_non_member


def test_closure_generators_examples():
    res = ideals.closure_generators(I(Q, "ideal{R}[x]"), W4)
    assert res.decisive and res.gens == [QPoly.x()]
    res = ideals.closure_generators(I(Q, "ideal{R}[x^2; x^3]"), W4)
    assert res.decisive and res.gens == [QPoly([0, 0, 1])]
    res = ideals.closure_generators(I(Q, "ideal{R}[1]"), W4)
    assert res.gens == [QPoly([1])]


def test_zpoly_closure_gains_x_squared():
    # A*2x meets Z[x] in (2x, x^2): x^2 = 2x * (x/2) with x/2 in A
    res = ideals.closure_generators(I(Z, "ideal{R}[2*x]"), W4)
    assert res.decisive
    assert ideals.same_ideal(Z.ring, res.gens, [ZPoly([0, 2]), ZPoly([0, 0, 1])])


def test_is_closed_examples():
    assert ideals.is_closed(I(Q, "ideal{R}[x]"), W4).is_member
    assert ideals.is_closed(FinGenLeftIdeal(Q, "R", []), W4).is_member
    assert ideals.is_closed(I(Z, "ideal{R}[x]"), W4).is_member
    # (2x) is not closed over Z[x] with x -> 2x: x^2 lies in the closure
    assert ideals.is_closed(I(Z, "ideal{R}[2*x]"), W4).is_non_member


def test_admissible_examples():
    fam = ideals.gamma_family(I(Q, "ideal{A}[x - 1; inv(1)[x]]"), W4)
    assert ideals.family_admissible_check(fam).is_member
    assert ideals.admissible_check(I(Q, "ideal{A}[inv(2)[x + 1]]"), W4, 10, 0).is_member
    bad = WindowedFamily.from_lists(Q, {M(0): [QPoly.x()], M(1): [QPoly([1])], M(2): [QPoly([1])]})
    assert ideals.family_admissible_check(bad).is_non_member
    assert ideals.admissible_check(I(Q, "ideal{A}[x]"), SearchWindow.of(0), 5, 0).is_member


def test_stability_examples():
    v = ideals.stability_check(I(Q, "ideal{A}[inv(1)[x]]"), W4)
    assert v.is_member and v.witness == M(1)
    v = ideals.stability_check(I(Q, "ideal{A}[1]"), W4)
    assert v.is_member and v.witness == M(0)


def test_principal_examples():
    v = ideals.principal_test(I(Q, "ideal{A}[x - 1; inv(1)[x] - 1]"), W4)
    assert v.is_member and iso_to_model(v.witness) == parse_puiseux("x^(1/2) - 1")
    v = ideals.principal_test(I(Q, "ideal{A}[x]"), W4)
    assert v.is_member and v.witness == Q.parse("x")


def test_principal_over_zpoly_is_generated_by_two():
    # A*2 + A*x = A*2 because x = 2 * (x/2) and x/2 lies in A
    v = ideals.principal_test(I(Z, "ideal{A}[2; x]"), W4)
    assert v.is_member and v.witness == Z.parse("2")
    assert ideals.principal_test(I(Z, "ideal{A}[2; x]"), W4, use_model=False).is_member


def test_chain_examples():
    rep = ideals.ascending_chain_demo(1)
    assert rep.steps[0]["inclusion"] == "Member" and rep.steps[0]["strict"] == "NonMember"
    rep = ideals.ascending_chain_demo(10)
    assert rep.certified and len(rep.steps) == 10
    assert ideals.ascending_chain_demo(0).steps == []


def test_member_and_nonmember_against_model():
    rng = random.Random(8)
    for ext in (Q, Z):
        m = model_for(ext)
        for _ in range(40):
            J = random_ideal(ext, rng, 2)
            a = sample_member(ext, J, rng) if rng.random() < 0.5 else random_ext(ext, rng)
            v = ideals.ext_ideal_member(a, J, W4, use_model=False)
            truth = m.ideal_member(m.to_model(a), [m.to_model(g) for g in J.gens])
            if v.decisive and truth is not None:
                assert v.is_member == truth


def test_closure_against_model_contraction():
    rng = random.Random(12)
    for _ in range(30):
        Mi = random_r_ideal(Q, rng, 2)
        res = ideals.closure_generators(Mi, W4)
        ref = model_for(Q).contract([model_for(Q).to_model(Q.embed(g)) for g in Mi.gens])
        assert res.decisive
        ref_exprs = [qpoly_expr(g) for g in ref]
        for g in res.gens:
            assert q_ideal_contains(qpoly_expr(g), ref_exprs)
        for g in ref:
            assert q_ideal_contains(qpoly_expr(g), [qpoly_expr(h) for h in res.gens])


def test_record_shape():
    v = ideals.closure_member(Q.ring.one(), I(Q, "ideal{R}[x]"), W4)
    rec = ideals.record("closure-member", {"r": "1"}, v, W4.bound, 0.01)
    assert set(rec) == {"operation", "inputs", "verdict", "witness", "reason", "window", "elapsed"}
    assert rec["verdict"] == "NonMember"


def test_rank_two_window():
    ext = Extension(QPolyRing([(1, 2), (1, 3)]))
    w = SearchWindow.of("2,2", 2)
    assert ideals.ext_ideal_member(ext.parse("x"), I(ext, "ideal{A}[inv(1,1)[x]]"), w).is_member
    assert ideals.stability_check(I(ext, "ideal{A}[inv(1,0)[x]]"), w).is_member
