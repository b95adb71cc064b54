import random
from fractions import Fraction

import pytest
import sympy as sp

from cohnjordan.extension import Extension
from cohnjordan.models import (DyadicPuiseux, DyadicRatFunc, HalfIntPoly, SkewPoly, SkewRing,
                               halfint_membership, iso_from_model, iso_to_model, model_for,
                               puiseux_divides, puiseux_gcd, puiseux_level, puiseux_quotient,
                               skew_in_R, skew_mul, skew_right_divmod)
from cohnjordan.models.skew import random_skew
from cohnjordan.contract import NoModelRegistered
from cohnjordan.parsing import parse_puiseux, parse_skew
from cohnjordan.proptest import random_ext, random_puiseux
from cohnjordan.rings import QPolyRing, ZPolyRing
from oracles import (X, halfint_contains, puiseux_expr, puiseux_gcd_expr, ratfunc_expr, same,
                     skew_mul_expr)

P = parse_puiseux
Q = Extension(QPolyRing([(1, 2)]))
Z = Extension(ZPolyRing([(2, 1)]))


def test_puiseux_examples():
    assert P("x^(1/2)") * P("x^(1/2)") == P("x")
    assert puiseux_level(P("x^(3/4) + x")) == 2
    assert P("(x^(1/2) - 1)*(x^(1/2) + 1)") == P("x - 1")


def test_puiseux_gcd_examples():
    assert puiseux_gcd(P("x - 1"), P("x^(1/2) - 1")) == P("x^(1/2) - 1")
    assert puiseux_gcd(P("2*x + 2"), DyadicPuiseux()) == P("x + 1")
    assert puiseux_gcd(P("x"), P("x^(1/2)")) == P("x^(1/2)")


def test_puiseux_divides_examples():
    assert puiseux_divides(P("x^(1/2)"), P("x"))
    assert not puiseux_divides(P("x + 1"), P("x^(1/2) + 1"))
    assert puiseux_divides(P("x^(1/2) + 1"), P("x - 1"))
    assert puiseux_quotient(P("x^(1/2) + 1"), P("x - 1")) == P("x^(1/2) - 1")


def test_puiseux_gcd_against_sympy():
    rng = random.Random(5)
    for _ in range(40):
        a, b = random_puiseux(rng), random_puiseux(rng)
        if not a and not b:
            continue
        assert same(puiseux_expr(puiseux_gcd(a, b)), puiseux_gcd_expr(a, b))


def test_halfint_examples():
    assert halfint_membership([0, Fraction(1, 2)])
    assert not halfint_membership([Fraction(1, 2)])
    assert halfint_membership([5, Fraction(1, 8)])
    with pytest.raises(ValueError):
        HalfIntPoly([Fraction(1, 2)])


def test_halfint_against_oracle():
    rng = random.Random(2)
    for _ in range(200):
        cs = [Fraction(rng.randint(-9, 9), rng.choice([1, 2, 3, 4, 6, 8])) for _ in range(rng.randint(1, 4))]
        assert halfint_membership(cs) == halfint_contains(cs)


def test_skew_examples():
    t = SkewPoly.t()
    root = parse_skew("x^(1/2)")
    assert skew_mul(t, root) == parse_skew("x*t")
    assert skew_mul(t, parse_skew("x")) == parse_skew("x^2*t")
    xt = parse_skew("x*t")
    assert skew_mul(xt, xt) == parse_skew("x^3*t^2")
    assert skew_in_R(xt)
    assert not skew_in_R(root)
    assert skew_in_R(parse_skew("1/(x + 1)*t^2"))


def test_skew_mul_against_sympy():
    rng = random.Random(9)
    for _ in range(15):
        p, q = random_skew(rng, 2, 1, 2), random_skew(rng, 2, 1, 2)
        got = skew_mul(p, q)
        want = skew_mul_expr(p, q)
        while want and sp.simplify(want[-1]) == 0:
            want.pop()
        assert len(got.coeffs) == len(want)
        for a, b in zip(got.coeffs, want):
            assert same(ratfunc_expr(a), b)


def test_skew_right_division():
    rng = random.Random(4)
    R = SkewRing()
    for _ in range(20):
        a, c = random_skew(rng), R.random_element(rng)
        if not c:
            continue
        quo, rem = skew_right_divmod(skew_mul(a, c), c)
        assert quo == a and not rem


def test_iso_examples():
    assert iso_to_model(Q.parse("inv(1)[x]")) == P("x^(1/2)")
    assert iso_to_model(Q.embed(QPolyRing([(1, 2)]).parse("x + 3"))) == P("x + 3")
    assert iso_to_model(Z.parse("inv(1)[x]")) == HalfIntPoly([0, Fraction(1, 2)])
    assert str(iso_to_model(Z.parse("inv(1)[x]"))) == "1/2*x"


def test_no_model_for_other_actions():
    with pytest.raises(NoModelRegistered):
        model_for(Extension(QPolyRing([(2, 1)])))


@pytest.mark.parametrize("ext", [Q, Z], ids=["puiseux", "halfint"])
def test_iso_intertwines(ext):
    m = model_for(ext)
    rng = random.Random(1)
    for _ in range(100):
        a, b = random_ext(ext, rng, 3), random_ext(ext, rng, 3)
        ma, mb = m.to_model(a), m.to_model(b)
        assert m.to_model(a + b) == ma + mb
        assert m.to_model(a * b) == ma * mb
        assert iso_from_model(ma, ext) == a
