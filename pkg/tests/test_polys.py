from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from cohnjordan.polys import QPoly, ZPoly
from oracles import X, qpoly_expr

small = st.lists(st.integers(-6, 6), max_size=5)


def test_arithmetic_and_str():
    p = QPoly([1, 0, 1])
    assert str(p) == "x^2 + 1"
    assert p * QPoly([-1, 1]) == QPoly([-1, 1, -1, 1])
    assert str(QPoly([Fraction(1, 2), 0, -3])) == "-3*x^2 + 1/2"
    assert ZPoly([0, 2]).to_q() == QPoly([0, 2])


def test_zpoly_rejects_fractions():
    with pytest.raises((TypeError, ValueError)):
        ZPoly([Fraction(1, 2)])


@given(small, small)
def test_divmod_matches_sympy(a, b):
    pa, pb = QPoly(a), QPoly(b)
    if pb.is_zero():
        return
    q, r = pa.divmod(pb)
    sq, sr = sp.div(sp.Poly(qpoly_expr(pa), X, domain="QQ"), sp.Poly(qpoly_expr(pb), X, domain="QQ"))
    assert sp.expand(qpoly_expr(q) - sq.as_expr()) == 0
    assert sp.expand(qpoly_expr(r) - sr.as_expr()) == 0


@settings(max_examples=60)
@given(small, small)
def test_gcd_matches_sympy(a, b):
    pa, pb = QPoly(a), QPoly(b)
    g = pa.gcd(pb)
    ref = sp.gcd(sp.Poly(qpoly_expr(pa), X, domain="QQ"), sp.Poly(qpoly_expr(pb), X, domain="QQ"))
    if not ref.is_zero:
        ref = ref.monic()
    assert sp.expand(qpoly_expr(g) - ref.as_expr()) == 0


@given(small, small)
def test_xgcd_bezout(a, b):
    pa, pb = QPoly(a), QPoly(b)
    g, u, v = pa.xgcd(pb)
    assert u * pa + v * pb == g
