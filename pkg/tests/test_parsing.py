import pytest

from cohnjordan.extension import Extension
from cohnjordan.parsing import ParseError, parse_ideal, parse_puiseux, parse_qpoly, parse_skew, split_top_level
from cohnjordan.rings import QPolyRing, ZPolyRing

Q = Extension(QPolyRing([(1, 2)]))
Z = Extension(ZPolyRing([(2, 1)]))


def test_qpoly_and_puiseux():
    assert str(parse_qpoly("(x + 1)^2")) == "x^2 + 2*x + 1"
    assert str(parse_puiseux("x^(1/2) * x^(1/2)")) == "x"
    assert str(parse_puiseux("x^(3/4) + x")) == "x + x^(3/4)"


def test_skew_text():
    assert str(parse_skew("t * x^(1/2)")) == "x*t"


def test_zpoly_rejects_fraction_in_base():
    with pytest.raises((ParseError, ValueError)):
        Z.ring.parse("x/2")


def test_error_position():
    with pytest.raises(ParseError) as info:
        Q.parse("inv(1)[x + ]")
    assert info.value.pos == 11
    assert "^" in str(info.value)


def test_split_respects_brackets():
    assert split_top_level("a; inv(1)[x; y]; b") == ["a", "inv(1)[x; y]", "b"]


def test_parse_ideal():
    I = parse_ideal(Q, "ideal{A}[x - 1; inv(1)[x] - 1]")
    assert I.ambient == "A" and len(I.gens) == 2
    M = parse_ideal(Q, "ideal{R}[x^2; x^3]")
    assert M.ambient == "R"
    with pytest.raises((ParseError, ValueError)):
        parse_ideal(Q, "ideal{R}[inv(1)[x]]")
    with pytest.raises((ParseError, ValueError)):
        parse_ideal(Q, "ideal{B}[x]")
