import pytest
from hypothesis import given, strategies as st

from cohnjordan.monoid import (GroupElement, MonoidElement, as_group, compose, divide_exact, join,
                               ore_pair, parse_monoid)

M = MonoidElement


def test_compose_examples():
    assert compose(M((2,)), M((3,))) == M((5,))
    assert compose(M((0,)), M((7,))) == M((7,))
    assert compose(M((1, 2)), M((3, 0))) == M((4, 2))


def test_ore_pair_examples():
    assert ore_pair(M((3,)), M((5,))) == (M((2,)), M((0,)))
    assert ore_pair(M((4,)), M((4,))) == (M((0,)), M((0,)))
    t1, t2 = ore_pair(M((1, 4)), M((3, 2)))
    assert (t1, t2) == (M((2, 0)), M((0, 2)))
    assert compose(t1, M((1, 4))) == compose(t2, M((3, 2))) == M((3, 4))


def test_divide_exact_examples():
    assert divide_exact(M((5,)), M((2,))) == M((3,))
    assert divide_exact(M((1,)), M((2,))) is None
    assert divide_exact(M((2, 2)), M((2, 2))) == M((0, 0))


def test_negative_exponents_rejected():
    with pytest.raises(ValueError):
        M((-1,))


def test_rank_mismatch():
    with pytest.raises(ValueError):
        compose(M((1,)), M((1, 2)))


def test_parse_monoid():
    assert parse_monoid("3") == M((3,))
    assert parse_monoid("s=2") == M((2,))
    assert parse_monoid("1,2", 2) == M((1, 2))
    with pytest.raises(ValueError):
        parse_monoid("1,2", 1)
    with pytest.raises(ValueError):
        parse_monoid("a")


def test_group_parts():
    g = as_group((2, -3))
    assert isinstance(g, GroupElement)
    assert g.positive_part() == M((2, 0))
    assert g.negative_part() == M((0, 3))


elems = st.lists(st.integers(0, 20), min_size=2, max_size=2).map(lambda v: M(tuple(v)))


@given(elems, elems, elems)
def test_monoid_laws(a, b, c):
    assert compose(a, b) == compose(b, a)
    assert compose(compose(a, b), c) == compose(a, compose(b, c))
    assert divide_exact(compose(a, b), b) == a


@given(elems, elems)
def test_ore_pair_is_minimal_common_multiple(a, b):
    t1, t2 = ore_pair(a, b)
    common = compose(t1, a)
    assert common == compose(t2, b) == join(a, b)
    # any common multiple is a multiple of this one
    for extra in (M((0, 1)), M((3, 0))):
        bigger = compose(common, extra)
        assert divide_exact(bigger, common) == extra
