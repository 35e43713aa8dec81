import pytest
from hypothesis import given, strategies as st

from antipodes.lincomb import LinComb, linear_extend

keys = st.text(alphabet="abc", min_size=0, max_size=3)
combs = st.dictionaries(keys, st.integers(-9, 9), max_size=6).map(
    lambda d: LinComb(d.items())
)


def test_zero_and_term():
    assert not LinComb.zero()
    assert len(LinComb.zero()) == 0
    t = LinComb.term("x", 3)
    assert t.coefficient("x") == 3
    assert t.coefficient("y") == 0


def test_zero_coefficients_dropped():
    v = LinComb([("a", 1), ("a", -1), ("b", 2)])
    assert v.support() == ["b"]
    assert len(v) == 1


def test_items_sorted():
    v = LinComb([("b", 1), ("a", 2), ("c", -1)])
    assert v.items() == [("a", 2), ("b", 1), ("c", -1)]


def test_arithmetic():
    v = LinComb([("a", 1), ("b", 2)])
    w = LinComb([("b", -2), ("c", 5)])
    assert (v + w).items() == [("a", 1), ("c", 5)]
    assert (v - v) == LinComb.zero()
    assert (-v).coefficient("b") == -2
    assert (3 * v).coefficient("b") == 6
    assert (v * 3) == (3 * v)


def test_map_keys_merges():
    v = LinComb([("ab", 1), ("ba", 1)])
    assert v.map_keys(lambda k: "".join(sorted(k))).items() == [("ab", 2)]


def test_linear_extend():
    v = LinComb([("a", 2), ("b", -1)])
    image = linear_extend(lambda k: LinComb.term(k.upper()), v)
    assert image.items() == [("A", 2), ("B", -1)]


@given(combs, combs)
def test_addition_commutes(v, w):
    assert v + w == w + v


@given(combs, combs, combs)
def test_addition_associates(u, v, w):
    assert (u + v) + w == u + (v + w)


@given(combs, st.integers(-9, 9), st.integers(-9, 9))
def test_scaling_distributes(v, a, b):
    assert (a + b) * v == a * v + b * v


@given(combs)
def test_no_zero_coefficients(v):
    assert all(c != 0 for _, c in v.items())


@given(combs)
def test_subtraction_inverts(v):
    assert v - v == LinComb.zero()
    assert v + (-v) == LinComb.zero()


def test_rejects_non_integer_scalars():
    v = LinComb.term("a")
    with pytest.raises(TypeError):
        v * 1.5
