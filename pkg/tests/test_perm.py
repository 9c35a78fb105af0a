import math

import pytest
from hypothesis import given, strategies as st

from permcomm.errors import BadCycleNotation, DegreeMismatch
from permcomm.perm import Permutation, commutator, from_cycles, parse_cycles

from conftest import perms


def apply_then(x, y):
    # independent composition: point i goes to y(x(i))
    return tuple(y[x[i]] for i in range(len(x)))


def test_right_action_convention():
    a = parse_cycles("(1 2)", 3)
    b = parse_cycles("(2 3)", 3)
    # 1 -> 2 under a, then 2 -> 3 under b
    assert (a * b)[0] == 2
    assert str(a * b) == "(1 3 2)"
    assert str(b * a) == "(1 2 3)"


def test_commutator_convention():
    a = parse_cycles("(1 2)", 3)
    b = parse_cycles("(2 3)", 3)
    assert commutator(a, b) == a.inverse() * b.inverse() * a * b
    assert str(commutator(a, b)) == "(1 2 3)"


def test_parse_and_format():
    p = parse_cycles("(1 3 5)(2, 4)", 6)
    assert p.images == (3, 4, 5, 2, 1, 6)
    assert str(p) == "(1 3 5)(2 4)"
    assert parse_cycles("", 4).is_identity()
    assert parse_cycles("()", 4).is_identity()
    assert str(Permutation.identity(3)) == "()"
    assert from_cycles(5, (1, 2), (3, 4, 5)) == parse_cycles("(1 2)(3 4 5)", 5)
    assert Permutation.from_images([2, 3, 1]) == parse_cycles("(1 2 3)", 3)


@pytest.mark.parametrize("text", ["(1 2", "(1 1)", "(0 1)", "(1 9)", "(a b)", "x(1 2)", "(1 2)(2 3)"])
def test_bad_cycle_notation(text):
    with pytest.raises(BadCycleNotation):
        parse_cycles(text, 4)


def test_not_a_permutation():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        Permutation.identity(3) * Permutation.identity(4)


def test_order_and_cycles():
    p = parse_cycles("(1 2 3)(4 5)", 7)
    assert p.order() == 6
    assert p.cycle_count() == 4
    assert p.support() == [0, 1, 2, 3, 4]


@given(perms(7), perms(7))
def test_product_matches_independent_composition(x, y):
    assert tuple(x * y) == apply_then(x, y)


@given(perms(6), perms(6), perms(6))
def test_associative(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(perms(7))
def test_inverse_and_identity(x):
    e = Permutation.identity(7)
    assert x * x.inverse() == e == x.inverse() * x
    assert x * e == x == e * x


@given(perms(7), st.integers(-20, 20))
def test_power_matches_repeated_product(x, k):
    expect = Permutation.identity(7)
    step = x if k >= 0 else x.inverse()
    for _ in range(abs(k)):
        expect = expect * step
    assert x ** k == expect


@given(perms(8))
def test_order_is_least_period(x):
    n = x.order()
    assert (x ** n).is_identity()
    assert all(not (x ** d).is_identity() for d in range(1, n))
    assert n == math.lcm(1, *(len(c) for c in x.cycles()))


@given(perms(6), perms(6))
def test_conjugate_is_g_inverse_p_g(p, g):
    assert p.conjugate(g) == g.inverse() * p * g


@given(perms(6), perms(6))
def test_commutes_with(x, y):
    assert x.commutes_with(y) == (x * y == y * x)
    assert x.commutes_with(y) == commutator(x, y).is_identity()


@given(perms(9))
def test_format_parse_roundtrip(x):
    assert parse_cycles(str(x), 9) == x


@given(perms(8))
def test_cycle_count_includes_fixed_points(x):
    assert sum(len(c) for c in x.cycles()) + (x.cycle_count() - len(x.cycles())) == 8
