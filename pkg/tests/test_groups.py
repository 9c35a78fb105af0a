import math

import pytest
from hypothesis import given

from permcomm.errors import DegreeMismatch, EnumerationCapExceeded, NotAMember
from permcomm.families import alternating, cyclic, dihedral, symmetric
from permcomm.groups import (GroupHandle, Limits, centralizer, centralizer_of, centre,
                             commutator_subgroup, conjugacy_classes, conjugation_orbit, core,
                             derived_subgroup, exponent, group_from_generators, intersection,
                             is_normal, join, normal_closure, normalizer, span,
                             subgroup_from_elements, subgroup_generated, trivial)
from permcomm.perm import Permutation, commutator, parse_cycles
from permcomm.schreier import StabChain

from conftest import perm_lists, perms


def brute_closure(gens, degree):
    # breadth-first on left and right products; slow but independent
    e = Permutation.identity(degree)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[x[i]] for i in range(degree))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return {Permutation(p) for p in seen}


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7])
def test_symmetric_and_alternating_orders(n):
    assert symmetric(n).order == math.factorial(n)
    if n >= 2:
        assert alternating(n).order == math.factorial(n) // 2


def test_chain_order_beyond_cap():
    S9 = symmetric(9, Limits(enumeration_cap=1000))
    assert S9.order == 362880
    assert S9.elements is None
    assert parse_cycles("(1 9)(2 3 4)", 9) in S9
    A9 = alternating(9, Limits(enumeration_cap=1000))
    assert parse_cycles("(1 9)", 9) not in A9
    with pytest.raises(EnumerationCapExceeded):
        S9.require_elements()


@given(perm_lists(6, 1, 3))
def test_closure_matches_brute_force(gens):
    G = group_from_generators(6, gens)
    expect = brute_closure(gens, 6)
    assert G.order == len(expect) == StabChain(6, gens).order
    assert set(G.require_elements()) == expect


@given(perm_lists(7, 1, 2), perms(7))
def test_chain_membership(gens, x):
    chain = StabChain(7, gens)
    assert chain.contains(x) == (x in brute_closure(gens, 7))


def test_generator_degree_checked():
    with pytest.raises(DegreeMismatch):
        GroupHandle(4, [Permutation.identity(3)])


def test_subgroup_generated_checks_membership():
    A4 = alternating(4)
    with pytest.raises(NotAMember):
        subgroup_generated(A4, [parse_cycles("(1 2)", 4)])
    H = subgroup_generated(A4, [parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)])
    assert H.order == 4 and H.index == 3


def test_subgroup_from_elements_rejects_non_subgroup():
    S3 = symmetric(3)
    with pytest.raises(ValueError):
        subgroup_from_elements(S3, [S3.identity, parse_cycles("(1 2)", 3), parse_cycles("(1 3)", 3)])


def test_span_generates_closure():
    S4 = symmetric(4)
    H = span(S4, [parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4)])
    assert H.order == 4


def _sub(G, gens):
    return subgroup_generated(G, gens)


@given(perm_lists(5, 1, 2), perms(5))
def test_centralizer_matches_filter(gens, y):
    S5 = symmetric(5)
    H = _sub(S5, gens)
    C = centralizer(H, y)
    assert set(C.require_elements()) == {x for x in H.require_elements() if x * y == y * x}
    # orbit-stabilizer
    assert H.order == C.order * len({y.conjugate(h) for h in H.require_elements()})
    assert len(conjugation_orbit(y, H)) == H.order // C.order


@given(perm_lists(5, 1, 2), perm_lists(5, 1, 2))
def test_intersection_and_normalizer(g1, g2):
    S5 = symmetric(5)
    H, K = _sub(S5, g1), _sub(S5, g2)
    I = intersection(S5, H, K)
    assert set(I.require_elements()) == set(H.require_elements()) & set(K.require_elements())
    N = normalizer(S5, H)
    hs = set(H.require_elements())
    assert set(N.require_elements()) == {g for g in S5 if {h.conjugate(g) for h in hs} == hs}
    assert is_normal(H, N)


@given(perm_lists(5, 1, 2))
def test_core_and_normal_closure(gens):
    S5 = symmetric(5)
    H = _sub(S5, gens)
    hs = set(H.require_elements())
    conj = [{h.conjugate(g) for h in hs} for g in S5]
    C = core(H, S5)
    assert set(C.require_elements()) == set.intersection(*conj)
    N = normal_closure(S5, H.generators)
    assert is_normal(N, S5) and H.issubgroup(N)
    assert N.order == len(brute_closure(set().union(*conj), 5))


def test_class_equation():
    for G in (symmetric(4), alternating(5), dihedral(10), symmetric(5)):
        classes = conjugacy_classes(G)
        assert sum(c.size for c in classes) == G.order
        for c in classes:
            assert G.order % c.size == 0
            assert c.representative in c.members


@pytest.mark.parametrize("G,k", [(symmetric(3), 3), (symmetric(4), 5), (alternating(5), 5),
                                 (symmetric(5), 7), (dihedral(8), 5), (cyclic(6), 6)])
def test_class_numbers(G, k):
    assert len(conjugacy_classes(G)) == k


def test_centre_and_derived():
    assert centre(dihedral(8)).order == 2
    assert centre(symmetric(4)).order == 1
    assert derived_subgroup(symmetric(4)).order == 12
    assert derived_subgroup(alternating(4)).order == 4
    assert derived_subgroup(alternating(5)).order == 60


@given(perm_lists(4, 1, 2), perm_lists(4, 1, 2))
def test_commutator_subgroup_oracle(g1, g2):
    S4 = symmetric(4)
    H, K = _sub(S4, g1), _sub(S4, g2)
    comms = {commutator(h, k) for h in H for k in K}
    assert set(commutator_subgroup(H, K, parent=S4).require_elements()) == brute_closure(comms, 4)


def test_centralizer_of_and_join():
    S4 = symmetric(4)
    V = subgroup_generated(S4, [parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)])
    assert centralizer_of(S4, V) == V
    assert join(S4, V, subgroup_generated(S4, [parse_cycles("(1 2 3)", 4)])).order == 12
    assert trivial(S4).order == 1


def test_exponent():
    assert exponent(symmetric(4)) == 12
    assert exponent(alternating(5)) == 30
    assert exponent(cyclic(8)) == 8
