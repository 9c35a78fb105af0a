from fractions import Fraction

import pytest
from hypothesis import given, settings

from permcomm.commprob import (AUDIT, centralizer_sum, commuting_pairs, pr, pr_all_sylows,
                               pr_centralizer, pr_hall_hypothesis, pr_pairs, pr_product, pr_star)
from permcomm.corpus import group_by_name
from permcomm.errors import DegreeMismatch, NotSoluble
from permcomm.families import alternating, cyclic, direct_product, symmetric, wreath_product
from permcomm.groups import conjugacy_classes, subgroup_generated, trivial
from permcomm.structure import fitting, gamma_infinity, is_nilpotent
from permcomm.sylow import sylow

from conftest import perm_lists

# Pr(C_p^5, Q) for Q a Sylow subgroup of S5 permuting coordinates, worked out by
# hand from the cycle types of Q: D8, C3, C5 on five points.
#   D8: 1 identity (5 cycles), 3 of type 2+2 (3), 2 four-cycles (2), 2 transpositions (4)
#   C3: 1 identity, 2 three-cycles (3 cycles)
#   C5: 1 identity, 4 five-cycles (1 cycle)
def hand_oracle(p, q):
    if q == 2:
        s, n = p ** 5 + 3 * p ** 3 + 2 * p ** 2 + 2 * p ** 4, 8
    elif q == 3:
        s, n = p ** 5 + 2 * p ** 3, 3
    else:
        s, n = p ** 5 + 4 * p, 5
    return Fraction(s, n * p ** 5)


FROZEN = {
    (7, 2): Fraction(2842, 16807),
    (7, 3): Fraction(17, 49),
    (7, 5): Fraction(481, 2401),
    (11, 2): Fraction(201, 1331),
    (11, 3): Fraction(41, 121),
    (11, 5): Fraction(2929, 14641),
}


def test_frozen_values_match_hand_oracle():
    for (p, q), v in FROZEN.items():
        assert hand_oracle(p, q) == v
    assert FROZEN[(7, 2)] == Fraction(22736, 134456)


def loop_count(X, Y):
    return sum(1 for x in X for y in Y if x * y == y * x)


@pytest.mark.parametrize("name,k", [("S3", 3), ("D8", 5), ("Q8", 5), ("A4", 4), ("S4", 5),
                                    ("A5", 5), ("S5", 7), ("C12", 12), ("D10", 4)])
def test_pr_gg_is_class_number_ratio(name, k, corpus):
    G = group_by_name(name, corpus)
    assert len(conjugacy_classes(G)) == k
    assert pr(G, G) == Fraction(k, G.order)


def test_abelian_gives_one():
    C = cyclic(12)
    assert pr(C, C) == 1
    assert commuting_pairs(C, C) == 144


def test_numpy_route_on_large_pair_sets():
    S6 = symmetric(6)
    # 518400 pairs takes the vectorised branch
    assert pr_pairs(S6, S6) == Fraction(11, 720)
    assert pr_centralizer(S6, S6) == Fraction(11, 720)
    A6 = alternating(6)
    assert pr_pairs(A6, S6) == pr_centralizer(A6, S6)


@settings(max_examples=40)
@given(perm_lists(5, 1, 2), perm_lists(5, 1, 2))
def test_routes_agree_with_loop(g1, g2):
    S5 = symmetric(5)
    X, Y = subgroup_generated(S5, g1), subgroup_generated(S5, g2)
    n = loop_count(X, Y)
    assert commuting_pairs(X, Y) == n
    assert centralizer_sum(X, Y) == n
    assert pr(X, Y) == pr(Y, X) == Fraction(n, X.order * Y.order)


@settings(max_examples=30)
@given(perm_lists(5, 1, 2), perm_lists(5, 1, 2))
def test_product_multiplicative(g1, g2):
    S5 = symmetric(5)
    X, Y = subgroup_generated(S5, g1), subgroup_generated(S5, g2)
    S3 = symmetric(3)
    dp = direct_product([S5, S3])
    A = dp.product_subgroup([X, S3])
    B = dp.product_subgroup([Y, sylow(S3, 3)])
    assert pr(A, B) == pr_product([X, S3], [Y, sylow(S3, 3)]) == pr(X, Y) * pr(S3, sylow(S3, 3))


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        pr(symmetric(3), symmetric(4))


def test_wreath_base_against_top_sylows():
    for p in (7, 11):
        W = wreath_product(p, symmetric(5))
        for q in (2, 3, 5):
            Q = W.top_subgroup(sylow(symmetric(5), q))
            assert pr(W.base, Q) == FROZEN[(p, q)]


@pytest.mark.parametrize("name,value", [("S3", Fraction(2, 3)), ("S4", Fraction(5, 12)),
                                        ("A5", Fraction(2, 5)), ("S6", Fraction(2, 9)),
                                        ("A4", Fraction(1, 2)), ("D8", Fraction(1)),
                                        ("C12", Fraction(1))])
def test_pr_star_values(name, value):
    G = group_by_name(name)
    rep = pr_star(G, G)
    assert rep.value == value
    assert not rep.lower_bound_only
    assert (value == 1) == is_nilpotent(G)


def test_pr_star_vacuous_pair_set():
    C8 = cyclic(8)
    rep = pr_star(C8, C8)
    assert rep.value == 1 and rep.pairs == []
    rep = pr_star(trivial(C8), C8, mode="witness")
    assert rep.value == 1 and not rep.lower_bound_only


def test_pr_star_witness_is_lower_bound():
    G = symmetric(4)
    exact = pr_star(G, G)
    wit = pr_star(G, G, mode="witness")
    assert wit.lower_bound_only
    assert wit.value <= exact.value
    j = exact.to_json()
    assert j["value"] == {"num": "5", "den": "12"}
    assert {(r["p"], r["q"]) for r in j["pairs"]} == {(2, 3), (3, 2)}


def test_pr_star_rejects_bad_mode():
    with pytest.raises(ValueError):
        pr_star(symmetric(3), symmetric(3), mode="fast")


def test_pr_star_of_gamma_infinity():
    for name in ("S4", "D6xD10", "A5xC2", "C3wrS3"):
        G = group_by_name(name)
        assert (pr_star(gamma_infinity(G), G).value == 1) == is_nilpotent(G)


def test_hall_hypothesis_values():
    G = group_by_name("D6xD10")
    T = fitting(G)
    assert pr_hall_hypothesis(T, G, "hall-in-group") >= Fraction(1, 2)
    assert pr_all_sylows(T, G) == min(pr(sylow(T, p), G) for p in (3, 5))
    with pytest.raises(NotSoluble):
        pr_hall_hypothesis(alternating(5), alternating(5), "hall-in-subgroup")
    with pytest.raises(ValueError):
        pr_hall_hypothesis(T, G, "other")


def test_audit_counts_each_pr():
    before = AUDIT.instances
    pr(symmetric(3), symmetric(3))
    assert AUDIT.instances == before + 1
    assert not AUDIT.mismatches
