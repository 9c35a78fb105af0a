import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from permcomm import verify
from permcomm.commprob import pr
from permcomm.corpus import group_by_name
from permcomm.errors import PreconditionNotMet
from permcomm.families import cyclic, direct_product, symmetric
from permcomm.structure import fitting, gamma_infinity
from permcomm.sylow import sylow
from permcomm.verify import (FAIL, PASS, REPORT, SKIPPED, check_bounded_index_witness,
                             check_centralizer_facts, check_coprime_action,
                             check_large_prime_commuting, check_nilpotency_equivalences,
                             check_pr_monotonicity, check_prstar_monotonicity, check_structure,
                             coprime_section_quantities, corpus_checks, dashboard, example31,
                             example52, exceeds_threshold, fixed_point_pr, parse_theorem,
                             summarize, within_threshold)


@given(st.integers(1, 10 ** 6), st.integers(1, 4), st.integers(1, 6))
def test_threshold_is_exact(n, a, b):
    if a > b:
        a, b = b, a
    eps = Fraction(a, b)
    x = Fraction(2 * b, a)
    # n > x^(6b/a)  iff  n^a > x^(6b)
    assert exceeds_threshold(n, eps) == (Fraction(n) ** a > x ** (6 * b))
    assert within_threshold(n, eps) != exceeds_threshold(n, eps)


def test_threshold_edges():
    assert not exceeds_threshold(64, Fraction(1))
    assert exceeds_threshold(65, Fraction(1))
    # eps = 1/2 gives 4^12
    assert not exceeds_threshold(4 ** 12, Fraction(1, 2))
    assert exceeds_threshold(4 ** 12 + 1, Fraction(1, 2))


def test_coprime_action_on_s4():
    S4 = symmetric(4)
    V = fitting(S4)
    r = check_coprime_action(S4, sylow(S4, 3), V, random.Random(1))
    assert r.status == PASS
    assert r.details["item3"] == {"product": 4, "intersection": 1}
    assert check_coprime_action(S4, sylow(S4, 2), V).status == SKIPPED
    with pytest.raises(PreconditionNotMet):
        check_coprime_action(S4, sylow(S4, 3), sylow(S4, 2))


def test_pr_monotonicity_single():
    G = group_by_name("S4")
    H, K = sylow(G, 2), G
    H0 = sylow(H, 2)
    dp = direct_product([cyclic(3), symmetric(3)])
    r = check_pr_monotonicity(G, H, K, fitting(G), H0,
                              (dp, (cyclic(3), cyclic(3)), (symmetric(3), sylow(symmetric(3), 2))))
    assert r.status == PASS
    assert r.details["prProduct"] == r.details["prFactors"]


def test_prstar_monotonicity_single():
    G = symmetric(4)
    H = G
    K = gamma_infinity(G)
    r = check_prstar_monotonicity(G, H, K, G, fitting(G))
    assert r.status == PASS


def test_bounded_index_witness():
    G = symmetric(4)
    r = check_bounded_index_witness(G, G)
    assert r.status == PASS
    assert r.details["item3"]["status"] == REPORT
    # eps = 5/24, so 2/eps - 1 = 43/5
    assert r.details["bound1"] == {"num": "43", "den": "5"}


def test_large_prime_commuting():
    dp = direct_product([cyclic(67), cyclic(2)])
    G = dp.group
    r = check_large_prime_commuting(sylow(G, 67), sylow(G, 2))
    assert r.status == PASS
    assert r.details["part1"] is True
    S4 = symmetric(4)
    r = check_large_prime_commuting(sylow(S4, 2), sylow(S4, 3))
    assert r.status == SKIPPED and r.reason == "hypothesis-not-met"


@pytest.mark.parametrize("name", ["S4", "D8", "A5", "C3wrS3", "Q8", "SL(2,5)"])
def test_group_checks_pass(name, corpus):
    G = group_by_name(name, corpus)
    for check in (check_nilpotency_equivalences, check_centralizer_facts, check_structure):
        assert check(G).status == PASS


def test_failures_carry_counterexample(monkeypatch):
    # a deliberately wrong Pr* makes the check fail and report the group
    fake = verify.pr_star(symmetric(3), symmetric(3))
    fake.value = Fraction(1)
    monkeypatch.setattr(verify, "pr_star", lambda X, Y: fake)
    r = check_nilpotency_equivalences(symmetric(3))
    assert r.status == FAIL and r.failed
    assert r.details["counterexample"]["G"] == [str(g) for g in symmetric(3).generators]
    assert r.to_json()["status"] == "fail"


def test_fixed_point_pr_matches_pr():
    from permcomm.families import wreath_product
    W = wreath_product(7, symmetric(5))
    Q2 = sylow(symmetric(5), 2)
    assert fixed_point_pr(7, Q2) == pr(W.base, W.top_subgroup(Q2)) == Fraction(2842, 16807)


def test_example31_small():
    for mode in ("ambient", "per-factor"):
        r = example31([3, 5], mode=mode)
        assert r.status == PASS
        assert r.details["indexF"] == 4
        assert r.details["orderT"] == 15
    with pytest.raises(PreconditionNotMet):
        example31([2, 3])
    with pytest.raises(PreconditionNotMet):
        example31([3, 3])


def test_example52_preconditions():
    with pytest.raises(PreconditionNotMet):
        example52([5, 7])
    with pytest.raises(ValueError):
        example52([7], scale="huge")


def test_example52_single_prime_model():
    r = example52([7], scale="model")
    assert r.status == PASS
    assert r.details["indexFstar2"] == 2
    assert r.details["perFactor"]["7,2"]["pr"] == {"num": "58", "den": "343"}


@pytest.mark.parametrize("text,out", [("T1.1", ("T1.1", None)), ("T1.3", ("T1.3", 1)),
                                      ("T1.3(2)", ("T1.3", 2)), ("L3.4", ("L3.4", None))])
def test_parse_theorem(text, out):
    assert parse_theorem(text) == out


@pytest.mark.parametrize("text", ["T2.1", "T1.1(2)", "", "T1.3(x)"])
def test_parse_theorem_rejects(text):
    with pytest.raises(ValueError):
        parse_theorem(text)


def test_dashboards():
    S4 = symmetric(4)
    d = dashboard(S4, "T1.1")
    assert d.hypothesis_epsilon == Fraction(5, 12)
    assert d.conclusions == {"indexF": 6, "s": 1, "expGmodF": 6, "indexF2": 2}
    assert d.extra["consistent"]
    d = dashboard(group_by_name("A5"), "T1.2")
    assert d.hypothesis_epsilon is None and "hypothesis" in d.skipped
    d = dashboard(S4, "T1.3(1)")
    assert d.conclusions["witnessR"]["class"] <= 2
    d = dashboard(S4, "L3.1")
    assert d.extra["holds"]
    for t in ("T1.4", "T1.5", "P3.2", "L3.4"):
        assert dashboard(group_by_name("D6xD10"), t).hypothesis_epsilon is not None


def test_coprime_section_quantities():
    S4 = symmetric(4)
    out = coprime_section_quantities(S4, fitting(S4), sylow(S4, 3))
    assert out["indexCHQ"] == 3
    with pytest.raises(PreconditionNotMet):
        coprime_section_quantities(S4, fitting(S4), sylow(S4, 2))


def test_run_tasks_order_independent_of_workers():
    small = [group_by_name(n) for n in ("S3", "S4", "D8", "A4", "D10")]
    a = corpus_checks(small, seed=3, samples=10, star_samples=5, witness_samples=5, workers=1)
    b = corpus_checks(small, seed=3, samples=10, star_samples=5, witness_samples=5, workers=4)
    assert [r.to_json() for r in a] == [r.to_json() for r in b]
    assert summarize(a)[FAIL] == 0
