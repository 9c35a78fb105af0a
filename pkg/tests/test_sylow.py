import pytest
from hypothesis import given, strategies as st

from permcomm.corpus import group_by_name
from permcomm.errors import NotSoluble
from permcomm.families import alternating, symmetric
from permcomm.groups import is_normal
from permcomm.sylow import factorize, hall, hall_all, p_part, pi, pi_part, sylow, sylow_all


@given(st.integers(1, 10 ** 6))
def test_factorize_multiplies_back(n):
    f = factorize(n)
    prod = 1
    for p, e in f.items():
        prod *= p ** e
        assert all(p % d for d in range(2, int(p ** 0.5) + 1))
    assert prod == n


def test_parts():
    assert p_part(120, 2) == 8
    assert p_part(120, 7) == 1
    assert pi_part(120, {2, 5}) == 40


@pytest.mark.parametrize("name,p,count", [
    ("S3", 2, 3), ("S3", 3, 1), ("A4", 2, 1), ("A4", 3, 4), ("S4", 2, 3), ("S4", 3, 4),
    ("A5", 2, 5), ("A5", 3, 10), ("A5", 5, 6), ("S5", 2, 15), ("S5", 5, 6), ("D10", 2, 5),
    ("A6", 5, 36), ("A6", 3, 10),
])
def test_sylow_counts(name, p, count):
    G = group_by_name(name)
    P = sylow(G, p)
    assert P.order == p_part(G.order, p)
    Ps = sylow_all(G, p)
    assert len(Ps) == count
    assert len({frozenset(Q.require_elements()) for Q in Ps}) == count
    assert count % p == 1 % p


def test_sylow_for_absent_prime_is_trivial():
    assert sylow(symmetric(4), 5).order == 1
    assert len(sylow_all(symmetric(4), 5)) == 1


def test_sylow_of_p_group_is_whole():
    G = group_by_name("D8")
    assert sylow(G, 2).order == 8


@pytest.mark.parametrize("name", ["S4", "A4", "D6xD10", "C3wrS3", "S3xS3", "D8xC3", "C2wrS3", "A4xC2"])
def test_hall_orders(name):
    G = group_by_name(name)
    primes = pi(G)
    for p in primes:
        rest = [q for q in primes if q != p]
        H = hall(G, rest)
        assert H.order == pi_part(G.order, rest)
        conj = hall_all(G, rest)
        # all Hall subgroups are conjugate, so the count divides the index
        assert (G.order // H.order) % len(conj) == 0


def test_hall_needs_solubility():
    with pytest.raises(NotSoluble):
        hall(alternating(5), [2, 5])
    # the trivial cases need no search
    assert hall(alternating(5), [7]).order == 1
    assert hall(alternating(5), [2, 3, 5]).order == 60


def test_normal_sylow_is_unique():
    G = group_by_name("D6xD10")
    for p in pi(G):
        P = sylow(G, p)
        assert (len(sylow_all(G, p)) == 1) == is_normal(P, G)
