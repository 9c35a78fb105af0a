"""Sylow and Hall subgroups of enumerable groups, plus prime-set helpers."""

from __future__ import annotations

from .errors import EnumerationCapExceeded, HallSearchFailed, NotSoluble
from .groups import (GroupHandle, SubgroupRef, _closure, conjugate_key, normalizes,
                     relabel, trivial, whole)


def factorize(n: int) -> dict:
    """Prime factorization by trial division (group orders have small primes)."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def primes_of(n: int) -> tuple:
    return tuple(sorted(factorize(n)))


def pi(G: GroupHandle) -> tuple:
    """Sorted primes dividing ``|G|``."""
    return primes_of(G.order)


def p_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def pi_part(n: int, primes) -> int:
    q = 1
    for p in set(primes):
        q *= p_part(n, p)
    return q


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def complement_primes(G: GroupHandle, p: int) -> tuple:
    """``p'`` relative to ``G``: every prime of ``|G|`` except ``p``."""
    return tuple(q for q in pi(G) if q != p)


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def sylow(X: GroupHandle, p: int, label: str = "") -> SubgroupRef:
    """A Sylow ``p``-subgroup of ``X``, trivial when ``p`` does not divide ``|X|``.

    Grows a ``p``-subgroup one normalizing ``p``-element at a time; inside an
    enumerable group this always reaches the full ``p``-part.
    """
    label = label or f"Syl{p}"
    target = p_part(X.order, p)
    if target == 1:
        return trivial(X)
    if target == X.order:
        return whole(X)
    elems = X.require_elements()
    orders = [g.order() for g in elems]
    pelems = [g for g, o in sorted(zip(elems, orders), key=lambda t: (-t[1], t[0]))
              if o > 1 and _is_p_power(o, p)]
    P = trivial(X)
    while P.order < target:
        for g in pelems:
            if g not in P and normalizes(g, P):
                P = SubgroupRef(X, list(P.generators) + [g], label=label, seed=P)
                break
        else:
            raise RuntimeError(f"Sylow ascent stalled at order {P.order} < {target}")
    return P


def _conjugates(X: GroupHandle, H: SubgroupRef, cap: int) -> list:
    """All ``X``-conjugates of ``H``, deduplicated by element set, in orbit order."""
    H.require_elements()
    found = {H.key: H}
    order = [H]
    for K in order:
        for g in X.generators:
            key = conjugate_key(K, g)
            if key not in found:
                if len(found) >= cap:
                    raise EnumerationCapExceeded(f"more than {cap} conjugate subgroups")
                C = SubgroupRef(X, [k.conjugate(g) for k in K.generators], label=H.label)
                found[key] = C
                order.append(C)
    return order


def sylow_all(X: GroupHandle, p: int) -> list:
    P = sylow(X, p)
    if P.order == 1 or P.order == X.order:
        return [P]
    return _conjugates(X, P, X.limits.sylow_enum_cap)


def hall(X: GroupHandle, primes, label: str = "") -> SubgroupRef:
    """A Hall ``primes``-subgroup of the soluble group ``X``.

    In a soluble group every maximal pi-subgroup is a Hall subgroup, so a
    greedy pass over pi-elements cannot stall below the pi-part.
    """
    from .structure import is_soluble

    primes = set(primes)
    target = pi_part(X.order, primes)
    label = label or "Hall{" + ",".join(map(str, sorted(primes))) + "}"
    if target == 1:
        return trivial(X)
    if target == X.order:
        return SubgroupRef(X, X.generators, label=label)
    if not is_soluble(X):
        raise NotSoluble(f"{X!r} is not soluble; Hall subgroups need not exist")
    elems = X.require_elements()
    present = [p for p in primes if X.order % p == 0]
    start = max(present, key=lambda p: (p_part(X.order, p), p))
    H = sylow(X, start)
    if H.order == target:
        return relabel(H, label)
    orders = [g.order() for g in elems]
    cands = [g for g, o in sorted(zip(elems, orders), key=lambda t: (-t[1], t[0]))
             if o > 1 and set(factorize(o)) <= primes]
    for g in cands:
        if H.order == target:
            break
        if g in H:
            continue
        closed = _closure(X.identity, [g], target, seed=(H.elements, H._bfs_gens, H.element_set))
        if closed is None or not set(factorize(len(closed))) <= primes:
            continue
        H = SubgroupRef(X, list(H.generators) + [g], label=label, seed=H)
    if H.order != target:
        raise HallSearchFailed(f"greedy Hall search stopped at order {H.order} < {target}")
    return relabel(H, label)


def hall_all(X: GroupHandle, primes) -> list:
    H = hall(X, primes)
    if H.order == 1 or H.order == X.order:
        return [H]
    return _conjugates(X, H, X.limits.sylow_enum_cap)
