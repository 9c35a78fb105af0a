"""Exact commuting probabilities ``Pr(X, Y)`` and the Sylow-pair invariant ``Pr*``.

Two independent routes compute ``Pr(X, Y)``:

* pair counting over ``X x Y``;
* the centralizer sum ``(1/|Y|) sum_y |C_X(y)|/|X|``, where ``|C_X(y)|`` is
  obtained by orbit-stabilizer from the conjugation orbit of ``y`` under the
  generators of ``X``.

:func:`pr` runs both and refuses to return if they disagree; every such
comparison is tallied in :data:`AUDIT`.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .errors import DegreeMismatch, FormulaMismatch, NotSoluble
from .groups import GroupHandle, conjugation_orbit, is_normal, normalizes
from .sylow import hall, hall_all, pi, sylow, sylow_all

Ratio = Fraction

_NUMPY_THRESHOLD = 20_000


class FormulaAudit:
    """Thread-safe tally of pair-count vs centralizer-sum comparisons."""

    def __init__(self):
        self._lock = threading.Lock()
        self.instances = 0
        self.mismatches = []

    def record(self, X, Y, a, b):
        with self._lock:
            self.instances += 1
            if a != b:
                self.mismatches.append((X.label, Y.label, a, b))

    def reset(self):
        with self._lock:
            self.instances = 0
            self.mismatches = []


AUDIT = FormulaAudit()


def _check(X, Y):
    if X.degree != Y.degree:
        raise DegreeMismatch(f"degrees {X.degree} and {Y.degree}")


def commuting_pairs(X: GroupHandle, Y: GroupHandle) -> int:
    """``|{(x, y) in X x Y : xy = yx}|`` by direct comparison of products."""
    _check(X, Y)
    xs = X.require_elements()
    ys = Y.require_elements()
    if len(xs) * len(ys) < _NUMPY_THRESHOLD:
        return sum(1 for x in xs for y in ys if x.commutes_with(y))
    if len(xs) < len(ys):
        xs, ys = ys, xs
    A = np.asarray(xs, dtype=np.int16 if X.degree < 32000 else np.int32)
    total = 0
    for y in ys:
        yv = np.asarray(y, dtype=A.dtype)
        # (x*y)[i] = y[x[i]] and (y*x)[i] = x[y[i]]
        total += int(np.count_nonzero((yv[A] == A[:, yv]).all(axis=1)))
    return total


def pr_pairs(X: GroupHandle, Y: GroupHandle) -> Fraction:
    return Fraction(commuting_pairs(X, Y), X.order * Y.order)


def centralizer_sum(X: GroupHandle, Y: GroupHandle) -> int:
    """``sum_{y in Y} |C_X(y)|`` via conjugation orbits under ``X``."""
    _check(X, Y)
    sizes = {}
    total = 0
    for y in Y.require_elements():
        k = sizes.get(y)
        if k is None:
            orbit = conjugation_orbit(y, X)
            k = len(orbit)
            for z in orbit:
                sizes[z] = k
        total += X.order // k
    return total


def pr_centralizer(X: GroupHandle, Y: GroupHandle) -> Fraction:
    return Fraction(centralizer_sum(X, Y), X.order * Y.order)


def pr(X: GroupHandle, Y: GroupHandle, cross_check: bool = True) -> Fraction:
    """Exact probability that random ``x in X`` and ``y in Y`` commute."""
    a = pr_pairs(X, Y)
    if not cross_check:
        return a
    b = pr_centralizer(X, Y)
    AUDIT.record(X, Y, a, b)
    if a != b:
        raise FormulaMismatch(f"Pr({X.label}, {Y.label}): pair count {a} != centralizer sum {b}")
    return a


def pr_product(Xs, Ys) -> Fraction:
    """``Pr(H_1 x ... x H_k, K_1 x ... x K_k)`` as the product of per-factor values."""
    if len(Xs) != len(Ys):
        raise DegreeMismatch("factor lists differ in length")
    out = Fraction(1)
    for H, K in zip(Xs, Ys):
        out *= pr(H, K)
    return out


@dataclass
class PairResult:
    p: int
    q: int
    best: Fraction
    witness_p: GroupHandle
    witness_q: GroupHandle
    exhaustive: bool

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "best": ratio_json(self.best),
            "witnessP": [str(g) for g in self.witness_p.generators],
            "witnessQ": [str(g) for g in self.witness_q.generators],
            "exhaustive": self.exhaustive,
        }


@dataclass
class PrStarReport:
    value: Fraction
    lower_bound_only: bool
    pairs: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "value": ratio_json(self.value),
            "lowerBoundOnly": self.lower_bound_only,
            "pairs": [pr_.to_json() for pr_ in self.pairs],
        }


def ratio_json(r: Fraction) -> dict:
    return {"num": str(r.numerator), "den": str(r.denominator)}


class _Memo:
    def __init__(self):
        self.table = {}

    def pr(self, A, B):
        k = (A.key, B.key)
        v = self.table.get(k)
        if v is None:
            v = self.table[k] = pr(A, B)
        return v


def _best_pair(As, Bs, memo):
    """Max of ``pr(A, B)`` over ``As x Bs``; returns ``(value, A, B)``."""
    best = None
    for A in As:
        for B in Bs:
            v = memo.pr(A, B)
            if best is None or v > best[0]:
                best = (v, A, B)
                if v == 1:
                    return best
    return best


def _normalized_by(X, Y):
    """True when every generator of ``X`` normalizes ``Y``."""
    return all(normalizes(g, Y) for g in X.generators)


def pr_star(X: GroupHandle, Y: GroupHandle, mode: str = "exhaustive",
            witnesses: Optional[dict] = None) -> PrStarReport:
    """Min over ordered prime pairs of the best Sylow-pair commuting probability.

    ``mode="witness"`` evaluates only the supplied ``witnesses[(p, q)] = (P, Q)``
    (default: one Sylow subgroup each) and reports a certified lower bound.
    """
    if mode not in ("exhaustive", "witness"):
        raise ValueError(f"unknown mode {mode!r}")
    pairs = [(p, q) for p in pi(X) for q in pi(Y) if p != q]
    memo = _Memo()
    results = []
    if mode == "exhaustive":
        # conjugating both sides by g preserves Pr, so one side may be fixed
        fix_p = _normalized_by(X, Y)
        fix_q = not fix_p and _normalized_by(Y, X)
        syl_x = {p: [sylow(X, p)] if fix_p else sylow_all(X, p) for p in pi(X)}
        syl_y = {q: [sylow(Y, q)] if fix_q else sylow_all(Y, q) for q in pi(Y)}
        for p, q in pairs:
            v, P, Q = _best_pair(syl_x[p], syl_y[q], memo)
            results.append(PairResult(p, q, v, P, Q, True))
    else:
        witnesses = witnesses or {}
        for p, q in pairs:
            if (p, q) in witnesses:
                P, Q = witnesses[(p, q)]
            else:
                P, Q = sylow(X, p), sylow(Y, q)
            results.append(PairResult(p, q, memo.pr(P, Q), P, Q, False))
    value = min((r.best for r in results), default=Fraction(1))
    return PrStarReport(value=value, lower_bound_only=(mode == "witness" and bool(results)),
                        pairs=results)


def pr_all_sylows(T: GroupHandle, G: GroupHandle) -> Fraction:
    """Largest ``eps`` with ``Pr(P, G) >= eps`` for every Sylow subgroup ``P`` of ``T``."""
    inside = T.issubgroup(G)
    value = Fraction(1)
    for p in pi(T):
        # Pr(P^t, G) = Pr(P, G) for t in T <= G, so one Sylow per prime suffices
        Ps = [sylow(T, p)] if inside else sylow_all(T, p)
        for P in Ps:
            value = min(value, pr(P, G))
    return value


def pr_hall_hypothesis(T: GroupHandle, G: GroupHandle,
                       orientation: str = "hall-in-subgroup") -> Fraction:
    """Largest ``eps`` meeting the Sylow-vs-Hall hypothesis in the given orientation.

    ``hall-in-subgroup``: for each ``p`` in ``pi(G)`` some ``P in Syl_p(G)`` and Hall
    ``p'``-subgroup ``H`` of ``T`` with ``Pr(H, P) >= eps``.
    ``hall-in-group``: for each ``p`` in ``pi(T)`` some ``P in Syl_p(T)`` and Hall
    ``p'``-subgroup ``H`` of ``G`` with ``Pr(P, H) >= eps``.
    """
    from .structure import is_soluble

    if orientation not in ("hall-in-subgroup", "hall-in-group"):
        raise ValueError(f"unknown orientation {orientation!r}")
    hall_host = T if orientation == "hall-in-subgroup" else G
    if not is_soluble(hall_host):
        raise NotSoluble(f"{hall_host!r} is not soluble")
    normal = is_normal(T, G)
    memo = _Memo()
    value = Fraction(1)
    if orientation == "hall-in-subgroup":
        for p in pi(G):
            Ps = [sylow(G, p)] if normal else sylow_all(G, p)
            Hs = hall_all(T, [q for q in pi(T) if q != p])
            v, _, _ = _best_pair(Hs, Ps, memo)
            value = min(value, v)
    else:
        for p in pi(T):
            Ps = sylow_all(T, p)
            primes = [q for q in pi(G) if q != p]
            Hs = [hall(G, primes)] if normal else hall_all(G, primes)
            v, _, _ = _best_pair(Ps, Hs, memo)
            value = min(value, v)
    return value
