"""Machine checks of exact commuting-probability facts on concrete groups.

Each check returns a :class:`CheckResult`; a failing result carries the
subgroups (as generator lists) and values needed to reproduce it.
"""

from __future__ import annotations

import math
import random
import re
from itertools import combinations
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .commprob import (PairResult, PrStarReport, pr, pr_all_sylows, pr_hall_hypothesis,
                       pr_product, pr_star, ratio_json)
from .errors import EnumerationCapExceeded, NotSoluble, PreconditionNotMet
from .families import alternating, dihedral, direct_product, symmetric, wreath_product
from .groups import (GroupHandle, SubgroupRef, centralizer_of, commutator_subgroup,
                     conjugacy_classes, conjugation_orbit, core, intersection, is_normal, join,
                     normal_closure, normalizes, span, trivial, whole)
from .quotient import quotient
from .structure import (exponent_mod, fitting, fitting_k, fstar_2, gamma, gamma_infinity,
                        generalized_fitting, generalized_fitting_series, is_nilpotent, is_soluble,
                        nilpotency_class, normal_subgroups, p_core, soluble_radical,
                        upper_fitting_series)
from .sylow import factorize, hall, is_prime, p_part, pi, pi_part, primes_of, sylow, sylow_all

PASS, FAIL, SKIPPED, REPORT = "pass", "fail", "skipped", "report-only"


def _gens(H) -> list:
    return [str(g) for g in H.generators]


def _sub(H) -> dict:
    return {"order": H.order, "generators": _gens(H)}


@dataclass
class CheckResult:
    check_id: str
    group_label: str
    status: str
    details: dict = field(default_factory=dict)
    reason: str = ""

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def to_json(self) -> dict:
        out = {"check": self.check_id, "group": self.group_label, "status": self.status,
               "details": self.details}
        if self.reason:
            out["reason"] = self.reason
        return out


def _result(check_id, label, ok, details, counterexample=None):
    if ok:
        return CheckResult(check_id, label, PASS, details)
    d = dict(details)
    d["counterexample"] = counterexample or {}
    return CheckResult(check_id, label, FAIL, d)


def _skip(check_id, label, reason, details=None):
    return CheckResult(check_id, label, SKIPPED, details or {}, reason=reason)


# exact arithmetic on the threshold (2/eps)^(6/eps)

def exceeds_threshold(n: int, eps: Fraction) -> bool:
    """``n > (2/eps)^(6/eps)`` for rational ``0 < eps <= 1``, in integers.

    With ``eps = a/b`` both sides are raised to the power ``a``:
    ``n^a > (2b/a)^(6b)``, i.e. ``n^a * a^(6b) > (2b)^(6b)``.
    """
    a, b = eps.numerator, eps.denominator
    if a <= 0:
        return False
    return n ** a * a ** (6 * b) > (2 * b) ** (6 * b)


def within_threshold(m: int, eps: Fraction) -> bool:
    """``m <= (2/eps)^(6/eps)``."""
    return not exceeds_threshold(m, eps)


# coprime action

def check_coprime_action(G: GroupHandle, A: GroupHandle, N: GroupHandle,
                         rng: Optional[random.Random] = None, samples: int = 4) -> CheckResult:
    """``A <= G`` acting by conjugation on the normal subgroup ``N`` of coprime order."""
    label = G.label
    if math.gcd(A.order, N.order) != 1:
        return _skip("coprime-action", label, "not coprime",
                     {"orderA": A.order, "orderN": N.order})
    if not is_normal(N, G) or not A.issubgroup(G):
        raise PreconditionNotMet("N must be normal in G and A a subgroup of G")
    rng = rng or random.Random(0)
    NA = commutator_subgroup(N, A, parent=G)
    NAA = commutator_subgroup(NA, A, parent=G)
    ok2 = NAA == NA
    CN = centralizer_of(N, A)
    details = {"orderA": A.order, "orderN": N.order, "orderNA": NA.order,
               "orderNAA": NAA.order, "orderCNA": CN.order}
    bad = {}
    if not ok2:
        bad["item2"] = {"NA": _sub(NA), "NAA": _sub(NAA)}

    ok3 = True
    if N.is_abelian():
        meet = intersection(G, NA, CN)
        ok3 = NA.order * CN.order == N.order and meet.order == 1
        details["item3"] = {"product": NA.order * CN.order, "intersection": meet.order}
        if not ok3:
            bad["item3"] = {"NA": _sub(NA), "CNA": _sub(CN)}
    else:
        details["item3"] = "not applicable (N nonabelian)"

    Ms = [M for M in normal_subgroups(N) if all(normalizes(a, M) for a in A.generators)]
    picked = Ms if len(Ms) <= samples else rng.sample(Ms, samples)
    ok1 = True
    checked = []
    for M in sorted(picked, key=lambda M: (M.order, sorted(M.generators))):
        q = quotient(N, M)
        fixed = {i for i, r in enumerate(q.transversal)
                 if all(q.coset_index(r.conjugate(a)) == i for a in A.generators)}
        image = {q.coset_index(c) for c in CN.elements}
        checked.append(M.order)
        if fixed != image:
            ok1 = False
            bad["item1"] = {"M": _sub(M), "fixedCosets": len(fixed), "imageCosets": len(image)}
            break
    details["item1"] = {"invariantNormalOrders": checked}
    return _result("coprime-action", label, ok1 and ok2 and ok3, details,
                   dict(bad, A=_sub(A), N=_sub(N)))


# sampling helpers

class _NormalCache:
    def __init__(self):
        self.table = {}

    def get(self, G):
        k = id(G)
        if k not in self.table:
            self.table[k] = (G, normal_subgroups(G))
        return self.table[k][1]


def _random_subgroup(G: GroupHandle, rng: random.Random, max_gens: int = 2, label="H"):
    elems = G.require_elements()
    k = rng.randint(0, max_gens)
    if k == 0 and rng.random() < 0.5:
        return whole(G)
    return SubgroupRef(G, [elems[rng.randrange(len(elems))] for _ in range(k)], label=label)


def _eligible(corpus, max_order):
    return [G for G in corpus if 1 < G.order <= max_order and G.enumerable]


# Pr under quotients, subgroups and direct products

def check_pr_monotonicity(G, H, K, N, H0, factors=None) -> CheckResult:
    """One sampled tuple; ``factors = (dp, (H1, K1), (H2, K2))`` adds the product case."""
    base = pr(H, K)
    q = quotient(G, N)
    bar = pr(q.project_subgroup(H), q.project_subgroup(K))
    sub = pr(H0, K)
    details = {"prHK": ratio_json(base), "prQuotient": ratio_json(bar),
               "prH0K": ratio_json(sub), "orderN": N.order, "indexH0": H.order // H0.order}
    ok = bar >= base and sub >= base
    cex = {"H": _gens(H), "K": _gens(K), "N": _gens(N), "H0": _gens(H0)}
    if factors is not None:
        dp, (H1, K1), (H2, K2) = factors
        prod = pr(dp.product_subgroup([H1, H2]), dp.product_subgroup([K1, K2]))
        split = pr_product([H1, H2], [K1, K2])
        details["prProduct"] = ratio_json(prod)
        details["prFactors"] = ratio_json(split)
        details["productGroup"] = dp.group.label
        ok = ok and prod == split
        cex.update(H1=_gens(H1), K1=_gens(K1), H2=_gens(H2), K2=_gens(K2))
    return _result("pr-monotonicity", G.label, ok, details, cex)


def pr_monotonicity_suite(corpus, seed: int = 0, samples: int = 200, max_order: int = 720,
                  normals: Optional[_NormalCache] = None) -> list:
    rng = random.Random(seed)
    pool = _eligible(corpus, max_order)
    small = _eligible(corpus, 24)
    normals = normals or _NormalCache()
    out = []
    for _ in range(samples):
        G = rng.choice(pool)
        H = _random_subgroup(G, rng)
        K = _random_subgroup(G, rng, label="K")
        N = rng.choice(normals.get(G))
        H0 = _random_subgroup(H, rng, max_gens=1, label="H0")
        G1 = G if G.order <= 60 else rng.choice(small)
        G2 = rng.choice(small)
        dp = direct_product([G1, G2])
        pairs = [(_random_subgroup(F, rng), _random_subgroup(F, rng, label="K")) for F in (G1, G2)]
        out.append(check_pr_monotonicity(G, H, K, N, H0, (dp, pairs[0], pairs[1])))
    return out


# Pr* under normal subgroups and quotients

def check_prstar_monotonicity(G, H, K, L, N) -> CheckResult:
    """``K`` normal in ``H <= G``, ``L <= G``, ``N`` normal in ``G``."""
    a = pr_star(K, L).value
    b = pr_star(H, L).value
    q = quotient(G, N)
    c = pr_star(q.project_subgroup(H), q.image).value
    d = pr_star(H, G).value
    details = {"prStarKL": ratio_json(a), "prStarHL": ratio_json(b),
               "prStarQuotient": ratio_json(c), "prStarHG": ratio_json(d)}
    cex = {"H": _gens(H), "K": _gens(K), "L": _gens(L), "N": _gens(N)}
    return _result("prstar-monotonicity", G.label, a >= b and c >= d, details, cex)


def prstar_monotonicity_suite(corpus, seed: int = 0, samples: int = 50, max_order: int = 360,
                  normals: Optional[_NormalCache] = None) -> list:
    rng = random.Random(seed + 1)
    pool = _eligible(corpus, max_order)
    normals = normals or _NormalCache()
    out = []
    for _ in range(samples):
        G = rng.choice(pool)
        H = _random_subgroup(G, rng)
        hs = H.require_elements()
        K = normal_closure(H, [hs[rng.randrange(len(hs))] for _ in range(rng.randint(0, 2))],
                           label="K")
        L = whole(G) if rng.random() < 0.5 else _random_subgroup(G, rng, label="L")
        N = rng.choice(normals.get(G))
        out.append(check_prstar_monotonicity(G, H, K, L, N))
    return out


# bounded-index subgroup generated by elements with small K-classes

def _class_index_table(H, K) -> dict:
    """``|K : C_K(x)|`` for every ``x`` in ``H``."""
    table = {}
    for x in H.require_elements():
        if x not in table:
            orb = conjugation_orbit(x, K)
            for z in orb:
                table[z] = len(orb)
    return table


def check_bounded_index_witness(H: GroupHandle, K: GroupHandle) -> CheckResult:
    eps = pr(H, K)
    if eps <= 0:
        raise PreconditionNotMet("pr(H, K) must be positive")
    bound = 2 / eps
    table = _class_index_table(H, K)
    X = [x for x in H.require_elements() if table[x] <= bound]
    parent = H.parent or H
    H0 = span(parent, X, label="H0")
    index = H.order // H0.order
    ok1 = index <= bound - 1
    ok2 = all(table[x] <= bound for x in X)
    big = {}
    for x in H0.require_elements():
        m = table.get(x)
        if m is None:
            m = len(conjugation_orbit(x, K))
        big[x] = m
    worst = max(big.values())
    violations = sum(1 for m in set(big.values()) if not within_threshold(m, eps))
    details = {"epsilon": ratio_json(eps), "indexH0": index, "bound1": ratio_json(bound - 1),
               "sizeX": len(X), "item3": {"maxIndex": worst, "holds": violations == 0,
                                          "status": REPORT}}
    cex = {"H": _gens(H), "K": _gens(K), "H0": _gens(H0)}
    label = (H.ambient.label or "") if H.parent is not None else H.label
    return _result("bounded-index-witness", label, ok1 and ok2, details, cex)


def bounded_index_suite(corpus, seed: int = 0, samples: int = 100, max_order: int = 720) -> list:
    rng = random.Random(seed + 2)
    pool = _eligible(corpus, max_order)
    out = []
    for _ in range(samples):
        G = rng.choice(pool)
        out.append(check_bounded_index_witness(_random_subgroup(G, rng),
                                         _random_subgroup(G, rng, label="K")))
    return out


# large primes force commuting

def _prime_of(H) -> Optional[int]:
    f = factorize(H.order)
    return next(iter(f)) if len(f) == 1 else None


def check_large_prime_commuting(P: GroupHandle, Q: GroupHandle, label: str = "") -> CheckResult:
    label = label or P.ambient.label
    p, q = _prime_of(P), _prime_of(Q)
    if p is None or q is None or p == q:
        return _skip("large-prime-commuting", label, "needs a nontrivial p-group and q-group, p != q",
                     {"orderP": P.order, "orderQ": Q.order})
    eps = pr(P, Q)
    details = {"p": p, "q": q, "epsilon": ratio_json(eps)}
    if not exceeds_threshold(p, eps):
        return _skip("large-prime-commuting", label, "hypothesis-not-met", details)
    bad = {}
    normal = all(normalizes(g, Q) for g in P.generators)
    details["normalizes"] = normal
    ok1 = True
    if normal:
        ok1 = all(a.commutes_with(b) for a in P.generators for b in Q.generators)
        details["part1"] = ok1
        if not ok1:
            bad["part1"] = "P normalizes Q but [P,Q] != 1"
    # any normal Q0 with [P, Q0] = 1 lies in the core of C_Q(P), so the core is optimal
    Q0 = core(centralizer_of(Q, P), Q, label="Q0")
    index = Q.order // Q0.order
    limit = math.factorial(math.floor(2 / eps))
    ok2 = index <= limit
    details["part2"] = {"indexQ0": index, "bound": limit}
    if not ok2:
        bad["part2"] = {"Q0": _gens(Q0)}
    return _result("large-prime-commuting", label, ok1 and ok2, details, dict(bad, P=_gens(P), Q=_gens(Q)))


def large_prime_sweep(G: GroupHandle) -> list:
    """Every ordered pair of distinct primes, with one Sylow subgroup each."""
    out = []
    for p in pi(G):
        for q in pi(G):
            if p != q:
                out.append(check_large_prime_commuting(sylow(G, p), sylow(G, q), label=G.label))
    return out


# nilpotency, centralizers, structure

def check_nilpotency_equivalences(G: GroupHandle) -> CheckResult:
    nil = is_nilpotent(G)
    a = pr_star(G, G).value
    b = pr_star(gamma_infinity(G), G).value
    details = {"nilpotent": nil, "prStarGG": ratio_json(a), "prStarTG": ratio_json(b)}
    ok = nil == (a == 1) == (b == 1)
    return _result("nilpotency", G.label, ok, details, {"G": _gens(G)})


def check_centralizer_facts(G: GroupHandle) -> CheckResult:
    details = {}
    ok = True
    cex = {}
    if is_soluble(G):
        F = fitting(G)
        C = centralizer_of(G, F)
        inside = C.issubgroup(F)
        details["CF"] = {"orderC": C.order, "orderF": F.order, "contained": inside}
        if not inside:
            ok = False
            cex["CF"] = _gens(C)
    Fs = generalized_fitting(G)
    C = centralizer_of(G, Fs)
    inside = C.issubgroup(Fs)
    details["CFstar"] = {"orderC": C.order, "orderFstar": Fs.order, "contained": inside}
    if not inside:
        ok = False
        cex["CFstar"] = _gens(C)
    return _result("centralizer", G.label, ok, details, cex)


def _max_soluble_normal(G) -> GroupHandle:
    sol = [N for N in normal_subgroups(G) if is_soluble(N)]
    return max(sol, key=lambda N: N.order)


def check_structure(G: GroupHandle, brute_force_limit: int = 500) -> CheckResult:
    """Sylow and Hall orders, Sylow counts, the soluble radical, and ``F* = F`` when soluble."""
    details = {}
    cex = {}
    ok = True
    for p in pi(G):
        P = sylow(G, p)
        n = len(sylow_all(G, p))
        good = P.order == p_part(G.order, p) and n % p == 1 and (G.order // P.order) % n == 0
        details[f"syl{p}"] = {"order": P.order, "count": n}
        if not good:
            ok = False
            cex[f"syl{p}"] = _gens(P)
    soluble = is_soluble(G)
    details["soluble"] = soluble
    if soluble:
        primes = pi(G)
        for r in range(1, len(primes)):
            for sub in combinations(primes, r):
                Hh = hall(G, sub)
                good = Hh.order == pi_part(G.order, sub)
                details["hall" + ",".join(map(str, sub))] = Hh.order
                if not good:
                    ok = False
                    cex["hall" + ",".join(map(str, sub))] = _gens(Hh)
        F, Fs = fitting(G), generalized_fitting(G)
        details["fstarEqualsF"] = Fs == F
        ok = ok and Fs == F
    R = soluble_radical(G)
    limit = upper_fitting_series(G).last
    details["radical"] = R.order
    good = R == limit and is_soluble(R) and is_normal(R, G)
    if G.order <= brute_force_limit:
        M = _max_soluble_normal(G)
        details["radicalBruteForce"] = M.order
        good = good and M == R
    if not good:
        ok = False
        cex["radical"] = _gens(R)
    return _result("structure", G.label, ok, details, cex)




# products of dihedral groups of order 2p

def example31(primes, mode: str = "auto") -> CheckResult:
    primes = [int(p) for p in primes]
    if (len(set(primes)) != len(primes) or not primes
            or any(p == 2 or not is_prime(p) for p in primes)):
        raise PreconditionNotMet("primes must be distinct odd primes")
    if mode not in ("auto", "ambient", "per-factor"):
        raise ValueError(f"unknown mode {mode!r}")
    factors = [dihedral(2 * p) for p in primes]
    dp = direct_product(factors)
    G = dp.group
    s = len(primes)
    if mode == "auto":
        mode = "ambient" if G.enumerable else "per-factor"
    if mode == "ambient":
        G.require_elements()
    expected = {p: Fraction(p + 1, 2 * p) for p in primes}
    details = {"primes": primes, "order": G.order, "mode": mode}
    bad = {}
    ok = True

    # per-factor values: the rotation subgroup against its own factor, times 1 elsewhere
    rotations = [sylow(D, p) for D, p in zip(factors, primes)]
    per_factor = {}
    for i, p in enumerate(primes):
        Xs = [rotations[i] if j == i else trivial(D) for j, D in enumerate(factors)]
        per_factor[p] = pr_product(Xs, factors)
    details["perFactor"] = {str(p): ratio_json(v) for p, v in per_factor.items()}
    for p in primes:
        if per_factor[p] != expected[p] or per_factor[p] < Fraction(1, 2):
            ok = False
            bad[f"perFactor{p}"] = ratio_json(per_factor[p])

    T_explicit = dp.product_subgroup(rotations, label="T")
    details["orderT"] = T_explicit.order
    details["cyclicT"] = T_explicit.is_abelian() and T_explicit.order == math.prod(primes)
    ok = ok and details["cyclicT"]

    if mode == "ambient":
        T2 = gamma(G, 2)
        Tinf = gamma_infinity(G)
        same = T2 == Tinf == T_explicit
        details["gamma2Order"] = T2.order
        details["gammaInfOrder"] = Tinf.order
        if not same:
            ok = False
            bad["gamma"] = {"gamma2": _gens(T2), "gammaInf": _gens(Tinf)}
        values = {}
        for p in primes:
            P = sylow(T2, p)
            v = pr(P, G)
            values[str(p)] = ratio_json(v)
            sizes = max(len(conjugation_orbit(y, G)) for y in P.require_elements())
            if v != expected[p] or v != per_factor[p] or v < Fraction(1, 2) or sizes > 2:
                ok = False
                bad[f"pr{p}"] = {"P": _gens(P), "value": ratio_json(v), "maxClass": sizes}
        details["prPG"] = values
        F = fitting(G)
        details["indexF"] = G.order // F.order
        if F != T2 or G.order // F.order != 2 ** s:
            ok = False
            bad["fitting"] = _gens(F)
        hyp = pr_hall_hypothesis(T2, G, "hall-in-group")
        details["hallHypothesis"] = ratio_json(hyp)
        if hyp < Fraction(1, 2):
            ok = False
            bad["hallHypothesis"] = ratio_json(hyp)
    else:
        # F of a direct product is the product of the factors' Fitting subgroups
        idx = 1
        for D in factors:
            idx *= D.order // fitting(D).order
        details["indexF"] = idx
        if idx != 2 ** s:
            ok = False
            bad["fitting"] = idx
    return _result("example31", G.label, ok, details, bad)


# products of C_p wr S_5

def fixed_point_pr(p: int, Q: GroupHandle) -> Fraction:
    """``Pr(C_p^n, Q)`` for ``Q <= S_n`` permuting coordinates: sum of ``p^c(sigma)``.

    ``C_{C_p^n}(sigma)`` consists of the vectors constant on each cycle of
    ``sigma``, so it has ``p^c(sigma)`` elements, fixed points counted as cycles.
    """
    n = Q.degree
    total = sum(p ** s.cycle_count() for s in Q.require_elements())
    return Fraction(total, Q.order * p ** n)


@dataclass
class _Factor:
    p: int
    wreath: object
    base: SubgroupRef
    tops: dict


def _wreath_factor(p, limits=None):
    S5 = symmetric(5, limits)
    W = wreath_product(p, S5, limits=limits)
    tops = {q: W.top_subgroup(sylow(S5, q), label=f"Syl{q}(S5)") for q in (2, 3, 5)}
    return _Factor(p, W, W.base, tops)


def _fstar_by_quotient(f: _Factor) -> dict:
    """``F*(W) = base`` and ``F_2*(W) = C_p wr A_5`` through the action on ``W/base``."""
    W, B = f.wreath.group, f.base
    q = quotient(W, B)
    image = q.image
    abelian = B.is_abelian()
    normal = is_normal(B, W)
    # B abelian, so b*t centralizes B iff t does; check every nontrivial coset representative
    self_centralizing = all(
        not all(t.commutes_with(b) for b in B.generators) for t in q.transversal[1:])
    fit_bar = fitting(image)
    Fs_bar = generalized_fitting(image)
    F2 = q.preimage(Fs_bar, label="Fstar2")
    explicit = f.wreath.over(alternating(5), label=f"C{f.p}wrA5")
    return {
        "baseNormal": normal, "baseAbelian": abelian, "selfCentralizing": self_centralizing,
        "fittingOfQuotient": fit_bar.order, "quotientOrder": image.order,
        "fstarIsBase": normal and abelian and self_centralizing and fit_bar.order == 1,
        "fstar2Order": F2.order, "fstar2Index": W.order // F2.order,
        "matchesWreathA5": F2 == explicit,
        "_F2": explicit,
    }


def _model_pattern(m: int, n: int) -> dict:
    """Generalized Fitting series of ``C_m wr S_n`` against ``C_m wr A_n``, exhaustively."""
    W = wreath_product(m, symmetric(n))
    series = generalized_fitting_series(W.group)
    target = W.over(alternating(n))
    orders = series.orders()
    hit = any(t == target for t in series.terms)
    return {"group": W.group.label, "order": W.group.order, "series": orders,
            "wreathAOrder": target.order, "passesThroughWreathA": hit,
            "indexWreathA": W.group.order // target.order}


def example52(primes, scale: str = "model", limits=None) -> CheckResult:
    primes = [int(p) for p in primes]
    if (not primes or len(set(primes)) != len(primes)
            or any(p < 7 or not is_prime(p) for p in primes)):
        raise PreconditionNotMet("primes must be distinct primes >= 7")
    scale = "full-witness" if scale == "full" else scale
    if scale not in ("model", "full-witness"):
        raise ValueError(f"unknown scale {scale!r}")
    s = len(primes)
    facs = [_wreath_factor(p, limits) for p in primes]
    dp = direct_product([f.wreath.group for f in facs], limits=limits)
    G = dp.group
    eighth = Fraction(1, 8)
    details = {"primes": primes, "scale": scale, "order": G.order, "degree": G.degree}
    bad = {}
    ok = True

    # per-factor Pr(base, Syl_q(top)) by both formulas and by the fixed-point count
    per = {}
    table = {}
    for f in facs:
        for q, Q in f.tops.items():
            v = pr(f.base, Q)
            oracle = fixed_point_pr(f.p, sylow(f.wreath.top_group, q))
            per[(f.p, q)] = v
            table[f"{f.p},{q}"] = {"pr": ratio_json(v), "oracle": ratio_json(oracle)}
            if v != oracle or v < eighth:
                ok = False
                bad[f"pr{f.p},{q}"] = {"pr": ratio_json(v), "oracle": ratio_json(oracle)}
    details["perFactor"] = table

    # witnessed Pr*(F*(G), G); F*(G) is the product of the bases
    ones = {}
    pairs = []
    sub_cache = {}

    def product(parts, label):
        key = tuple(tuple(P.generators) for P in parts)
        if key not in sub_cache:
            sub_cache[key] = dp.product_subgroup(parts, label=label)
        return sub_cache[key]

    for i, f in enumerate(facs):
        Ps = [f.base if j == i else trivial(g.wreath.group) for j, g in enumerate(facs)]
        for q in sorted(set((2, 3, 5)) | set(primes)):
            if q == f.p:
                continue
            if q in (2, 3, 5):
                Qs = [g.tops[q] for g in facs]
            else:
                Qs = [g.base if g.p == q else trivial(g.wreath.group) for g in facs]
            v = pr_product(Ps, Qs)
            if q in primes:
                ones[f"{f.p},{q}"] = ratio_json(v)
                if v != 1:
                    ok = False
                    bad[f"commute{f.p},{q}"] = ratio_json(v)
            elif v != per[(f.p, q)]:
                ok = False
                bad[f"product{f.p},{q}"] = ratio_json(v)
            P = product(Ps, f"C{f.p}^5")
            Q = product(Qs, f"Syl{q}")
            pairs.append(PairResult(f.p, q, v, P, Q, False))
    star = PrStarReport(value=min(r.best for r in pairs), lower_bound_only=True, pairs=pairs)
    details["primeInPi"] = ones
    details["prStarWitness"] = star.to_json()
    if star.value < eighth:
        ok = False
        bad["prStar"] = ratio_json(star.value)

    # F*(G_i) = base and F_2*(G_i) = C_p wr A_5, through W_i / base
    fstar = {}
    F2_parts = []
    for f in facs:
        info = _fstar_by_quotient(f)
        F2_parts.append(info.pop("_F2"))
        fstar[str(f.p)] = info
        if not (info["fstarIsBase"] and info["matchesWreathA5"] and info["fstar2Index"] == 2):
            ok = False
            bad[f"fstar{f.p}"] = info
    details["factorStructure"] = fstar

    if scale == "model":
        models = [_model_pattern(3, 5), _model_pattern(3, 3)]
        details["models"] = models
        for m in models:
            if not (m["passesThroughWreathA"] and m["indexWreathA"] == 2):
                ok = False
                bad[m["group"]] = m
        index = 1
        for f in facs:
            index *= fstar[str(f.p)]["fstar2Index"]
    else:
        F2 = dp.product_subgroup(F2_parts, label="Fstar2")
        index = G.order // F2.order
        details["fstar2Order"] = F2.order
        # the product of bases against the product of top Sylows, inside the ambient group
        ambient = {}
        for i, f in enumerate(facs):
            P = product([f.base if j == i else trivial(g.wreath.group)
                         for j, g in enumerate(facs)], f"C{f.p}^5")
            for q in (2, 3, 5):
                Q = product([g.tops[q] for g in facs], f"Syl{q}")
                v = pr(P, Q)
                ambient[f"{f.p},{q}"] = ratio_json(v)
                if v != per[(f.p, q)]:
                    ok = False
                    bad[f"ambient{f.p},{q}"] = ratio_json(v)
        details["ambient"] = ambient
    details["indexFstar2"] = index
    if index != 2 ** s:
        ok = False
        bad["indexFstar2"] = index
    return _result("example52", G.label, ok, details, bad)


# theorem dashboards

THEOREMS = ("T1.1", "T1.2", "T1.3", "T1.4", "T1.5", "L3.1", "P3.2", "L3.4")
_THEOREM = re.compile(r"^(T1\.[1-5]|L3\.1|P3\.2|L3\.4)(?:\((\d+)\))?$")


@dataclass
class Dashboard:
    group_label: str
    theorem: str
    hypothesis_epsilon: Optional[Fraction]
    conclusions: dict
    skipped: dict = field(default_factory=dict)
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        eps = self.hypothesis_epsilon
        return {
            "group": self.group_label,
            "theorem": self.theorem,
            "hypothesisEpsilon": ratio_json(eps) if eps is not None else None,
            "conclusions": self.conclusions,
            "skipped": self.skipped,
            "extra": self.extra,
        }


def parse_theorem(text: str):
    m = _THEOREM.match(text.strip())
    if not m:
        raise ValueError(f"unknown theorem id {text!r}; expected one of {', '.join(THEOREMS)}")
    name, k = m.group(1), m.group(2)
    if k is not None and name != "T1.3":
        raise ValueError("only T1.3 takes a parameter k")
    return name, int(k) if k is not None else (1 if name == "T1.3" else None)


def _witness_r(G, F, k, budget) -> dict:
    """Bounded search for normal ``R <= F(G)`` of class ``<= k+1``.

    Candidates are joins of normal closures of classes of ``G`` inside
    ``F(G)``; the best minimizes ``(exp(G/R), |gamma_{k+1}(R)|)``.
    """
    atoms = {}
    for cls in conjugacy_classes(G):
        c = cls.representative
        if c.is_identity() or c not in F:
            continue
        N = normal_closure(G, [c])
        atoms.setdefault(N.key, N)
    atoms = sorted(atoms.values(), key=lambda N: (-N.order, sorted(N.generators)))
    one = trivial(G)
    found = {one.key: one}
    queue = [one]
    nodes = 0
    exhausted = True
    for A in queue:
        for M in atoms:
            if M.issubgroup(A):
                continue
            if nodes >= budget:
                exhausted = False
                break
            nodes += 1
            J = join(G, A, M)
            if J.key not in found:
                found[J.key] = J
                queue.append(J)
        if not exhausted:
            break
    best = None
    for R in found.values():
        cls = nilpotency_class(R)
        if cls is None or cls > k + 1:
            continue
        g = gamma(R, k + 1) if R.order > 1 else R
        score = (exponent_mod(G, R), g.order, -R.order)
        if best is None or score < best[0]:
            best = (score, R, cls)
    (e, gk, _), R, cls = best
    return {"order": R.order, "class": cls, "expQuotient": e, "orderGammaK1R": gk,
            "generators": _gens(R), "nodes": nodes, "candidates": len(found),
            "exhaustive": exhausted}


def dashboard(G: GroupHandle, theorem: str, k: Optional[int] = None,
              budget: Optional[int] = None) -> Dashboard:
    """Hypothesis value and conclusion quantities for one statement on one group.

    Conclusions are reported, never judged: the statements only bound them
    by unspecified functions of epsilon.
    """
    name, k_parsed = parse_theorem(theorem)
    k = k if k is not None else k_parsed
    budget = budget or G.limits.search_budget
    label = f"{name}({k})" if name == "T1.3" else name
    skipped = {}
    conclusions = {}
    extra = {}

    def attempt(key, fn):
        try:
            return fn()
        except (EnumerationCapExceeded, NotSoluble) as exc:
            skipped[key] = f"{type(exc).__name__}: {exc}"
            return None

    F = attempt("fitting", lambda: fitting(G))
    F2 = attempt("fitting2", lambda: fitting_k(G, 2))
    if F is not None:
        conclusions["indexF"] = G.order // F.order
        conclusions["s"] = len(primes_of(F.order))
        e = attempt("expGmodF", lambda: exponent_mod(G, F))
        if e is not None:
            conclusions["expGmodF"] = e
    if F2 is not None:
        conclusions["indexF2"] = G.order // F2.order

    def hypothesis():
        if name in ("T1.1", "L3.1", "P3.2"):
            return pr_star(gamma_infinity(G), G).value
        if name == "T1.2":
            return pr_hall_hypothesis(gamma_infinity(G), G, "hall-in-subgroup")
        if name == "L3.4":
            return pr_hall_hypothesis(gamma_infinity(G), G, "hall-in-group")
        if name == "T1.3":
            return pr_all_sylows(gamma(G, k), G)
        if name == "T1.4":
            return pr_star(generalized_fitting(G), G).value
        return pr_star(fstar_2(G), G).value

    if name in ("T1.2", "L3.1", "P3.2", "L3.4") and not attempt("soluble", lambda: is_soluble(G)):
        skipped.setdefault("hypothesis", "statement is about soluble groups")
        eps = None
    else:
        eps = attempt("hypothesis", hypothesis)

    if name == "T1.3" and F is not None:
        conclusions["witnessR"] = attempt("witnessR", lambda: _witness_r(G, F, k, budget))
    if name == "L3.1" and eps is not None and F is not None:
        rows = {}
        for p in pi(G):
            big = exceeds_threshold(p, eps)
            rows[str(p)] = {"aboveThreshold": big,
                            "sylowInF": sylow(G, p).issubgroup(F) if big else None}
        extra["sylowInFitting"] = rows
        extra["holds"] = all(r["sylowInF"] for r in rows.values() if r["aboveThreshold"])

    if F is not None and F2 is not None:
        consistent = conclusions["indexF"] == conclusions["indexF2"] * (F2.order // F.order)
        if "expGmodF" in conclusions:
            consistent = consistent and conclusions["indexF"] % conclusions["expGmodF"] == 0
        extra["consistent"] = consistent
    return Dashboard(G.label, label, eps, conclusions, skipped, extra)


# coprime nilpotent section quantities (reported only)

def coprime_section_quantities(G: GroupHandle, Q: GroupHandle, H: GroupHandle, k: int = 1) -> dict:
    """``pr(Q cap gamma_k(G), H)`` and ``|H : C_H(Q)|`` for ``Q`` normal nilpotent, ``H`` coprime."""
    if math.gcd(Q.order, H.order) != 1:
        raise PreconditionNotMet("Q and H must have coprime orders")
    T = gamma(G, k)
    N = intersection(G, Q, T)
    return {"epsilon": ratio_json(pr(N, H)),
            "indexCHQ": H.order // centralizer_of(H, Q).order,
            "orderQcapT": N.order}


# corpus driver

def run_tasks(tasks, workers: int = 1) -> list:
    """Run ``(group label, check id, thunk)`` tasks; results sorted by (label, check id)."""
    def run(t):
        return t[2]()

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(run, tasks))
    else:
        results = [run(t) for t in tasks]
    flat = []
    for r in results:
        flat.extend(r if isinstance(r, list) else [r])
    return sorted(flat, key=lambda r: (r.group_label, r.check_id))


def corpus_checks(corpus, seed: int = 0, samples: int = 200, workers: int = 1,
                  star_samples: Optional[int] = None, witness_samples: Optional[int] = None) -> list:
    """Every per-group check plus the seeded sampling suites over ``corpus``."""
    corpus = list(corpus)
    tasks = []
    for G in corpus:
        if not G.enumerable:
            continue
        tasks.append((G.label, "nilpotency", lambda G=G: check_nilpotency_equivalences(G)))
        tasks.append((G.label, "centralizer", lambda G=G: check_centralizer_facts(G)))
        tasks.append((G.label, "structure", lambda G=G: check_structure(G)))
        tasks.append((G.label, "large-prime-commuting", lambda G=G: large_prime_sweep(G)))
        tasks.append((G.label, "coprime-action", lambda G=G: _coprime_for(G)))
    normals = _NormalCache()
    # sequence-dependent sampling stays in one task so the stream is reproducible
    tasks.append(("", "pr-monotonicity",
                  lambda: pr_monotonicity_suite(corpus, seed, samples, normals=normals)))
    star_n = star_samples or max(50, samples // 4)
    witness_n = witness_samples or max(100, samples // 2)
    tasks.append(("", "prstar-monotonicity",
                  lambda: prstar_monotonicity_suite(corpus, seed, star_n, normals=_NormalCache())))
    tasks.append(("", "bounded-index-witness",
                  lambda: bounded_index_suite(corpus, seed, witness_n)))
    return run_tasks(tasks, workers)


def _coprime_for(G) -> list:
    """Coprime pairs ``(A, N)`` with ``N`` a p-core and ``A`` a Sylow subgroup for another prime."""
    out = []
    for p in pi(G):
        N = p_core(G, p)
        if N.order == 1:
            continue
        for q in pi(G):
            if q != p:
                out.append(check_coprime_action(G, sylow(G, q), N))
    if not out:
        out.append(_skip("coprime-action", G.label, "no nontrivial p-core with a coprime Sylow subgroup"))
    return out


def summarize(results) -> dict:
    counts = {PASS: 0, FAIL: 0, SKIPPED: 0, REPORT: 0}
    for r in results:
        counts[r.status] += 1
    return counts
