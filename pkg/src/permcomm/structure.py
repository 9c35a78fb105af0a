"""Characteristic subgroups: central/derived series, Fitting series, layer, F*."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .groups import (GroupHandle, SubgroupRef, centre, commutator_subgroup, conjugacy_classes,
                     core, derived_subgroup, exponent, join, normal_closure, relabel, trivial,
                     whole)
from .quotient import quotient
from .sylow import pi, primes_of, sylow


@dataclass
class SeriesRecord:
    kind: str
    terms: list
    stabilized: bool

    @property
    def last(self) -> SubgroupRef:
        return self.terms[-1]

    def orders(self) -> list:
        return [t.order for t in self.terms]


def lower_central_series(G: GroupHandle, k_max: Optional[int] = None) -> SeriesRecord:
    """``gamma_1 = G``, ``gamma_{i+1} = [gamma_i, G]`` until stable or ``k_max`` terms."""
    terms = [whole(G)]
    while k_max is None or len(terms) < k_max:
        nxt = commutator_subgroup(terms[-1], G, parent=G, label=f"gamma{len(terms) + 1}")
        if nxt.order == terms[-1].order:
            return SeriesRecord("lower_central", terms, True)
        terms.append(nxt)
    return SeriesRecord("lower_central", terms, False)


def gamma(G: GroupHandle, k: int) -> SubgroupRef:
    if k < 1:
        raise ValueError("lower central series is indexed from 1")
    series = lower_central_series(G, k_max=k)
    return series.terms[min(k, len(series.terms)) - 1]


def gamma_infinity(G: GroupHandle) -> SubgroupRef:
    return relabel(lower_central_series(G).last, "gammaInf", G)


def derived_series(G: GroupHandle) -> SeriesRecord:
    terms = [whole(G)]
    while True:
        nxt = relabel(derived_subgroup(terms[-1]), f"G({len(terms)})", G)
        if nxt.order == terms[-1].order:
            return SeriesRecord("derived", terms, True)
        terms.append(nxt)


def is_soluble(G: GroupHandle) -> bool:
    return derived_series(G).last.order == 1


def derived_length(G: GroupHandle) -> Optional[int]:
    s = derived_series(G)
    return len(s.terms) - 1 if s.last.order == 1 else None


def soluble_residual(G: GroupHandle) -> SubgroupRef:
    return derived_series(G).last


def is_perfect(G: GroupHandle) -> bool:
    return derived_subgroup(G).order == G.order


def is_nilpotent(G: GroupHandle) -> bool:
    return lower_central_series(G).last.order == 1


def nilpotency_class(G: GroupHandle) -> Optional[int]:
    s = lower_central_series(G)
    if s.last.order != 1:
        return None
    return len(s.terms) - 1


def p_core(G: GroupHandle, p: int) -> SubgroupRef:
    """``O_p(G)``, the intersection of the conjugates of a Sylow ``p``-subgroup."""
    P = sylow(G, p)
    if P.order in (1, G.order):
        return relabel(P, f"O{p}", G)
    return core(P, G, label=f"O{p}")


def fitting(G: GroupHandle) -> SubgroupRef:
    cores = [p_core(G, p) for p in pi(G)]
    return join(G, *cores, label="F")


def upper_fitting_series(G: GroupHandle) -> SeriesRecord:
    terms = [fitting(G)]
    while terms[-1].order < G.order:
        q = quotient(G, terms[-1])
        nxt = q.preimage(fitting(q.image), label=f"F{len(terms) + 1}")
        if nxt.order == terms[-1].order:
            return SeriesRecord("upper_fitting", terms, True)
        terms.append(nxt)
    return SeriesRecord("upper_fitting", terms, True)


def fitting_k(G: GroupHandle, k: int) -> SubgroupRef:
    if k < 1:
        raise ValueError("upper Fitting series is indexed from 1")
    F = fitting(G)
    for i in range(1, k):
        if F.order == G.order:
            break
        q = quotient(G, F)
        nxt = q.preimage(fitting(q.image), label=f"F{i + 1}")
        if nxt.order == F.order:
            break
        F = nxt
    return F


def soluble_radical(G: GroupHandle) -> SubgroupRef:
    return relabel(upper_fitting_series(G).last, "R", G)


def normal_subgroups(G: GroupHandle) -> list:
    """All normal subgroups, as joins of normal closures of conjugacy classes.

    Every normal subgroup is the join of the class closures it contains, so
    closing the singletons under joins with class closures finds them all.
    Sorted by order, then by element tuple.
    """
    closures = {}
    for cls in conjugacy_classes(G):
        if cls.representative.is_identity():
            continue
        N = normal_closure(G, [cls.representative])
        closures.setdefault(N.key, N)
    atoms = list(closures.values())
    one = trivial(G)
    found = {one.key: one}
    queue = [one]
    for A in queue:
        for M in atoms:
            if M.issubgroup(A):
                continue
            J = join(G, A, M)
            if J.key not in found:
                found[J.key] = J
                queue.append(J)
    return sorted(found.values(), key=lambda N: (N.order, sorted(N.elements)[:2]))


def is_simple(G: GroupHandle) -> bool:
    """Nontrivial with no normal subgroups besides 1 and ``G``."""
    if G.order == 1:
        return False
    for cls in conjugacy_classes(G):
        if cls.representative.is_identity():
            continue
        if normal_closure(G, [cls.representative]).order != G.order:
            return False
    return True


def is_quasisimple(G: GroupHandle) -> bool:
    """Perfect, nontrivial, and ``G/Z(G)`` simple.

    For perfect ``G``, ``G/Z`` is simple exactly when every non-central
    element has normal closure ``G``.
    """
    if G.order == 1 or not is_perfect(G):
        return False
    Z = centre(G)
    for cls in conjugacy_classes(G):
        c = cls.representative
        if c in Z:
            continue
        if normal_closure(G, [c]).order != G.order:
            return False
    return True


def components(G: GroupHandle) -> list:
    """Subnormal quasisimple subgroups of ``G``, found below the soluble residual.

    Components are perfect, so each is subnormal in the soluble residual of
    every subnormal subgroup containing it; the search descends through
    residuals of proper normal subgroups only.
    """
    D = soluble_residual(G)
    if D.order == 1:
        return []
    found = {}
    visited = set()

    def descend(H):
        if H.key in visited:
            return
        visited.add(H.key)
        if is_quasisimple(H):
            found.setdefault(H.key, relabel(H, "comp", G))
            return
        for N in normal_subgroups(H):
            if N.order in (1, H.order):
                continue
            M = soluble_residual(N)
            if M.order > 1:
                descend(relabel(M, M.label, H))

    descend(D)
    return sorted(found.values(), key=lambda K: (K.order, sorted(K.generators)))


def layer(G: GroupHandle) -> SubgroupRef:
    return join(G, *components(G), label="E")


def generalized_fitting(G: GroupHandle) -> SubgroupRef:
    F = fitting(G)
    if is_soluble(G):
        return relabel(F, "Fstar", G)
    return join(G, F, layer(G), label="Fstar")


def generalized_fitting_series(G: GroupHandle, k_max: Optional[int] = None) -> SeriesRecord:
    terms = [generalized_fitting(G)]
    while terms[-1].order < G.order and (k_max is None or len(terms) < k_max):
        q = quotient(G, terms[-1])
        nxt = q.preimage(generalized_fitting(q.image), label=f"Fstar{len(terms) + 1}")
        if nxt.order == terms[-1].order:
            return SeriesRecord("generalized_fitting", terms, True)
        terms.append(nxt)
    return SeriesRecord("generalized_fitting", terms, terms[-1].order == G.order)


def fstar_2(G: GroupHandle) -> SubgroupRef:
    series = generalized_fitting_series(G, k_max=2)
    return series.terms[min(2, len(series.terms)) - 1]


def is_subnormal(H: GroupHandle, G: GroupHandle) -> bool:
    """Descend ``N_{i+1} = <H^{N_i}>`` from ``N_0 = G`` until it stops shrinking."""
    if not H.issubgroup(G):
        return False
    N = G
    while True:
        M = normal_closure(N, H.generators)
        if M.order == H.order:
            return True
        if M.order == N.order:
            return False
        N = M


def exponent_mod(G: GroupHandle, N: GroupHandle) -> int:
    """Exponent of ``G/N``."""
    if N.order == G.order:
        return 1
    return exponent(quotient(G, N).image)


def _sub(S: GroupHandle, G: GroupHandle) -> dict:
    return {"order": S.order, "index": G.order // S.order,
            "generators": [str(g) for g in S.generators]}


@dataclass
class StructureReport:
    order: int
    pi: tuple
    gamma_inf: SubgroupRef
    fitting: SubgroupRef
    fitting2: SubgroupRef
    fstar: SubgroupRef
    fstar2: SubgroupRef
    soluble_radical: SubgroupRef
    is_nilpotent: bool
    is_soluble: bool
    exponent_mod_fitting: int
    group: GroupHandle = field(repr=False, default=None)

    def to_json(self) -> dict:
        G = self.group
        return {
            "order": self.order,
            "pi": list(self.pi),
            "gammaInf": _sub(self.gamma_inf, G),
            "fitting": _sub(self.fitting, G),
            "fitting2": _sub(self.fitting2, G),
            "fstar": _sub(self.fstar, G),
            "fstar2": _sub(self.fstar2, G),
            "radical": _sub(self.soluble_radical, G),
            "nilpotent": self.is_nilpotent,
            "soluble": self.is_soluble,
            "expModFitting": self.exponent_mod_fitting,
        }


def structure_report(G: GroupHandle) -> StructureReport:
    F = fitting(G)
    T = gamma_infinity(G)
    return StructureReport(
        order=G.order,
        pi=pi(G),
        gamma_inf=T,
        fitting=F,
        fitting2=fitting_k(G, 2),
        fstar=generalized_fitting(G),
        fstar2=fstar_2(G),
        soluble_radical=soluble_radical(G),
        is_nilpotent=T.order == 1,
        is_soluble=is_soluble(G),
        exponent_mod_fitting=exponent_mod(G, F),
        group=G,
    )


def prime_count_of_fitting(G: GroupHandle) -> int:
    """``s = |pi(F(G))|``."""
    return len(primes_of(fitting(G).order))
