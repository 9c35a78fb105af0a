"""Built-in groups and product constructions."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .groups import GroupHandle, Limits, SubgroupRef
from .perm import Permutation, _new


def _perm(images):
    return _new(Permutation, images)


def _cycle(n, pts):
    img = list(range(n))
    for a, b in zip(pts, pts[1:] + pts[:1]):
        img[a] = b
    return _perm(img)


def cyclic(n: int, limits: Limits | None = None) -> GroupHandle:
    """C_n acting regularly on n points."""
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    gens = [_cycle(n, list(range(n)))] if n > 1 else []
    return GroupHandle(n, gens, label=f"C{n}", limits=limits)


def dihedral(order: int, limits: Limits | None = None) -> GroupHandle:
    """Dihedral group of the given order 2n on n points (n >= 3)."""
    if order % 2 or order < 6:
        raise ValueError("dihedral order must be even and at least 6")
    n = order // 2
    rot = _cycle(n, list(range(n)))
    ref = _perm([(-i) % n for i in range(n)])
    return GroupHandle(n, [rot, ref], label=f"D{order}", limits=limits)


def symmetric(n: int, limits: Limits | None = None) -> GroupHandle:
    if n < 1:
        raise ValueError("symmetric group needs n >= 1")
    gens = []
    if n >= 2:
        gens = [_cycle(n, [0, 1]), _cycle(n, list(range(n)))]
    return GroupHandle(n, gens, label=f"S{n}", limits=limits)


def alternating(n: int, limits: Limits | None = None) -> GroupHandle:
    if n < 1:
        raise ValueError("alternating group needs n >= 1")
    gens = [_cycle(n, [0, 1, k]) for k in range(2, n)]
    return GroupHandle(n, gens, label=f"A{n}", limits=limits)


_FAMILY = re.compile(r"^([CDSA])(\d+)$")


def builtin(name: str, limits: Limits | None = None) -> GroupHandle:
    """``"C7"``, ``"D10"`` (order 10), ``"S4"``, ``"A5"``."""
    m = _FAMILY.match(name.strip())
    if not m:
        raise ValueError(f"unknown built-in family {name!r}")
    kind, n = m.group(1), int(m.group(2))
    return {"C": cyclic, "D": dihedral, "S": symmetric, "A": alternating}[kind](n, limits)


def _embed(g, offset, degree):
    img = list(range(degree))
    for a, b in enumerate(g):
        img[offset + a] = offset + b
    return _perm(img)


@dataclass
class DirectProduct:
    """``group`` acts on the disjoint union of the factor domains."""

    group: GroupHandle
    factors: list
    offsets: list

    def embed(self, i: int, g: Permutation) -> Permutation:
        return _embed(g, self.offsets[i], self.group.degree)

    def embed_subgroup(self, i: int, H: GroupHandle, label="") -> SubgroupRef:
        return SubgroupRef(self.group, [self.embed(i, h) for h in H.generators],
                           label=label or H.label)

    def product_subgroup(self, parts, label="") -> SubgroupRef:
        """``H_1 x ... x H_k`` for ``H_i`` a subgroup of factor ``i``."""
        gens = [self.embed(i, h) for i, H in enumerate(parts) for h in H.generators]
        return SubgroupRef(self.group, gens, label=label)

    def restrict(self, i: int, g: Permutation) -> Permutation:
        off = self.offsets[i]
        n = self.factors[i].degree
        return _perm(g[off + a] - off for a in range(n))


def direct_product(factors, label: str | None = None, limits: Limits | None = None) -> DirectProduct:
    factors = list(factors)
    if not factors:
        raise ValueError("direct product needs at least one factor")
    offsets = []
    degree = 0
    for F in factors:
        offsets.append(degree)
        degree += F.degree
    gens = [_embed(g, offsets[i], degree) for i, F in enumerate(factors) for g in F.generators]
    label = label if label is not None else "x".join(F.label or "?" for F in factors)
    G = GroupHandle(degree, gens, label=label, limits=limits or factors[0].limits)
    return DirectProduct(group=G, factors=factors, offsets=offsets)


@dataclass
class WreathProduct:
    """``C_m wr top`` on ``m*n`` points; point ``b*m + j`` is coordinate ``j`` of block ``b``."""

    group: GroupHandle
    m: int
    top_group: GroupHandle
    base: SubgroupRef
    top: SubgroupRef

    def lift(self, sigma: Permutation) -> Permutation:
        m = self.m
        return _perm(sigma[b] * m + j for b in range(len(sigma)) for j in range(m))

    def over(self, H: GroupHandle, label="") -> SubgroupRef:
        """``C_m wr H`` for a subgroup ``H`` of the top group."""
        gens = list(self.base.generators) + [self.lift(h) for h in H.generators]
        return SubgroupRef(self.group, gens, label=label)

    def top_subgroup(self, H: GroupHandle, label="") -> SubgroupRef:
        return SubgroupRef(self.group, [self.lift(h) for h in H.generators], label=label)


def wreath_product(m: int, top: GroupHandle, label: str | None = None,
                   limits: Limits | None = None) -> WreathProduct:
    if m < 2:
        raise ValueError("wreath product needs m >= 2")
    n = top.degree
    N = m * n
    base_gens = [_cycle(N, [b * m + j for j in range(m)]) for b in range(n)]
    top_lifts = [_perm(s[b] * m + j for b in range(n) for j in range(m)) for s in top.generators]
    # one base generator per block orbit of the top group suffices
    orbit_reps = []
    seen = set()
    for b in range(n):
        if b in seen:
            continue
        orbit_reps.append(b)
        orbit = [b]
        seen.add(b)
        for x in orbit:
            for s in top.generators:
                if s[x] not in seen:
                    seen.add(s[x])
                    orbit.append(s[x])
    gens = [base_gens[b] for b in orbit_reps] + top_lifts
    label = label if label is not None else f"C{m}wr{top.label or '?'}"
    G = GroupHandle(N, gens, label=label, limits=limits or top.limits)
    base = SubgroupRef(G, base_gens, label=f"C{m}^{n}")
    topc = SubgroupRef(G, top_lifts, label=top.label)
    return WreathProduct(group=G, m=m, top_group=top, base=base, top=topc)
