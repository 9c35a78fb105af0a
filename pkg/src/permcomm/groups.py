"""Permutation group handles and the element-level operations built on them.

A group is small enough to *enumerate* when its order is at most
``limits.enumeration_cap``; such groups carry their full element list,
built coset by coset (Dimino's algorithm) from the lexicographically
sorted generators, so the order is reproducible. Larger
groups only carry a stabilizer chain, and operations that need elements
raise :class:`EnumerationCapExceeded`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import DegreeMismatch, EnumerationCapExceeded, NotAMember
from .perm import Permutation, _new, commutator
from .schreier import StabChain


@dataclass(frozen=True)
class Limits:
    enumeration_cap: int = 200_000
    coset_degree_cap: int = 20_000
    sylow_enum_cap: int = 20_000
    search_budget: int = 2_000

    def __post_init__(self):
        for name in ("enumeration_cap", "coset_degree_cap", "sylow_enum_cap", "search_budget"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")


DEFAULT_LIMITS = Limits()


def _closure(identity, gens, cap, seed=None):
    """Dimino's algorithm: add generators one at a time, coset by coset.

    ``seed`` is an already-closed element list for a prefix of ``gens``.
    Returns None as soon as more than ``cap`` elements appear.
    """
    new = _new
    if seed is None:
        elems = [identity]
        seen = {identity}
        used = []
    else:
        elems, used = list(seed[0]), list(seed[1])
        seen = set(seed[0]) if len(seed) < 3 else set(seed[2])
    for g in gens:
        if g in seen:
            if g not in used:
                used.append(g)
            continue
        used.append(g)
        block = len(elems)
        pending = [g]
        pos = block
        while pending or pos < len(elems):
            for x in pending:
                if x in seen:
                    continue
                coset = [new(Permutation, map(x.__getitem__, h)) for h in elems[:block]]
                elems.extend(coset)
                seen.update(coset)
                if len(elems) > cap:
                    return None
            pending = []
            while pos < len(elems):
                r = elems[pos]
                pos += block
                for s in used:
                    t = new(Permutation, map(s.__getitem__, r))
                    if t not in seen:
                        pending.append(t)
                if pending:
                    break
    return elems


class GroupHandle:
    """A permutation group on ``degree`` points given by generators."""

    def __init__(
        self,
        degree: int,
        generators: Iterable[Permutation],
        label: str = "",
        limits: Optional[Limits] = None,
        parent: Optional["GroupHandle"] = None,
        seed: Optional["GroupHandle"] = None,
    ):
        if degree < 1:
            raise ValueError("degree must be positive")
        gens = []
        for g in generators:
            if len(g) != degree:
                raise DegreeMismatch(f"generator {g} has degree {len(g)}, expected {degree}")
            if not isinstance(g, Permutation):
                g = Permutation(g)
            gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self.label = label
        self.parent = parent
        self.limits = limits or (parent.limits if parent is not None else DEFAULT_LIMITS)
        self.identity = Permutation.identity(degree)
        cap = self.limits.enumeration_cap
        elems = None
        if seed is not None and seed.enumerable:
            extra = [g for g in gens if g not in seed.element_set]
            self._bfs_gens = list(seed._bfs_gens) + sorted(set(extra))
            elems = _closure(self.identity, sorted(set(extra)), cap,
                             seed=(seed.elements, seed._bfs_gens, seed.element_set))
        else:
            self._bfs_gens = sorted({g for g in gens if not g.is_identity()})
        if elems is None and parent is not None and parent.enumerable:
            elems = _closure(self.identity, self._bfs_gens, cap)
        if elems is None:
            chain = StabChain(degree, self._bfs_gens)
            self.__dict__["chain"] = chain
            if chain.order <= cap:
                elems = _closure(self.identity, self._bfs_gens, cap)
            self.order = chain.order
        else:
            self.order = len(elems)
        self.elements = tuple(elems) if elems is not None else None
        self.element_set = frozenset(elems) if elems is not None else None

    @cached_property
    def chain(self) -> StabChain:
        return StabChain(self.degree, self._bfs_gens)

    @property
    def enumerable(self) -> bool:
        return self.elements is not None

    def require_elements(self) -> tuple:
        if self.elements is None:
            raise EnumerationCapExceeded(
                f"{self.label or 'group'} has order {self.order} > cap {self.limits.enumeration_cap}"
            )
        return self.elements

    @property
    def ambient(self) -> "GroupHandle":
        g = self
        while g.parent is not None:
            g = g.parent
        return g

    def __contains__(self, g) -> bool:
        if len(g) != self.degree:
            return False
        if self.element_set is not None:
            return g in self.element_set
        return self.chain.contains(g)

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self.require_elements())

    def is_trivial(self) -> bool:
        return self.order == 1

    def issubgroup(self, other: "GroupHandle") -> bool:
        """True when every element of ``self`` lies in ``other``."""
        return self.degree == other.degree and all(g in other for g in self.generators)

    def __le__(self, other):
        return self.issubgroup(other)

    def __eq__(self, other):
        if not isinstance(other, GroupHandle):
            return NotImplemented
        return self.degree == other.degree and self.order == other.order and self.issubgroup(other)

    def __hash__(self):
        return hash((self.degree, self.order))

    @cached_property
    def key(self):
        """Hashable identity of the element set (frozen elements when enumerable)."""
        if self.element_set is not None:
            return self.element_set
        return (self.degree, self.order, tuple(sorted(self.chain.strong_generators())))

    def is_abelian(self) -> bool:
        gs = self.generators
        return all(a.commutes_with(b) for i, a in enumerate(gs) for b in gs[i + 1:])

    def describe(self) -> dict:
        out = {"order": self.order, "generators": [str(g) for g in self.generators]}
        if self.parent is not None:
            out["index"] = self.ambient.order // self.order
        return out

    def __repr__(self):
        name = self.label or "group"
        return f"<{type(self).__name__} {name} degree={self.degree} order={self.order}>"


class SubgroupRef(GroupHandle):
    """A subgroup of ``parent``, itself usable wherever a group is expected."""

    def __init__(self, parent: GroupHandle, generators, label: str = "", seed=None):
        super().__init__(parent.degree, generators, label=label, parent=parent, seed=seed)

    @property
    def index(self) -> int:
        return self.parent.order // self.order


def group_from_generators(degree, gens, label="", limits=None) -> GroupHandle:
    return GroupHandle(degree, gens, label=label, limits=limits)


def elements(X: GroupHandle) -> list:
    return list(X.require_elements())


def subgroup(parent: GroupHandle, gens, label="") -> SubgroupRef:
    """Subgroup of ``parent`` generated by trusted members ``gens``."""
    return SubgroupRef(parent, gens, label=label)


def subgroup_generated(parent: GroupHandle, elems, label="") -> SubgroupRef:
    elems = list(elems)
    for g in elems:
        if g not in parent:
            raise NotAMember(f"{g} is not in {parent!r}")
    return SubgroupRef(parent, elems, label=label)


def relabel(H: GroupHandle, label: str, parent: Optional[GroupHandle] = None) -> SubgroupRef:
    """Copy of ``H`` under ``parent`` (default ``H.parent``) with a new label."""
    parent = parent or H.parent or H
    return SubgroupRef(parent, H.generators, label=label, seed=H)


def trivial(parent: GroupHandle) -> SubgroupRef:
    return SubgroupRef(parent, [], label="1")


def whole(parent: GroupHandle) -> SubgroupRef:
    """``parent`` viewed as a subgroup of itself."""
    return SubgroupRef(parent, parent.generators, label=parent.label)


def _element_order_key(g):
    return (-g.order(), g)


def subgroup_from_elements(parent: GroupHandle, elems, label="") -> SubgroupRef:
    """Subgroup whose element set is exactly ``elems`` (which must be a subgroup).

    Generators are picked greedily, highest element order first.
    """
    target = elems if isinstance(elems, (set, frozenset)) else frozenset(elems)
    H = span(parent, target, label=label, stop=len(target))
    if H.order != len(target):
        raise ValueError("element set is not closed under multiplication")
    return H


def span(parent: GroupHandle, elems, label="", stop=None) -> SubgroupRef:
    """``<elems>`` with a short generating list chosen greedily from ``elems``."""
    target = elems if isinstance(elems, (set, frozenset)) else frozenset(elems)
    gens = []
    have = {parent.identity}
    cap = parent.limits.enumeration_cap
    elems = [parent.identity]
    for g in sorted(target, key=_element_order_key):
        if stop is not None and len(have) >= stop:
            break
        if g in have:
            continue
        elems = _closure(parent.identity, [g], cap, seed=(elems, gens, have))
        if elems is None:
            raise EnumerationCapExceeded(f"subgroup generated exceeds cap {cap}")
        gens.append(g)
        have = set(elems)
    return SubgroupRef(parent, gens, label=label)


def join(parent: GroupHandle, *subs: GroupHandle, label="") -> SubgroupRef:
    gens = [g for H in subs for g in H.generators]
    return SubgroupRef(parent, gens, label=label)


def intersection(parent: GroupHandle, H: GroupHandle, K: GroupHandle, label="") -> SubgroupRef:
    if H.order > K.order:
        H, K = K, H
    elems = [h for h in H.require_elements() if h in K]
    return subgroup_from_elements(parent, elems, label=label)


def conjugate_subgroup(H: GroupHandle, g: Permutation) -> SubgroupRef:
    """``H^g`` as a subgroup of ``H.parent`` (or of ``H`` when it has none)."""
    parent = H.parent if H.parent is not None else H
    return SubgroupRef(parent, [h.conjugate(g) for h in H.generators], label=H.label)


def conjugate_key(H: GroupHandle, g: Permutation) -> frozenset:
    return frozenset(h.conjugate(g) for h in H.require_elements())


def centralizer(X: GroupHandle, y: Permutation, label="") -> SubgroupRef:
    """``C_X(y)`` by filtering the elements of ``X``."""
    if len(y) != X.degree:
        raise DegreeMismatch("element and group degrees differ")
    elems = [x for x in X.require_elements() if x.commutes_with(y)]
    return subgroup_from_elements(X, elems, label=label)


def centralizer_of(X: GroupHandle, Y: GroupHandle, label="") -> SubgroupRef:
    """``C_X(Y)``: elements of ``X`` commuting with every generator of ``Y``."""
    ys = Y.generators
    elems = [x for x in X.require_elements() if all(x.commutes_with(y) for y in ys)]
    return subgroup_from_elements(X, elems, label=label)


def centre(G: GroupHandle) -> SubgroupRef:
    return centralizer_of(G, G, label="Z")


def normalizes(g: Permutation, H: GroupHandle) -> bool:
    return all(h.conjugate(g) in H for h in H.generators)


def normalizer(X: GroupHandle, H: GroupHandle, label="") -> SubgroupRef:
    elems = [x for x in X.require_elements() if normalizes(x, H)]
    return subgroup_from_elements(X, elems, label=label)


def is_normal(N: GroupHandle, G: GroupHandle) -> bool:
    return N.issubgroup(G) and all(normalizes(g, N) for g in G.generators)


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Permutation
    size: int
    members: frozenset


def conjugacy_classes(G: GroupHandle) -> list:
    """Classes in order of first appearance in the element list."""
    elems = G.require_elements()
    gens = G._bfs_gens
    assigned = set()
    classes = []
    for e in elems:
        if e in assigned:
            continue
        orbit = [e]
        seen = {e}
        for x in orbit:
            for s in gens:
                y = x.conjugate(s)
                if y not in seen:
                    seen.add(y)
                    orbit.append(y)
        assigned |= seen
        classes.append(ConjugacyClass(e, len(orbit), frozenset(seen)))
    return classes


def conjugation_orbit(y: Permutation, X: GroupHandle) -> set:
    """Orbit of ``y`` under conjugation by ``X`` (generators only)."""
    orbit = [y]
    seen = {y}
    for x in orbit:
        for s in X.generators:
            z = x.conjugate(s)
            if z not in seen:
                seen.add(z)
                orbit.append(z)
    return seen


def normal_closure(G: GroupHandle, S: Sequence[Permutation], label="") -> SubgroupRef:
    """Smallest normal subgroup of ``G`` containing ``S``."""
    N = SubgroupRef(G, list(S), label=label)
    while True:
        new = []
        for s in N.generators:
            for g in G.generators:
                t = s.conjugate(g)
                if t not in N and t not in new:
                    new.append(t)
        if not new:
            return N
        N = SubgroupRef(G, list(N.generators) + new, label=label, seed=N)


def commutator_subgroup(H: GroupHandle, K: GroupHandle, parent: Optional[GroupHandle] = None,
                        label="") -> SubgroupRef:
    """``[H, K]``: normal closure in ``<H, K>`` of the generator commutators."""
    parent = parent or _common_parent(H, K)
    HK = SubgroupRef(parent, list(H.generators) + list(K.generators))
    comms = [commutator(h, k) for h in H.generators for k in K.generators]
    comms = [c for c in comms if not c.is_identity()]
    N = normal_closure(HK, comms, label=label)
    return relabel(N, label, parent)


def derived_subgroup(G: GroupHandle, label="") -> SubgroupRef:
    return commutator_subgroup(G, G, parent=G, label=label)


def _common_parent(H, K):
    if H.parent is not None and H.parent is K.parent:
        return H.parent
    if H.parent is K or K is H:
        return K
    if K.parent is H:
        return H
    if H.ambient is K.ambient:
        return H.ambient
    raise ValueError("subgroups do not share a parent")


def core(H: GroupHandle, G: GroupHandle, label="") -> SubgroupRef:
    """Largest normal subgroup of ``G`` contained in ``H``."""
    current = set(H.require_elements())
    while True:
        changed = False
        for g in G.generators:
            img = {h.conjugate(g) for h in current}
            if img != current:
                current &= img
                changed = True
        if not changed:
            break
    return subgroup_from_elements(G, current, label=label)


def exponent(G: GroupHandle) -> int:
    return math.lcm(1, *{g.order() for g in G.require_elements()})
