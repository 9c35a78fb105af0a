"""Quotients ``G/N`` realised as the action of ``G`` on the right cosets of ``N``."""

from __future__ import annotations

from .errors import EnumerationCapExceeded, NotNormal
from .groups import GroupHandle, SubgroupRef, is_normal
from .perm import Permutation, _new

# membership tests allowed when the source is too large to enumerate
_UNENUMERATED_BUDGET = 200_000


class QuotientMap:
    """``source -> source/kernel``; coset 0 is the kernel itself."""

    def __init__(self, source: GroupHandle, kernel: GroupHandle, label: str = ""):
        if not is_normal(kernel, source):
            raise NotNormal(f"{kernel!r} is not normal in {source!r}")
        index = source.order // kernel.order
        cap = source.limits.coset_degree_cap
        if index > cap:
            raise EnumerationCapExceeded(f"index {index} exceeds coset degree cap {cap}")
        self.source = source
        self.kernel = kernel
        self.index = index
        if source.enumerable:
            self._build_from_elements()
        else:
            self._build_by_membership()
        gens = [self.project(g) for g in source.generators]
        image_label = label or f"{source.label or 'G'}/{kernel.label or 'N'}"
        self.image = GroupHandle(max(index, 1), gens, label=image_label, limits=source.limits)

    def _build_from_elements(self):
        coset_of = {}
        reps = []
        kern = self.kernel.require_elements()
        for g in self.source.elements:
            if g in coset_of:
                continue
            i = len(reps)
            reps.append(g)
            for n in kern:
                coset_of[n * g] = i
        self.transversal = tuple(reps)
        self._coset_of = coset_of
        self._locate = coset_of.__getitem__

    def _build_by_membership(self):
        if self.index * self.index * len(self.source.generators) > _UNENUMERATED_BUDGET:
            raise EnumerationCapExceeded(
                f"coset table of index {self.index} on an unenumerated group is too large")
        N = self.kernel
        reps = [self.source.identity]
        inv = [self.source.identity]

        def locate(g):
            for j, r in enumerate(inv):
                if g * r in N:
                    return j
            return None

        for r in reps:
            for s in self.source.generators:
                t = r * s
                if locate(t) is None:
                    reps.append(t)
                    inv.append(t.inverse())
        self.transversal = tuple(reps)
        self._locate = locate

    def coset_index(self, g: Permutation) -> int:
        return self._locate(g)

    def project(self, g: Permutation) -> Permutation:
        loc = self._locate
        return _new(Permutation, (loc(r * g) for r in self.transversal))

    def lift(self, h: Permutation) -> Permutation:
        """A coset representative mapping to the image element ``h``."""
        return self.transversal[h[0]]

    def project_subgroup(self, H: GroupHandle, label="") -> SubgroupRef:
        return SubgroupRef(self.image, [self.project(h) for h in H.generators], label=label)

    def preimage(self, Hbar: GroupHandle, label="") -> SubgroupRef:
        gens = list(self.kernel.generators) + [self.lift(h) for h in Hbar.generators]
        return SubgroupRef(self.source, gens, label=label)


def quotient(G: GroupHandle, N: GroupHandle, label: str = "") -> QuotientMap:
    return QuotientMap(G, N, label=label)
