"""Deterministic Schreier-Sims stabilizer chains.

Each level stores a base point, the strong generators fixing all earlier
base points, and an explicit transversal ``point -> u`` with ``b^u = point``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .perm import Permutation


@dataclass
class _Level:
    point: int
    gens: list = field(default_factory=list)
    transversal: dict = field(default_factory=dict)

    def rebuild_orbit(self, identity):
        trans = {self.point: identity}
        queue = [self.point]
        for pt in queue:
            u = trans[pt]
            for s in self.gens:
                img = s[pt]
                if img not in trans:
                    trans[img] = u * s
                    queue.append(img)
        self.transversal = trans


class StabChain:
    """Base and strong generating set for ``<gens>`` on ``degree`` points."""

    def __init__(self, degree: int, gens):
        self.degree = degree
        self.identity = Permutation.identity(degree)
        gens = [g for g in gens if not g.is_identity()]
        levels: list[_Level] = []
        for g in gens:
            if all(g[lv.point] == lv.point for lv in levels):
                levels.append(_Level(point=g.support()[0]))
        for i, lv in enumerate(levels):
            lv.gens = [g for g in gens if all(g[levels[j].point] == levels[j].point for j in range(i))]
            lv.rebuild_orbit(self.identity)
        self._levels = levels
        self._complete()
        self.base = tuple(lv.point for lv in levels)
        self.orbit_sizes = tuple(len(lv.transversal) for lv in levels)
        order = 1
        for k in self.orbit_sizes:
            order *= k
        self.order = order

    def _strip(self, g, start):
        levels = self._levels
        for i in range(start, len(levels)):
            lv = levels[i]
            img = g[lv.point]
            u = lv.transversal.get(img)
            if u is None:
                return g, i
            g = g * u.inverse()
        return g, len(levels)

    def _complete(self):
        levels = self._levels
        i = len(levels) - 1
        while i >= 0:
            lv = levels[i]
            found = None
            for pt, u in lv.transversal.items():
                for s in lv.gens:
                    us = u * s
                    h = us * lv.transversal[us[lv.point]].inverse()
                    if h.is_identity():
                        continue
                    r, j = self._strip(h, i + 1)
                    if j < len(levels) or not r.is_identity():
                        found = (r, j)
                        break
                if found:
                    break
            if found is None:
                i -= 1
                continue
            r, j = found
            if j == len(levels):
                levels.append(_Level(point=r.support()[0]))
            for k in range(i + 1, j + 1):
                levels[k].gens.append(r)
                levels[k].rebuild_orbit(self.identity)
            i = j

    def contains(self, g: Permutation) -> bool:
        if len(g) != self.degree:
            return False
        r, j = self._strip(g, 0)
        return j == len(self._levels) and r.is_identity()

    def transversal(self, i: int) -> dict:
        return self._levels[i].transversal

    def strong_generators(self) -> list:
        return list(self._levels[0].gens) if self._levels else []

    def __len__(self):
        return len(self._levels)
