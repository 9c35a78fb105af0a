"""Permutations of {1..n} stored as tuples of 0-based images.

Composition is left to right: ``x * y`` applies ``x`` first, then ``y``.
Commutators follow the same convention, ``[x, y] = x^-1 y^-1 x y``.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Sequence

from .errors import BadCycleNotation, DegreeMismatch

_new = tuple.__new__


class Permutation(tuple):
    """A bijection of ``range(degree)``; ``p[i]`` is the image of point ``i``.

    Printing and parsing use 1-based points, as in cycle notation.
    """

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        p = _new(cls, images)
        if sorted(p) != list(range(len(p))):
            raise ValueError(f"not a permutation: {tuple(p)}")
        return p

    @classmethod
    def from_images(cls, images: Sequence[int]) -> "Permutation":
        """Build from a 1-based image table such as ``[2, 3, 1]``."""
        return cls(i - 1 for i in images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return _new(cls, range(degree))

    @property
    def degree(self) -> int:
        return len(self)

    @property
    def images(self) -> tuple[int, ...]:
        """1-based image table."""
        return tuple(i + 1 for i in self)

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(other) != len(self):
            raise DegreeMismatch(f"degrees {len(self)} and {len(other)}")
        return _new(Permutation, map(other.__getitem__, self))

    def __rmul__(self, other):
        return NotImplemented

    def __add__(self, other):
        raise TypeError("permutations do not support +")

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(len(self))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, j in enumerate(self):
            inv[j] = i
        return _new(Permutation, inv)

    def conjugate(self, g: "Permutation") -> "Permutation":
        """``g^-1 * self * g``; relabels the points of ``self`` through ``g``."""
        out = [0] * len(self)
        for i, j in enumerate(self):
            out[g[i]] = g[j]
        return _new(Permutation, out)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self))

    def commutes_with(self, other: "Permutation") -> bool:
        return all(other[a] == self[b] for a, b in zip(self, other))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 0-based, each starting at its smallest point."""
        seen = [False] * len(self)
        out = []
        for i in range(len(self)):
            if seen[i] or self[i] == i:
                seen[i] = True
                continue
            cyc = [i]
            seen[i] = True
            j = self[i]
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = self[j]
            out.append(tuple(cyc))
        return out

    def cycle_count(self) -> int:
        """Number of cycles including fixed points."""
        return len(self) - sum(len(c) - 1 for c in self.cycles())

    def order(self) -> int:
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def support(self) -> list[int]:
        return [i for i, j in enumerate(self) if i != j]

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Permutation({self}, degree={len(self)})"


def commutator(x: Permutation, y: Permutation) -> Permutation:
    return x.inverse() * y.inverse() * x * y


def compose(p: Permutation, q: Permutation) -> Permutation:
    return p * q


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse disjoint-cycle notation such as ``"(1 2 3)(4 5)"``.

    Points are separated by whitespace or commas. Omitted points are fixed;
    ``""`` and ``"()"`` give the identity.
    """
    if degree < 1:
        raise BadCycleNotation(f"degree must be positive, got {degree}")
    images = list(range(degree))
    seen = set()
    pos = 0
    s = text.strip()
    for m in _CYCLE.finditer(s):
        if s[pos:m.start()].strip():
            raise BadCycleNotation(f"unexpected text {s[pos:m.start()]!r} in {text!r}")
        pos = m.end()
        body = m.group(1).replace(",", " ").split()
        try:
            pts = [int(t) for t in body]
        except ValueError:
            raise BadCycleNotation(f"non-integer point in {text!r}") from None
        for pt in pts:
            if not 1 <= pt <= degree:
                raise BadCycleNotation(f"point {pt} outside 1..{degree} in {text!r}")
            if pt in seen:
                raise BadCycleNotation(f"point {pt} repeated in {text!r}")
            seen.add(pt)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            images[a - 1] = b - 1
    if s[pos:].strip():
        raise BadCycleNotation(f"unexpected text {s[pos:]!r} in {text!r}")
    return _new(Permutation, images)


def format_cycles(p: Permutation) -> str:
    return str(p)


def from_cycles(degree: int, *cycles: Sequence[int]) -> Permutation:
    """Build from 1-based cycles given as sequences."""
    return parse_cycles("".join("(" + " ".join(map(str, c)) + ")" for c in cycles), degree)
