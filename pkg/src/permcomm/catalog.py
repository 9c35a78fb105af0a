"""Plain-text group catalog.

One block per group::

    group S4
    degree 4
    gen (1 2)
    gen (1 2 3 4)
    end

Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import os
from importlib import resources
from typing import Optional

from .errors import BadCycleNotation, DegreeMismatch, DuplicateLabel, IoFailure
from .groups import GroupHandle, Limits
from .perm import parse_cycles


def parse_catalog(text: str, limits: Optional[Limits] = None, source: str = "<string>") -> list:
    groups = []
    labels = set()
    block = None

    def fail(msg, line):
        raise BadCycleNotation(f"{source}: {msg}", line=line)

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        word, _, rest = line.partition(" ")
        rest = rest.strip()
        if word == "group":
            if block is not None:
                fail("'group' inside an open block", lineno)
            if not rest:
                fail("missing group label", lineno)
            if rest in labels:
                raise DuplicateLabel(f"{source}: line {lineno}: duplicate label {rest!r}")
            block = {"label": rest, "degree": None, "gens": [], "line": lineno}
        elif block is None:
            fail(f"{word!r} outside a group block", lineno)
        elif word == "degree":
            try:
                block["degree"] = int(rest)
            except ValueError:
                fail(f"bad degree {rest!r}", lineno)
            if block["degree"] < 1:
                fail("degree must be positive", lineno)
        elif word == "gen":
            if block["degree"] is None:
                fail("'gen' before 'degree'", lineno)
            try:
                block["gens"].append(parse_cycles(rest, block["degree"]))
            except BadCycleNotation as exc:
                fail(str(exc), lineno)
        elif word == "end":
            if block["degree"] is None:
                fail("block has no degree", lineno)
            try:
                G = GroupHandle(block["degree"], block["gens"], label=block["label"], limits=limits)
            except DegreeMismatch as exc:
                raise DegreeMismatch(f"{source}: line {block['line']}: {exc}") from None
            groups.append(G)
            labels.add(block["label"])
            block = None
        else:
            fail(f"unknown keyword {word!r}", lineno)
    if block is not None:
        fail(f"block {block['label']!r} is not closed", block["line"])
    return groups


def load_catalog(path, limits: Optional[Limits] = None) -> list:
    """Groups from a catalog file, or from every ``*.cat`` file in a directory.

    Labels must be unique across everything loaded in one call.
    """
    paths = [path]
    if os.path.isdir(path):
        paths = sorted(os.path.join(path, f) for f in os.listdir(path) if f.endswith(".cat"))
    out = []
    seen = set()
    for p in paths:
        try:
            with open(p, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise IoFailure(f"cannot read catalog {p}: {exc}") from exc
        for G in parse_catalog(text, limits=limits, source=os.path.basename(p)):
            if G.label in seen:
                raise DuplicateLabel(f"{p}: duplicate label {G.label!r}")
            seen.add(G.label)
            out.append(G)
    return out


def bundled_catalog(limits: Optional[Limits] = None) -> list:
    """The catalog shipped with the package (SL(2,5), Q8 and mixed products)."""
    text = resources.files("permcomm").joinpath("data/corpus.cat").read_text(encoding="utf-8")
    return parse_catalog(text, limits=limits, source="corpus.cat")


def format_catalog(groups) -> str:
    lines = []
    for G in groups:
        lines += [f"group {G.label}", f"degree {G.degree}"]
        lines += [f"gen {g}" for g in G.generators]
        lines += ["end", ""]
    return "\n".join(lines)
