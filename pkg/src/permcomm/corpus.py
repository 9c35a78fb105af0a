"""Named groups: built-in families, products, wreath models and catalog entries."""

from __future__ import annotations

import re
from typing import Optional

from .catalog import bundled_catalog, load_catalog
from .errors import UnknownSelector
from .families import builtin, direct_product, wreath_product
from .groups import GroupHandle, Limits

# every order is at most 2000
BUILTIN_NAMES = (
    "C1", "C2", "C3", "C4", "C5", "C6", "C8", "C12",
    "C2xC2", "C2xC2xC2", "C2xC4", "C3xC3",
    "S3", "D8", "D10", "D12", "D14", "D18",
    "A4", "S4", "A5", "S5", "A6", "S6",
    "C2wrC2", "C2wrS3", "C3wrC3", "C3wrS3",
    "S3xS3", "D8xC3", "C3xS3", "A4xC2", "S4xC2", "A5xC2",
    "D6xD10", "D6xD10xD14",
)

_WREATH = re.compile(r"^C(\d+)wr([CDSA]\d+)$")


def _single(name: str, limits):
    m = _WREATH.match(name)
    if m:
        top = builtin(m.group(2), limits)
        return wreath_product(int(m.group(1)), top, limits=limits).group
    return builtin(name, limits)


def group_by_name(name: str, catalog=(), limits: Optional[Limits] = None) -> GroupHandle:
    """Resolve ``"S4"``, ``"D6xD10"``, ``"C3wrS5"`` or a catalog label."""
    name = name.strip()
    for G in catalog:
        if G.label == name:
            return G
    parts = name.split("x")
    try:
        factors = [_single(p, limits) for p in parts]
    except ValueError:
        raise UnknownSelector(f"unknown group {name!r}") from None
    if len(factors) == 1:
        return factors[0]
    return direct_product(factors, label=name, limits=limits).group


def builtin_corpus(limits: Optional[Limits] = None) -> list:
    return [group_by_name(n, limits=limits) for n in BUILTIN_NAMES]


def full_corpus(limits: Optional[Limits] = None, catalog_dir=None) -> list:
    """Built-in groups followed by catalog groups (bundled, or from ``catalog_dir``)."""
    extra = load_catalog(catalog_dir, limits=limits) if catalog_dir else bundled_catalog(limits)
    return builtin_corpus(limits) + extra
