"""Text selectors naming subgroups of a group, as used on the command line.

``F``, ``F2``, ``Fstar``, ``Fstar2``, ``gammaInf``, ``gamma:k``, ``radical``,
``syl:p``, ``hall:p'``, ``hall:{p,q}``, ``gens:(1 2 3);(1 2)``, ``full``,
``trivial``.
"""

from __future__ import annotations

import re

from .errors import BadCycleNotation, UnknownSelector
from .groups import GroupHandle, SubgroupRef, relabel, subgroup_generated, trivial, whole
from .perm import parse_cycles
from .structure import (fitting, fitting_k, fstar_2, gamma, gamma_infinity, generalized_fitting,
                        soluble_radical)
from .sylow import hall, is_prime, pi, sylow

_NAMED = {
    "F": fitting,
    "F2": lambda G: fitting_k(G, 2),
    "Fstar": generalized_fitting,
    "Fstar2": fstar_2,
    "gammaInf": gamma_infinity,
    "radical": soluble_radical,
    "full": whole,
    "trivial": trivial,
}

_GAMMA = re.compile(r"^gamma:(\d+)$")
_SYL = re.compile(r"^syl:(\d+)$")
_HALL_CO = re.compile(r"^hall:(\d+)'$")
_HALL_SET = re.compile(r"^hall:\{([\d,\s]*)\}$")


def _prime(text, sel):
    p = int(text)
    if not is_prime(p):
        raise UnknownSelector(f"{p} is not prime in selector {sel!r}")
    return p


def resolve_selector(G: GroupHandle, selector: str) -> SubgroupRef:
    sel = selector.strip()
    if sel in _NAMED:
        return relabel(_NAMED[sel](G), sel, G)
    m = _GAMMA.match(sel)
    if m:
        k = int(m.group(1))
        if k < 1:
            raise UnknownSelector("gamma:k needs k >= 1")
        return relabel(gamma(G, k), sel, G)
    m = _SYL.match(sel)
    if m:
        return relabel(sylow(G, _prime(m.group(1), sel)), sel, G)
    m = _HALL_CO.match(sel)
    if m:
        p = _prime(m.group(1), sel)
        primes = [q for q in pi(G) if q != p]
        return relabel(hall(G, primes), sel, G)
    m = _HALL_SET.match(sel)
    if m:
        primes = [_prime(t, sel) for t in m.group(1).replace(",", " ").split()]
        return relabel(hall(G, primes), sel, G)
    if sel.startswith("gens:"):
        body = sel[len("gens:"):]
        try:
            gens = [parse_cycles(part, G.degree) for part in body.split(";") if part.strip()]
        except BadCycleNotation as exc:
            raise UnknownSelector(f"bad generators in {sel!r}: {exc}") from None
        return subgroup_generated(G, gens, label=sel)
    raise UnknownSelector(f"unknown selector {selector!r}")
