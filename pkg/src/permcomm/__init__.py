"""Exact commuting probabilities and structure of finite permutation groups."""

__version__ = "0.1.0"

from .errors import (BadCycleNotation, DegreeMismatch, DuplicateLabel, EnumerationCapExceeded,
                     FormulaMismatch, HallSearchFailed, IoFailure, NotAMember, NotNormal,
                     NotSoluble, PermCommError, PreconditionNotMet, UnknownSelector)
from .perm import Permutation, parse_cycles, format_cycles, commutator
from .groups import GroupHandle, Limits, SubgroupRef, group_from_generators, subgroup_generated
from .families import (DirectProduct, WreathProduct, alternating, builtin, cyclic, dihedral,
                       direct_product, symmetric, wreath_product)
from .quotient import QuotientMap, quotient
from .sylow import hall, hall_all, pi, sylow, sylow_all
from .structure import (fitting, fitting_k, fstar_2, gamma, gamma_infinity, generalized_fitting,
                        is_nilpotent, is_soluble, soluble_radical, structure_report)
from .commprob import AUDIT, PrStarReport, pr, pr_centralizer, pr_pairs, pr_product, pr_star

import types as _types

__all__ = sorted(name for name, obj in globals().items()
                 if not name.startswith("_") and not isinstance(obj, _types.ModuleType))
