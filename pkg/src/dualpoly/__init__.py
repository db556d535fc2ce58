"""Polynomial functions and permutations on dual-number rings R[a1..ak]."""

from .counting import (CountReport, StabResult, count, count_functions_enum, count_functions_formula,
                       count_perms_enum, count_perms_formula, index_N, index_Nprime, index_via_linear,
                       stab_independence_check, stab_order, verify_identities)
from .dual import DualElement, DualRing, parse_ring
from .errors import (BudgetExceeded, DualPolyError, NotAUnitError, NotLocalError, ParseError,
                     PreconditionError, RingMismatchError, RingSpecError)
from .null_ideals import (canonical_monic_null_base, class_key, canonical_monic_null_dual, in_N, in_Nprime,
                          is_null_on_dual, same_function)
from .permutations import (PermVerdict, construct_pair_field, is_perm, is_perm_directsum, is_perm_local,
                           is_perm_on_base, is_perm_on_dual)
from .poly import DualPoly, FunctionTable, PairTable, Poly, pair_table, eval_dual_fast, eval_dualpoly, format_poly, induce, parse_poly
from .rings import FiniteRing, RingElement, build_ring, parse_ring_spec

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
