"""Reversed Dickson polynomials of the second kind over finite fields.

Exact arithmetic in F_q and F_{q^2}, several independent evaluators for
E_n(a, x), permutation tests, necessary-condition filters on n, and the
table of sums of E_n(1, a) over F_q.
"""

from .charsums import SumTable, compute_b, compute_c, solve_d, sum_table_bruteforce, sum_table_thm41
from .dickson import (
    E,
    EvalRequest,
    Family,
    FamilyTag,
    eval_direct,
    eval_E1_functional,
    eval_E1_recursive,
    eval_E1_via_f,
    eval_E_a0,
    eval_f,
    genfun_coeffs,
    quarter_value,
    reduce_index,
)
from .exceptions import (
    CharacteristicError,
    DicksonLabError,
    FieldError,
    FieldMismatchError,
    GuardExceeded,
    HypothesisViolation,
    InconsistencyError,
)
from .field import FieldElement, FieldSpec, arith, enumerate_field, make_field, power
from .necessary import FilterReport, filter_candidates
from .numtheory import binom_mod_p
from .permutation import PPVerdict, build_V, check_thm23, is_pp_exhaustive, is_pp_power_sum
from .quad import QuadElement, solve_parameterization, sqrt_in_q2
from .series import CoeffSeq

__version__ = "0.1.0"
