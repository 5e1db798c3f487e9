"""Effective Pillai-type equations G_n - H_m = f over the rational function field Q(x)."""

from .bounds import (
    BoundParams,
    bm_bound,
    corollary_bound,
    corollary_report,
    theorem1_bound,
    theorem2_bound,
    theorem3_bound,
)
from .config import ProblemConfig, config_from_mapping, load_config
from .errors import *  # noqa: F401,F403
from .field import ONE, X, ZERO, Poly, RatFunc, as_ratfunc, poly_gcd, squarefree_factors
from .independence import SeparatingPair, find_separating_pair, is_mult_independent, lemma2_bound
from .parser import parse_expression
from .places import (
    INFINITY,
    Divisor,
    Finite,
    Place,
    PlaceBasis,
    divisor,
    divisor_vector,
    gcd_free_basis,
    height,
    height_via_divisor,
    is_s_unit,
    s_set_size,
    s_unit_spec,
    valuation,
)
from .recurrences import (
    HypothesisReport,
    Recurrence,
    apply_shift,
    check_no_multiple_values,
    check_theorem1_hypotheses,
    check_theorem2_hypotheses,
    check_theorem3_hypotheses,
    eval_recurrence,
    find_nu_dominant,
    immediate_effect_threshold,
    relevant_set,
    weak_coefficients_threshold,
)
from .report import BoundReport, dumps
from .solver import (
    DoubleRepSet,
    SolutionSet,
    brute_force_oracle,
    corollary_solve,
    double_rep_oracle,
    solve_double_rep,
    solve_fixed_f,
)

__version__ = "0.1.0"
