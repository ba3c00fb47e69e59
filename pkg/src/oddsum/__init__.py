"""Exact arithmetic for partial sums of the largest-odd-divisor function.

Evaluators for V, U, G and their deviations v, u, g (each with an
O(n) oracle and an O(log n) digit-walking form), block extrema of g,
the solved equality-set enumerations, and a checker harness that
verifies every sharp bound and identity mechanically.
"""

from .bitcore import (
    BinaryDigits,
    DomainError,
    ResourceLimitError,
    block_range,
    floor_lg,
    format_rational,
    hat,
    parse_rational,
    popcount,
    round_pow2_over_3,
    tilde,
    to_digits,
)
from .deviations import (
    dev_g,
    dev_g_digit,
    dev_u,
    dev_u_closed,
    dev_v,
    dev_v_recur,
    h_eval,
    two_stage_g,
)
from .extremal import (
    EQUALITY_KINDS,
    ExtremalReport,
    SkeletonPair,
    argmax_g,
    block_g_values,
    equality_set,
    lambda_block,
    lambda_block_brute,
    lambda_m,
    perfect_mean_solutions,
    scan_g_below,
    skeleton,
    theta,
)
from .sums import (
    CESARO_FUNCTIONS,
    DEFAULT_BRUTE_CAP,
    alpha,
    cesaro_limit,
    cesaro_mean,
    g_brute,
    g_fast,
    scan_sums,
    u_brute,
    u_fast,
    v_brute,
    v_fast,
)
from .verify import (
    CLAIMS,
    Counterexample,
    Evaluators,
    RangeConfig,
    THEOREM_IDS,
    VerifyReport,
    check,
    run_all,
)

__version__ = "1.0.0"
