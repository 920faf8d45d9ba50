from .lambda1 import (
    NoNegativeRoot,
    RootInterval,
    compare_lambda,
    lambda1,
    lambda1_of,
    root_at_least,
    root_at_most,
)
from .checks import (
    HOLDS,
    NOT_APPLICABLE,
    VIOLATED,
    BoundEntry,
    BoundReport,
    CounterexampleReport,
    bound_report,
    check_heilmann_lieb_matching,
    check_lambda1_monotone_edge,
    check_lambda1_monotone_vertex,
    check_schlafli_counterexample,
    check_simplicial_upper_bound,
    check_trivial_lower_bound,
    check_weak_clawfree_bound,
    even_part_in_square,
    lll_modulus_bound,
    simplicial_upper_bound,
)
from .divisibility import (
    DivisibilityCertificate,
    verify_divisibility,
    verify_godsil_matching_divisibility,
)
