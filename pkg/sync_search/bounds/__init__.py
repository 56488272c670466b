from sync_search.bounds.franklpin import (
    BoundReport,
    FPSequence,
    build_bound_report,
    frankl_limit,
    greedy_sequence,
    prop2_bound,
    prop3_bound,
    rank_descent_bound,
    theorem2_bound,
    theorem4_step,
    unary_sequence,
    unary_stats,
    validate_sequence,
)
from sync_search.bounds.onecluster import (
    D,
    CyclicVector,
    Dstar,
    circulant_dim,
    competitor_bounds,
    corollary2_bound,
    cyclic_period,
    necklaces,
    prime_cycle_bound,
    rough_estimate_bound,
    sum_dstar,
    theorem5_bound,
    warm_cache,
)
from sync_search.bounds.polynomial import IntPolynomial, cyclotomic
