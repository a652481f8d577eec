"""Extremal families of {0,+1,-1} vectors under forbidden scalar products.

The package enumerates sign vectors with fixed plus/minus support sizes,
solves for maximum families avoiding a forbidden set of pairwise scalar
products (exact branch-and-bound with an independent brute-force oracle),
builds the standard extremal constructions, and verifies the closed-form
counts and inequalities attached to them.
"""

from .vectors import (
    Profile,
    SignedVector,
    SuffixMarkers,
    VectorFamily,
    dimension_cap,
    enumerate_all,
    min_suffix_sum,
    scalar_product,
    set_dimension_cap,
    suffix_markers,
)
from .shifting import ShiftMove, all_moves, compress, is_shifted, precedes, precedes_oracle, shift_ij
from .witness import (
    ClaimCheck,
    ClaimReport,
    WitnessTrace,
    check_conditions,
    construct_witness,
    verify_trace_claims,
)
from .formulas import (
    DegenerateInstanceError,
    EkrValue,
    GBounds,
    IncrementReport,
    IncrementValue,
    RatioAlpha,
    SplitValue,
    binom,
    family_size,
    g_bounds,
    g_closed_l1,
    g_ekr_value,
    increment_value,
    n0_threshold,
    p_increment_report,
    p_split,
    ratio_and_alpha,
    xy_family_sizes,
)
from .constructions import (
    ClassificationLabel,
    classify_vector,
    ekr_family,
    family_xy_tm,
    inductive_extend,
    partition_by_last,
    split_family,
)
from .solver import (
    ConflictGraph,
    FamilyCheck,
    ForbiddenSpec,
    SolveResult,
    VertexCapExceeded,
    build_conflict_graph,
    graph_from_family,
    greedy_seed_g,
    mis_bruteforce,
    mis_exact,
    solve_extremal,
    verify_family,
)
from .bipartite import (
    BipartiteGraph,
    IrregularityError,
    build_g_prime,
    build_g_tm,
    check_biregular,
    lemma3_check,
    random_biregular,
    random_independent_set,
)
from .cache import ResultCache, cache_key
from .suites import CaseResult, VerificationReport, run_suite, suite_names

__version__ = "0.1.0"

__all__ = [
    "Profile",
    "SignedVector",
    "SuffixMarkers",
    "VectorFamily",
    "dimension_cap",
    "enumerate_all",
    "min_suffix_sum",
    "scalar_product",
    "set_dimension_cap",
    "suffix_markers",
    "ShiftMove",
    "all_moves",
    "compress",
    "is_shifted",
    "precedes",
    "precedes_oracle",
    "shift_ij",
    "ClaimCheck",
    "ClaimReport",
    "WitnessTrace",
    "check_conditions",
    "construct_witness",
    "verify_trace_claims",
    "DegenerateInstanceError",
    "EkrValue",
    "GBounds",
    "IncrementReport",
    "IncrementValue",
    "RatioAlpha",
    "SplitValue",
    "binom",
    "family_size",
    "g_bounds",
    "g_closed_l1",
    "g_ekr_value",
    "increment_value",
    "n0_threshold",
    "p_increment_report",
    "p_split",
    "ratio_and_alpha",
    "xy_family_sizes",
    "ClassificationLabel",
    "classify_vector",
    "ekr_family",
    "family_xy_tm",
    "inductive_extend",
    "partition_by_last",
    "split_family",
    "ConflictGraph",
    "FamilyCheck",
    "ForbiddenSpec",
    "SolveResult",
    "VertexCapExceeded",
    "build_conflict_graph",
    "graph_from_family",
    "greedy_seed_g",
    "mis_bruteforce",
    "mis_exact",
    "solve_extremal",
    "verify_family",
    "BipartiteGraph",
    "IrregularityError",
    "build_g_prime",
    "build_g_tm",
    "check_biregular",
    "lemma3_check",
    "random_biregular",
    "random_independent_set",
    "ResultCache",
    "cache_key",
    "CaseResult",
    "VerificationReport",
    "run_suite",
    "suite_names",
]
