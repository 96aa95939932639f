"""Italian and perfect Italian domination on Sierpinski graphs S(K_n, t).

The package builds the graphs, constructs explicit optimal weight functions
with closed-form totals, verifies arbitrary weight functions, and certifies
optimality with independent exact solvers (exhaustive scan, path dynamic
program, branch-and-bound).
"""

from .constructions import (
    Construction,
    Regime,
    closed_form_italian,
    closed_form_perfect,
    construct,
    construct_kn,
    construct_level2,
    construct_level3plus,
    construct_path,
    regime_for,
)
from .domination import (
    ITALIAN,
    PERFECT,
    VARIANTS,
    VerificationReport,
    Violation,
    neighbor_sums,
    total_weight,
    verify,
    verify_idf,
    verify_pid,
)
from .errors import (
    CapacityError,
    InvalidInputError,
    OutOfRegimeError,
    SelfCheckError,
    SierpdomError,
)
from .graphs import (
    Graph,
    SierpinskiGraph,
    adjacent_by_rule,
    build_complete,
    build_from_edges,
    build_path,
    build_sierpinski,
    extreme_ranks,
    extreme_vertices,
    parse_label,
    rank_word,
    word_label,
    word_rank,
)
from .serialize import (
    canonical_json_bytes,
    graph_from_dict,
    graph_hash,
    graph_to_dict,
    to_dot,
    weights_from_dict,
    weights_to_dict,
)
from .solvers import (
    ENGINE_BRANCH_BOUND,
    ENGINE_EXHAUSTIVE,
    ENGINE_PATH_DP,
    EnumerationResult,
    SearchConfig,
    SolveResult,
    backend_name,
    enumerate_optima,
    solve_branch_bound,
    solve_exhaustive,
    solve_path_dp,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "Construction",
    "ENGINE_BRANCH_BOUND",
    "ENGINE_EXHAUSTIVE",
    "ENGINE_PATH_DP",
    "EnumerationResult",
    "Graph",
    "ITALIAN",
    "InvalidInputError",
    "OutOfRegimeError",
    "PERFECT",
    "Regime",
    "SearchConfig",
    "SelfCheckError",
    "SierpdomError",
    "SierpinskiGraph",
    "SolveResult",
    "VARIANTS",
    "VerificationReport",
    "Violation",
    "adjacent_by_rule",
    "backend_name",
    "build_complete",
    "build_from_edges",
    "build_path",
    "build_sierpinski",
    "canonical_json_bytes",
    "closed_form_italian",
    "closed_form_perfect",
    "construct",
    "construct_kn",
    "construct_level2",
    "construct_level3plus",
    "construct_path",
    "enumerate_optima",
    "extreme_ranks",
    "extreme_vertices",
    "graph_from_dict",
    "graph_hash",
    "graph_to_dict",
    "neighbor_sums",
    "parse_label",
    "rank_word",
    "regime_for",
    "solve_branch_bound",
    "solve_exhaustive",
    "solve_path_dp",
    "to_dot",
    "total_weight",
    "verify",
    "verify_idf",
    "verify_pid",
    "weights_from_dict",
    "weights_to_dict",
    "word_label",
    "word_rank",
]
