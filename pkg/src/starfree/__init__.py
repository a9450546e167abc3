"""Kneser graphs, star-free and local colorings, exact solvers, and the
Tucker-Ky Fan labeling machinery on the cross-polytope triangulation."""

from .errors import (
    CascadeViolationError,
    InputError,
    InternalConsistencyError,
    PreconditionError,
    ResourceLimitError,
    ToolkitError,
)
from .subsets import (
    KSubset,
    binomial,
    colex_rank,
    colex_unrank,
    iter_colex_subsets,
    subset_order_less,
)
from .graphs import (
    Graph,
    KneserGraph,
    build_kneser,
    complete_graph,
    cycle_graph,
    empty_graph,
    export_dimacs,
    induced_subgraph,
    parse_dimacs,
    path_graph,
    star_graph,
)
from .coloring import (
    Coloring,
    Violation,
    coloring_to_text,
    coloring_value,
    parse_coloring_text,
    shift_colors,
    verify_local,
    verify_proper,
    verify_star_free,
)
from .constructions import (
    CascadeReport,
    ReduceResult,
    check_cascade,
    double_coloring,
    extend_coloring,
    ladder_coloring,
    reduce_coloring,
)
from .hilton_milner import (
    IntersectingFamily,
    NonstarSearchResult,
    common_element,
    hm_bound,
    max_nonstar_intersecting,
)
from .solver import (
    DecideResult,
    SolveResult,
    decide,
    kneser_default_bounds,
    optimize,
)
from .cnf import decode_model, export_cnf, parse_cnf, sat_brute_force
from .fan import (
    AlternatingReport,
    FanLabeling,
    LabelingViolation,
    analyze_alternating,
    build_paper_labeling,
    comparable,
    count_alternating,
    enumerate_maximal_chains,
    find_complementary_edge,
    maximal_chain_count,
    random_antipodal_labeling,
    random_valid_labeling,
    validate_labeling,
)
from .bounds import BoundsReport, ineq1_holds, ineq2_holds, report, sweep, theorem1_ratio_check

__version__ = "0.1.0"
