"""Corona products of graphs and certified adjacent-vertex-distinguishing
total colorings of them, with exact desk-scale oracles."""

from .graphs import (
    BipartitionCertificate,
    Center,
    CenterEdge,
    CopyEdge,
    CoronaProvenance,
    FanEdge,
    Graph,
    Outer,
    bipartition,
    build_graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    degree_stats,
    fan_edges,
    find_independent_set,
    format_graph,
    generalized_corona,
    is_connected,
    l_corona,
    parse_graph,
    path_graph,
    petersen_graph,
    simple_corona,
    star_graph,
)
from .colorings import (
    IncompleteColoringError,
    TotalColoring,
    VerificationReport,
    Violation,
    ViolationKind,
    color_set,
    format_coloring,
    missing_colors,
    parse_coloring,
    swap_color_classes,
    used_colors,
    verify_avd,
    verify_proper_total,
)
from .solver import (
    EXHAUSTED,
    BudgetExceededError,
    ColoringConstraints,
    ContradictoryConstraintsError,
    SearchBudget,
    avd_lower_bound,
    exact_avd_chromatic,
    exact_chromatic_index,
    exact_chromatic_number,
    exact_total_chromatic,
    find_constrained_avd_coloring,
    find_constrained_total_coloring,
)
from .bipartite import (
    NotBipartiteError,
    bipartite_avd_coloring,
    konig_edge_coloring,
)
from .constructions import (
    CertificationError,
    ConstructionResult,
    HypothesisViolatedError,
    NoApplicableTheoremError,
    NoDisjointPairError,
    TheoremAudit,
    TheoremTag,
    TraceStep,
    UnrealizableError,
    applicable_theorems,
    base_avd_coloring,
    color_corona_auto,
    color_corona_bip3,
    color_corona_complete,
    color_corona_diff1,
    color_corona_diff2,
    color_corona_diffk,
    color_generalized_corona,
    find_disjoint_missing_pair,
    format_trace,
    realize_missing_colors,
)

__all__ = [name for name in dir() if not name.startswith("_")]
