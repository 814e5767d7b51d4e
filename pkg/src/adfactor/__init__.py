"""Anti-directed 2-factors and Hamilton cycles in directed graphs.

Decision procedures with validating certificates, the bipartite 2-factor and
deficiency machinery they reduce to, the cubic edge-coloring reduction, and
exact arbitrary-precision verification of the equipartition counting bounds.
"""
from .graphs import (
    CycleCover,
    Digraph,
    GraphFormatError,
    SimpleGraph,
    min_degree,
    parse_digraph,
    parse_simple_graph,
    serialize_digraph,
    serialize_simple_graph,
    validate_anti_directed_cover,
)
from .bipartite import (
    BipartiteInstance,
    DeficiencyWitness,
    Equipartition,
    build_bipartite,
    chvatal_condition_holds,
    find_deficient_set,
    has_hamilton_cycle,
    has_two_factor,
    neighborhood_multiset,
    two_factor_degree_condition_mod0,
    two_factor_degree_condition_mod2,
)
from .solver import (
    Certificate,
    decide_adf,
    decide_adhc,
    directed_two_factor_exists,
    equipartition_census,
    scan_half_degree_conjecture,
)
from .counting import (
    CountReport,
    ThresholdBracket,
    bad_partition_bound,
    bad_partition_bound_strong,
    classical_conditions,
    equipartition_degree_count,
    order_threshold,
    rising_ratio_bound_holds,
    scan_marginal_orders,
    term_ratio_recursion_holds,
    total_equipartitions,
    verify_count_inequality,
)
from .reduction import (
    adf_to_coloring,
    coloring_to_adf,
    cubic_to_digraph,
    three_edge_color_direct,
    three_edge_colorable_via_adf,
)

__version__ = "0.1.0"

__all__ = [
    "BipartiteInstance",
    "Certificate",
    "CountReport",
    "CycleCover",
    "DeficiencyWitness",
    "Digraph",
    "Equipartition",
    "GraphFormatError",
    "SimpleGraph",
    "ThresholdBracket",
    "adf_to_coloring",
    "bad_partition_bound",
    "bad_partition_bound_strong",
    "build_bipartite",
    "chvatal_condition_holds",
    "classical_conditions",
    "coloring_to_adf",
    "cubic_to_digraph",
    "decide_adf",
    "decide_adhc",
    "directed_two_factor_exists",
    "equipartition_census",
    "equipartition_degree_count",
    "find_deficient_set",
    "has_hamilton_cycle",
    "has_two_factor",
    "min_degree",
    "neighborhood_multiset",
    "order_threshold",
    "parse_digraph",
    "parse_simple_graph",
    "rising_ratio_bound_holds",
    "scan_half_degree_conjecture",
    "scan_marginal_orders",
    "serialize_digraph",
    "serialize_simple_graph",
    "term_ratio_recursion_holds",
    "three_edge_color_direct",
    "three_edge_colorable_via_adf",
    "total_equipartitions",
    "two_factor_degree_condition_mod0",
    "two_factor_degree_condition_mod2",
    "validate_anti_directed_cover",
    "verify_count_inequality",
]
