"""Exact combinatorics of G-parking functions, acyclic orientations and spanning trees."""

from .diffuse import (
    DiffuseState,
    diffuse_to_orientation,
    enumerate_diffuse,
    hat_graph,
    is_diffuse,
    orientation_to_diffuse,
)
from .graph import (
    BACKWARD,
    FORWARD,
    UNDIRECTED,
    Arborescence,
    Graph,
    MixedOrientation,
    Orientation,
    build_graph,
    cartesian_product,
    complete_graph,
    cycle_graph,
    diamond,
    enumerate_spanning_trees,
    hypercube,
    named_graph,
    path_graph,
    random_connected_graph,
    reverse_orientation,
    star_graph,
)
from .orientations import (
    count_unique_source,
    enumerate_acyclic,
    enumerate_unique_source,
    extended_dhar,
    is_acyclic,
    orientation_to_parking,
)
from .parking import (
    ParkingFunction,
    count_by_inclusion_exclusion,
    dom_size,
    dominates_pf,
    enumerate_maximum,
    enumerate_parking,
    greedy_maximum,
    is_maximum,
    is_parking,
    maximal_dominators,
    meet,
)
from .polynomials import (
    BivariatePolynomial,
    UnivariatePolynomial,
    chromatic_polynomial,
    lambda_coefficient_abs,
    parking_generating_polynomial,
    spanning_tree_count,
    tutte_polynomial,
)
from .products import (
    box_parking,
    canonical_qn,
    is_canonical,
    is_semi_canonical,
    qn_dom_count,
    qn_total_count,
)
from .trees import (
    BrokenCircuitReport,
    SpanningTree,
    all_spanning_trees,
    broken_circuit_edges,
    is_safe,
    orientation_to_safe_tree,
    parking_to_tree,
    power_order,
    safe_tree_to_orientation,
    tree_to_parking,
)

__version__ = "0.1.0"
