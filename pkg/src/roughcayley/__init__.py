"""Rough approximations of Cayley and pseudo-Cayley graphs over finite groups.

Groups are given by Cayley tables, subsets are bitmask-backed
:class:`ElementSet` values, and approximations are taken with respect to
the coset partition of a normal subgroup.
"""

from __future__ import annotations

from .approx import (
    RoughPair,
    RoughSubgroupClass,
    classify_rough_subgroup,
    is_definable,
    lower_approx,
    rough_pair,
    upper_approx,
)
from .errors import (
    ConnectionSetError,
    GraphError,
    GroupAxiomError,
    InvalidOrderError,
    PreconditionError,
    RoughCayleyError,
    UnknownElementError,
)
from .graphs import (
    ConnectionSet,
    Graph,
    cayley_graph,
    closed_vertex_sets,
    components,
    edge_connectivity,
    enumerate_connection_sets,
    generates,
    graph_intersection,
    graph_union,
    is_connected,
    is_edge_minimal_connected,
    is_minimal_cayley_set,
    is_optimal_connected,
    is_subgraph,
    make_connection_set,
    min_degree,
    pseudo_cayley_graph,
)
from .groups import (
    ElementSet,
    FiniteGroup,
    coset_partition,
    direct_product,
    enumerate_normal_subgroups,
    enumerate_subgroups,
    generated_subgroup,
    is_normal,
    is_subgroup,
    left_coset,
    make_cyclic,
    make_dihedral,
    make_from_table,
)
from .laws import LAWS, run_laws
from .rough_graphs import (
    RoughGraphPair,
    is_definable_by_orbit,
    is_edge_rough_generating,
    is_edge_rough_optimal,
    is_rough_generating,
    is_rough_optimal,
    is_vertex_rough_generating,
    is_vertex_rough_optimal,
    rough_edge_cayley,
    rough_graph_pair,
    rough_pseudo,
    rough_vertex_pseudo,
)

__version__ = "0.1.0"

__all__ = [
    "ConnectionSet",
    "ConnectionSetError",
    "ElementSet",
    "FiniteGroup",
    "Graph",
    "GraphError",
    "GroupAxiomError",
    "InvalidOrderError",
    "PreconditionError",
    "RoughCayleyError",
    "RoughGraphPair",
    "RoughPair",
    "RoughSubgroupClass",
    "UnknownElementError",
    "cayley_graph",
    "classify_rough_subgroup",
    "closed_vertex_sets",
    "components",
    "coset_partition",
    "direct_product",
    "edge_connectivity",
    "enumerate_connection_sets",
    "enumerate_normal_subgroups",
    "enumerate_subgroups",
    "generated_subgroup",
    "generates",
    "graph_intersection",
    "graph_union",
    "is_connected",
    "is_definable",
    "is_definable_by_orbit",
    "is_edge_minimal_connected",
    "is_edge_rough_generating",
    "is_edge_rough_optimal",
    "is_minimal_cayley_set",
    "is_normal",
    "is_optimal_connected",
    "is_rough_generating",
    "is_rough_optimal",
    "is_subgraph",
    "is_subgroup",
    "is_vertex_rough_generating",
    "is_vertex_rough_optimal",
    "left_coset",
    "lower_approx",
    "make_connection_set",
    "make_cyclic",
    "make_dihedral",
    "make_from_table",
    "min_degree",
    "pseudo_cayley_graph",
    "rough_edge_cayley",
    "rough_graph_pair",
    "rough_pair",
    "rough_pseudo",
    "rough_vertex_pseudo",
    "upper_approx",
]
