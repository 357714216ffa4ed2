"""Exact counting of covering cycles, Euler cycles and their determinant identity."""

from .algebra import (
    IntMatrix,
    Polynomial,
    PowerSeries,
    det_one_minus_z,
    series_div,
    series_exp,
    series_log,
    series_mul,
    trace_power,
)
from .census import (
    CensusTable,
    census_table,
    euler_count,
    hamiltonian_count,
    mobius,
    omega,
    omega_directed,
    theta,
    theta_directed,
)
from .errors import ConsistencyError, GraphFormatError, PreconditionError
from .graph import (
    DirectedEdgeSpace,
    MultiGraph,
    delete_edges,
    directed_edge_matrix,
    directed_vertex_matrix,
    edge_adjacency_matrix,
    parse_graph,
    prune_leaves,
    symmetrize,
)
from .series import (
    check_identities,
    d_from_determinants,
    d_from_exp,
    d_from_partitions,
    h_series,
    verify,
)

__all__ = [
    "CensusTable",
    "ConsistencyError",
    "DirectedEdgeSpace",
    "GraphFormatError",
    "IntMatrix",
    "MultiGraph",
    "Polynomial",
    "PowerSeries",
    "PreconditionError",
    "census_table",
    "check_identities",
    "d_from_determinants",
    "d_from_exp",
    "d_from_partitions",
    "delete_edges",
    "det_one_minus_z",
    "directed_edge_matrix",
    "directed_vertex_matrix",
    "edge_adjacency_matrix",
    "euler_count",
    "h_series",
    "hamiltonian_count",
    "mobius",
    "omega",
    "omega_directed",
    "parse_graph",
    "prune_leaves",
    "series_div",
    "series_exp",
    "series_log",
    "series_mul",
    "symmetrize",
    "theta",
    "theta_directed",
    "trace_power",
    "verify",
]
