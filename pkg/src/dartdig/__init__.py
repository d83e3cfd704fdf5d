"""Dart digraphs, squared dart digraphs, and certificates of their strong
connectivity."""

from .analysis import SccPartition, coloring_is_proper, is_bipartite_digraph, is_strongly_connected, scc
from .constructions import (
    DartDigraph,
    SizeLimitError,
    SquaredDartDigraph,
    a2d_coloring,
    a2d_in_neighbors,
    a2d_out_neighbors,
    build_dart_digraph,
    dart_digraph_coloring,
    materialize_a2d,
    squared_dart_digraph,
)
from .generators import complete, complete_bipartite, cycle, enumerate_connected_min3, named, petersen, random_min_degree3
from .graph import (
    Dart,
    Graph,
    GraphError,
    HypothesisError,
    TwoColoring,
    darts,
    from_edge_list,
    is_connected,
    is_two_dart,
    min_degree,
    parse_edge_list,
    proper_two_coloring,
)
from .kernels import BACKEND
from .walks import (
    ArcCycleTriple,
    Balloon,
    InternalInconsistencyError,
    Walk,
    a2d_witness_walk,
    arc_cycle_triple,
    claim1_walk,
    claim2_walk,
    d_witness_walk,
    equal_length_walks,
    find_balloon,
    validate_arc_cycle,
    validate_s_arc,
    validate_walk_in_a2d,
    validate_walk_in_d,
)

__version__ = "0.1.0"
