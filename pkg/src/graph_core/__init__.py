"""Graph and strict-partial-order values."""

from graph_core.graph import (
    Edge,
    Graph,
    complement,
    components,
    graph_from_edges,
    induced_subgraph,
    is_connected,
    remove_vertices,
    universal_vertices,
)
from graph_core.order import (
    Pair,
    StrictPartialOrder,
    incomparability_graph,
    is_associated,
)
from graph_core.paths import Path, is_minimal_path, refine_to_minimal, validate_path

__all__ = [
    "Edge",
    "Graph",
    "Pair",
    "Path",
    "StrictPartialOrder",
    "complement",
    "components",
    "graph_from_edges",
    "incomparability_graph",
    "induced_subgraph",
    "is_associated",
    "is_connected",
    "is_minimal_path",
    "refine_to_minimal",
    "remove_vertices",
    "universal_vertices",
    "validate_path",
]
