"""
Graph representation, surgery and graph6 interchange
"""

from .core import (
    Edge,
    EdgeError,
    Graph,
    VertexSet,
    add_edges,
    complete_graph,
    degree_sequence,
    delete_edges,
    edgeless_graph,
    graph_odd_girth,
    is_regular,
    iter_bits,
)
from .graph6 import Graph6FormatError, decode_graph6, encode_graph6

__all__ = [
    "Edge",
    "EdgeError",
    "Graph",
    "VertexSet",
    "add_edges",
    "complete_graph",
    "degree_sequence",
    "delete_edges",
    "edgeless_graph",
    "graph_odd_girth",
    "is_regular",
    "iter_bits",
    "Graph6FormatError",
    "decode_graph6",
    "encode_graph6",
]
