"""
Forbidden patterns and subgraph containment
"""

from .pattern import (
    MAX_CUSTOM_VERTICES,
    ForbiddenPattern,
    PatternError,
    PatternKind,
    is_unicyclic,
    parse_pattern,
    unicyclic_cycle_length,
)
from .detect import (
    chromatic_number,
    contains_clique,
    contains_cycle_of_length,
    contains_k4_minus_e,
    contains_subgraph,
    edge_completes_pattern,
    find_clique,
    find_cycle_of_length,
    find_embedding,
    find_k4_minus_e,
    find_pattern,
    odd_girth,
)

__all__ = [
    "MAX_CUSTOM_VERTICES",
    "ForbiddenPattern",
    "PatternError",
    "PatternKind",
    "is_unicyclic",
    "parse_pattern",
    "unicyclic_cycle_length",
    "chromatic_number",
    "contains_clique",
    "contains_cycle_of_length",
    "contains_k4_minus_e",
    "contains_subgraph",
    "edge_completes_pattern",
    "find_clique",
    "find_cycle_of_length",
    "find_embedding",
    "find_k4_minus_e",
    "find_pattern",
    "odd_girth",
]
