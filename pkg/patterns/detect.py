"""
Non-induced subgraph containment for forbidden patterns, plus the small-F
invariants (chromatic number, odd girth) that route formulas and constructions
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from graphs import Graph, graph_odd_girth, iter_bits

from .pattern import MAX_CUSTOM_VERTICES, ForbiddenPattern, PatternError, PatternKind

logger = logging.getLogger(__name__)


# ----------------------------------------------------------------------
# cliques
# ----------------------------------------------------------------------

def _clique_in(mask: int, size: int, adj: Sequence[int]) -> Optional[List[int]]:
    if size == 0:
        return []
    if mask.bit_count() < size:
        return None
    while mask:
        low = mask & -mask
        v = low.bit_length() - 1
        mask ^= low
        if mask.bit_count() < size - 1:
            return None
        rest = _clique_in(mask & adj[v], size - 1, adj)
        if rest is not None:
            return [v] + rest
    return None


def find_clique(g: Graph, size: int) -> Optional[Tuple[int, ...]]:
    if size < 2:
        raise ValueError(f"clique size must be at least 2, got {size}")
    found = _clique_in((1 << g.n) - 1, size, g.adjacency)
    return tuple(found) if found is not None else None


def contains_clique(g: Graph, size: int) -> bool:
    return find_clique(g, size) is not None


# ----------------------------------------------------------------------
# K4 - e
# ----------------------------------------------------------------------

def find_k4_minus_e(g: Graph) -> Optional[Tuple[int, int, int, int]]:
    """(u, v, w, x): uv is the shared edge, w and x its two common neighbors"""
    adj = g.adjacency
    for u, v in g.edges():
        common = adj[u] & adj[v]
        if common.bit_count() >= 2:
            w, x = list(iter_bits(common))[:2]
            return (u, v, w, x)
    return None


def contains_k4_minus_e(g: Graph) -> bool:
    return find_k4_minus_e(g) is not None


# ----------------------------------------------------------------------
# cycles of one exact length
# ----------------------------------------------------------------------

def _path_between(adj: Sequence[int], start: int, target: int, edges_left: int,
                  allowed: int, path: List[int]) -> bool:
    """Extend path (ending anywhere) to target using exactly edges_left more edges"""
    last = path[-1]
    if edges_left == 1:
        return bool(adj[last] >> target & 1)
    for nxt in iter_bits(adj[last] & allowed):
        path.append(nxt)
        if _path_between(adj, start, target, edges_left - 1, allowed & ~(1 << nxt), path):
            return True
        path.pop()
    return False


def find_cycle_of_length(g: Graph, length: int) -> Optional[Tuple[int, ...]]:
    if length < 3:
        raise ValueError(f"cycle length must be at least 3, got {length}")
    if length > g.n:
        return None
    adj = g.adjacency
    for s in range(g.n):
        above = ((1 << g.n) - 1) >> (s + 1) << (s + 1)
        # s is the smallest vertex of the cycle; orientation fixed by first < last
        for first in iter_bits(adj[s] & above):
            for last in iter_bits(adj[s] & above):
                if last <= first:
                    continue
                path = [first]
                allowed = above & ~(1 << first) & ~(1 << last)
                if _path_between(adj, first, last, length - 2, allowed, path):
                    return (s,) + tuple(path) + (last,)
    return None


def contains_cycle_of_length(g: Graph, length: int) -> bool:
    return find_cycle_of_length(g, length) is not None


# ----------------------------------------------------------------------
# general embedding search
# ----------------------------------------------------------------------

def _search_order(pattern: Graph, fixed: Sequence[int] = ()) -> List[int]:
    """Degree-descending order that keeps each new vertex attached to earlier ones"""
    order = list(fixed)
    placed = set(order)
    remaining = [v for v in range(pattern.n) if v not in placed]
    while remaining:
        def rank(v):
            links = sum(1 for u in pattern.neighbors(v) if u in placed)
            return (-links, -pattern.degree(v), v)
        best = min(remaining, key=rank)
        order.append(best)
        placed.add(best)
        remaining.remove(best)
    return order


def _embed(adj: Sequence[int], n: int, pattern: Graph, order: List[int],
           mapping: Dict[int, int], used: int, depth: int) -> Optional[Dict[int, int]]:
    if depth == len(order):
        return dict(mapping)
    p = order[depth]
    candidates = (1 << n) - 1
    for q in pattern.neighbors(p):
        if q in mapping:
            candidates &= adj[mapping[q]]
    candidates &= ~used
    need = pattern.degree(p)
    for t in iter_bits(candidates):
        if adj[t].bit_count() < need:
            continue
        mapping[p] = t
        found = _embed(adj, n, pattern, order, mapping, used | 1 << t, depth + 1)
        if found is not None:
            return found
        del mapping[p]
    return None


def find_embedding(g: Graph, f: ForbiddenPattern) -> Optional[Dict[int, int]]:
    """Injective edge-preserving map V(F) -> V(G), or None"""
    pattern = _bounded_graph(f)
    if pattern.n > g.n:
        return None
    return _embed(g.adjacency, g.n, pattern, _search_order(pattern), {}, 0, 0)


def _bounded_graph(f: ForbiddenPattern) -> Graph:
    if f.kind is PatternKind.CUSTOM and f.order > MAX_CUSTOM_VERTICES:
        raise PatternError(f"pattern {f.spec} exceeds {MAX_CUSTOM_VERTICES} vertices")
    return f.graph


def contains_subgraph(g: Graph, f: ForbiddenPattern) -> bool:
    if f.kind is PatternKind.CLIQUE:
        return contains_clique(g, f.size)
    if f.kind is PatternKind.K4_MINUS_EDGE:
        return contains_k4_minus_e(g)
    if f.kind is PatternKind.CYCLE:
        return contains_cycle_of_length(g, f.size)
    return find_embedding(g, f) is not None


def find_pattern(g: Graph, f: ForbiddenPattern) -> Optional[Tuple[int, ...]]:
    """Vertices of some copy of F in g, for reporting"""
    if f.kind is PatternKind.CLIQUE:
        return find_clique(g, f.size)
    if f.kind is PatternKind.K4_MINUS_EDGE:
        return find_k4_minus_e(g)
    if f.kind is PatternKind.CYCLE:
        return find_cycle_of_length(g, f.size)
    mapping = find_embedding(g, f)
    return None if mapping is None else tuple(mapping[p] for p in sorted(mapping))


# ----------------------------------------------------------------------
# incremental check used by exhaustive search
# ----------------------------------------------------------------------

def edge_completes_pattern(adj: Sequence[int], n: int, u: int, v: int, f: ForbiddenPattern) -> bool:
    """True iff some copy of F uses the (already inserted) edge uv"""
    if f.kind is PatternKind.CLIQUE:
        return _clique_in(adj[u] & adj[v], f.size - 2, adj) is not None
    if f.kind is PatternKind.K4_MINUS_EDGE:
        common = adj[u] & adj[v]
        if common.bit_count() >= 2:
            return True
        for w in iter_bits(common):
            if (adj[u] & adj[w]).bit_count() >= 2 or (adj[v] & adj[w]).bit_count() >= 2:
                return True
        return False
    if f.kind is PatternKind.CYCLE:
        allowed = ((1 << n) - 1) & ~(1 << u) & ~(1 << v)
        return _path_between(adj, u, v, f.size - 1, allowed, [u])
    pattern = _bounded_graph(f)
    for a, b in pattern.edges():
        for x, y in ((u, v), (v, u)):
            mapping = {a: x, b: y}
            order = _search_order(pattern, (a, b))
            if _embed(adj, n, pattern, order, mapping, 1 << x | 1 << y, 2) is not None:
                return True
    return False


# ----------------------------------------------------------------------
# invariants of F
# ----------------------------------------------------------------------

def odd_girth(f: ForbiddenPattern) -> Optional[int]:
    if f.kind in (PatternKind.CLIQUE, PatternKind.K4_MINUS_EDGE):
        return 3
    if f.kind is PatternKind.CYCLE:
        return f.size if f.size % 2 else None
    return graph_odd_girth(_bounded_graph(f))


def _colorable(adj: Sequence[int], n: int, k: int) -> bool:
    colors = [-1] * n
    order = sorted(range(n), key=lambda v: -adj[v].bit_count())

    def assign(i: int, used_colors: int) -> bool:
        if i == n:
            return True
        v = order[i]
        taken = {colors[u] for u in iter_bits(adj[v]) if colors[u] >= 0}
        # a fresh color is interchangeable with any other unused one
        for c in range(min(k, used_colors + 1)):
            if c not in taken:
                colors[v] = c
                if assign(i + 1, max(used_colors, c + 1)):
                    return True
                colors[v] = -1
        return False

    return assign(0, 0)


def chromatic_number(f: ForbiddenPattern) -> int:
    if f.kind is PatternKind.CLIQUE:
        return f.size
    if f.kind is PatternKind.K4_MINUS_EDGE:
        return 3
    if f.kind is PatternKind.CYCLE:
        return 3 if f.size % 2 else 2
    g = _bounded_graph(f)
    k = 1
    while not _colorable(g.adjacency, g.n, k):
        k += 1
    return k
