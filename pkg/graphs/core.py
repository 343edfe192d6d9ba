"""
Simple undirected graphs on dense vertex labels 0..n-1
Adjacency is kept as one neighbor bitmask per vertex
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


class EdgeError(ValueError):
    """Raised when graph surgery names an edge that cannot be changed"""


def _normalize(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph. Vertex v's neighbors are the set bits of adjacency[v]."""

    __slots__ = ("_n", "_adj")

    def __init__(self, n: int, adjacency: Sequence[int]):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        if len(adjacency) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(adjacency)}")
        full = (1 << n) - 1
        for v, row in enumerate(adjacency):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbor outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in _bits(row):
                if not adjacency[u] >> v & 1:
                    raise ValueError(f"adjacency is not symmetric at ({v}, {u})")
        self._n = n
        self._adj = tuple(adjacency)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise EdgeError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise EdgeError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """Vertices are numbered in the node order of the networkx graph"""
        index = {v: i for i, v in enumerate(graph.nodes())}
        return cls.from_edges(len(index), ((index[u], index[v]) for u, v in graph.edges()))

    @property
    def n(self) -> int:
        return self._n

    @property
    def adjacency(self) -> Tuple[int, ...]:
        return self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return tuple(_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def edges(self) -> Iterator[Edge]:
        """Edges (u, v) with u < v in lexicographic order"""
        for u in range(self._n):
            yield from ((u, v) for v in _bits(self._adj[u] >> (u + 1) << (u + 1)))

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self._adj) // 2

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self._n))
        graph.add_edges_from(self.edges())
        return graph

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edge_count})"


@dataclass(frozen=True)
class VertexSet:
    """A subset of 0..n-1, kept in the order it was given"""

    n: int
    vertices: Tuple[int, ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"duplicate vertices in {self.vertices}")
        for v in self.vertices:
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} outside 0..{self.n - 1}")

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, index):
        return self.vertices[index]

    @property
    def mask(self) -> int:
        mask = 0
        for v in self.vertices:
            mask |= 1 << v
        return mask


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of mask, ascending"""
    return _bits(mask)


def edgeless_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << v) for v in range(n)])


def degree_sequence(g: Graph) -> List[int]:
    return [g.degree(v) for v in range(g.n)]


def is_regular(g: Graph) -> Optional[int]:
    """The common degree if every vertex has it, otherwise None"""
    if g.n < 1:
        raise ValueError("regularity is defined for n >= 1")
    degrees = set(degree_sequence(g))
    return degrees.pop() if len(degrees) == 1 else None


def _checked_edge_list(g: Graph, edges: Iterable[Edge]) -> List[Edge]:
    seen = set()
    result = []
    for u, v in edges:
        if not (0 <= u < g.n and 0 <= v < g.n) or u == v:
            raise EdgeError(f"({u}, {v}) is not a vertex pair of a graph on {g.n} vertices")
        pair = _normalize(u, v)
        if pair in seen:
            raise EdgeError(f"edge {pair} listed twice")
        seen.add(pair)
        result.append(pair)
    return result


def delete_edges(g: Graph, edges: Iterable[Edge]) -> Graph:
    """Remove the listed edges; every one of them must be present"""
    adj = list(g.adjacency)
    for u, v in _checked_edge_list(g, edges):
        if not adj[u] >> v & 1:
            raise EdgeError(f"edge ({u}, {v}) is not present")
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return Graph(g.n, adj)


def add_edges(g: Graph, edges: Iterable[Edge]) -> Graph:
    """Inverse of delete_edges: every listed edge must be absent"""
    adj = list(g.adjacency)
    for u, v in _checked_edge_list(g, edges):
        if adj[u] >> v & 1:
            raise EdgeError(f"edge ({u}, {v}) is already present")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(g.n, adj)


def graph_odd_girth(g: Graph) -> Optional[int]:
    """Length of a shortest odd cycle, None for bipartite graphs"""
    best: Optional[int] = None
    for root in range(g.n):
        dist = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if best is not None and 2 * dist[x] + 1 >= best:
                break
            for y in _bits(g.adjacency[x]):
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    queue.append(y)
                elif dist[y] == dist[x]:
                    # an odd closed walk through root of this length holds an odd cycle no longer
                    length = 2 * dist[x] + 1
                    if best is None or length < best:
                        best = length
    return best
