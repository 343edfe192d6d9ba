"""
Forbidden patterns F and the pattern grammar shared with the CLI:
K3, K4, K5..., K4-e, C3, C5, C7..., custom:0-1,1-2,2-0,2-3
"""

import re
from enum import Enum
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from graphs import Graph, complete_graph

MAX_CUSTOM_VERTICES = 12


class PatternError(ValueError):
    """Pattern text that does not parse, or a pattern outside supported bounds"""


class PatternKind(str, Enum):
    CLIQUE = "clique"
    K4_MINUS_EDGE = "k4-e"
    CYCLE = "cycle"
    CUSTOM = "custom"


class ForbiddenPattern(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: PatternKind
    size: Optional[int] = None
    edges: Tuple[Tuple[int, int], ...] = ()

    @model_validator(mode="after")
    def _check_bounds(self):
        if self.kind is PatternKind.CLIQUE and (self.size is None or self.size < 3):
            raise ValueError("clique patterns need size >= 3")
        if self.kind is PatternKind.CYCLE and (self.size is None or self.size < 3):
            raise ValueError("cycle patterns need length >= 3")
        if self.kind is PatternKind.CUSTOM:
            if not self.edges:
                raise ValueError("custom patterns need at least one edge")
            labels = sorted({x for e in self.edges for x in e})
            if len(labels) > MAX_CUSTOM_VERTICES:
                raise ValueError(f"custom patterns are limited to {MAX_CUSTOM_VERTICES} vertices")
            pairs = set()
            for u, v in self.edges:
                if u == v:
                    raise ValueError(f"self-loop at {u} in custom pattern")
                pair = (min(u, v), max(u, v))
                if pair in pairs:
                    raise ValueError(f"edge {pair} repeated in custom pattern")
                pairs.add(pair)
            if not _connected(self._custom_graph(labels)):
                raise ValueError("custom patterns must be connected")
        return self

    @classmethod
    def clique(cls, size: int) -> "ForbiddenPattern":
        return cls(kind=PatternKind.CLIQUE, size=size)

    @classmethod
    def k4_minus_edge(cls) -> "ForbiddenPattern":
        return cls(kind=PatternKind.K4_MINUS_EDGE)

    @classmethod
    def cycle(cls, length: int) -> "ForbiddenPattern":
        return cls(kind=PatternKind.CYCLE, size=length)

    @classmethod
    def custom(cls, edges) -> "ForbiddenPattern":
        return cls(kind=PatternKind.CUSTOM, edges=tuple((int(u), int(v)) for u, v in edges))

    def _custom_graph(self, labels) -> Graph:
        index = {label: i for i, label in enumerate(labels)}
        return Graph.from_edges(len(labels), ((index[u], index[v]) for u, v in self.edges))

    @property
    def graph(self) -> Graph:
        """The pattern itself as a graph on 0..|V(F)|-1"""
        if self.kind is PatternKind.CLIQUE:
            return complete_graph(self.size)
        if self.kind is PatternKind.K4_MINUS_EDGE:
            return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
        if self.kind is PatternKind.CYCLE:
            return Graph.from_edges(self.size, [(i, (i + 1) % self.size) for i in range(self.size)])
        return self._custom_graph(sorted({x for e in self.edges for x in e}))

    @property
    def order(self) -> int:
        if self.kind is PatternKind.K4_MINUS_EDGE:
            return 4
        if self.kind is PatternKind.CUSTOM:
            return len({x for e in self.edges for x in e})
        return self.size

    @property
    def spec(self) -> str:
        if self.kind is PatternKind.CLIQUE:
            return f"K{self.size}"
        if self.kind is PatternKind.K4_MINUS_EDGE:
            return "K4-e"
        if self.kind is PatternKind.CYCLE:
            return f"C{self.size}"
        return "custom:" + ",".join(f"{u}-{v}" for u, v in self.edges)

    def canonical(self) -> "ForbiddenPattern":
        """Map C3 to K3 and recognizable custom graphs to their named family"""
        if self.kind is PatternKind.CYCLE and self.size == 3:
            return ForbiddenPattern.clique(3)
        if self.kind is not PatternKind.CUSTOM:
            return self
        g = self.graph
        m, e = g.n, g.edge_count
        degrees = sorted(g.degree(v) for v in range(m))
        if e == m * (m - 1) // 2 and m >= 3:
            return ForbiddenPattern.clique(m)
        if m >= 3 and degrees == [2] * m:
            # connected and 2-regular
            return ForbiddenPattern.cycle(m).canonical()
        if m == 4 and e == 5:
            return ForbiddenPattern.k4_minus_edge()
        return self

    def __str__(self) -> str:
        return self.spec


def _connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        for v in range(g.n):
            if frontier >> v & 1:
                reach |= g.adjacency[v]
        frontier = reach & ~seen
        seen |= reach
    return seen == (1 << g.n) - 1


_CLIQUE = re.compile(r"^K(\d+)$")
_CYCLE = re.compile(r"^C(\d+)$")
_EDGE = re.compile(r"^(\d+)-(\d+)$")


def parse_pattern(text: str) -> ForbiddenPattern:
    spec = text.strip()
    try:
        if spec in ("K4-e", "K4-E", "k4-e"):
            return ForbiddenPattern.k4_minus_edge()
        match = _CLIQUE.match(spec)
        if match:
            return ForbiddenPattern.clique(int(match.group(1)))
        match = _CYCLE.match(spec)
        if match:
            return ForbiddenPattern.cycle(int(match.group(1)))
        if spec.startswith("custom:"):
            edges = []
            for item in spec[len("custom:"):].split(","):
                edge = _EDGE.match(item.strip())
                if not edge:
                    raise PatternError(f"bad edge {item!r} in {text!r}")
                edges.append((int(edge.group(1)), int(edge.group(2))))
            return ForbiddenPattern.custom(edges)
    except PatternError:
        raise
    except ValueError as e:
        raise PatternError(f"invalid pattern {text!r}: {e}") from e
    raise PatternError(f"unrecognized pattern {text!r}; expected K<r>, K4-e, C<g> or custom:<edges>")


def is_unicyclic(f: ForbiddenPattern) -> bool:
    g = f.graph
    return _connected(g) and g.edge_count == g.n


def unicyclic_cycle_length(f: ForbiddenPattern) -> Optional[int]:
    """Length of the unique cycle of a unicyclic pattern, None otherwise"""
    if not is_unicyclic(f):
        return None
    # strip pendant vertices until only the cycle remains
    adj = list(f.graph.adjacency)
    alive = (1 << len(adj)) - 1
    changed = True
    while changed:
        changed = False
        for v in range(len(adj)):
            if alive >> v & 1 and (adj[v] & alive).bit_count() <= 1:
                alive &= ~(1 << v)
                changed = True
    return alive.bit_count()
