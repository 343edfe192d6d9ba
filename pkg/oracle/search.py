"""
Exhaustive search for d-regular F-free graphs on n labeled vertices and
the descending-degree computation of rex(n, F) built on it
"""

import logging
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

from formulas import RexSource, RexStatus, RexValue, andrasfai_degree_cap, turan_degree_cap
from graphs import Graph, edgeless_graph
from patterns import ForbiddenPattern, PatternKind, edge_completes_pattern

logger = logging.getLogger(__name__)

_CLOCK_EVERY = 1024


class InfeasibleDegreeError(ValueError):
    """n * d is odd, so no d-regular graph on n vertices exists"""


class SearchResult(str, Enum):
    FOUND = "found"
    EXHAUSTED = "exhausted"
    BUDGET = "budget"


class SearchBudget(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_nodes: int = Field(default=2_000_000, gt=0)
    max_seconds: float = Field(default=300.0, gt=0)
    degree_cap_override: Optional[int] = Field(default=None, ge=0)
    use_degree_caps: bool = True
    odd_cycle_cap: bool = True

    @classmethod
    def from_config(cls, **overrides) -> "SearchBudget":
        from utils.config import get_config

        cfg = get_config().get_budget_config()
        values = {
            "max_nodes": cfg["max_nodes"],
            "max_seconds": cfg["max_seconds"],
            "odd_cycle_cap": cfg["odd_cycle_cap"],
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


@dataclass(frozen=True)
class SearchOutcome:
    result: SearchResult
    graph: Optional[Graph] = None
    nodes: int = 0
    seconds: float = 0.0


@dataclass(frozen=True)
class DegreeAttempt:
    degree: int
    result: SearchResult
    nodes: int


@dataclass(frozen=True)
class OracleOutcome:
    rex: RexValue
    degrees_tried: Tuple[DegreeAttempt, ...] = field(default=())
    nodes_expanded: int = 0


class _BudgetExceeded(Exception):
    pass


class _RegularSearch:
    """Row-by-row backtracking: vertex i picks its remaining neighbors among j > i.

    Vertex 0 is fixed adjacent to 1..d, which loses no graph up to relabeling.
    Every added edge is checked for a copy of F through it.
    """

    def __init__(self, n: int, d: int, f: ForbiddenPattern, max_nodes: int, deadline: float):
        self.n = n
        self.d = d
        self.f = f
        self.max_nodes = max_nodes
        self.deadline = deadline
        self.adj = [0] * n
        self.deg = [0] * n
        self.nodes = 0

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise _BudgetExceeded
        if self.nodes % _CLOCK_EVERY == 0 and time.monotonic() > self.deadline:
            raise _BudgetExceeded

    def _link(self, u: int, v: int):
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u
        self.deg[u] += 1
        self.deg[v] += 1

    def _unlink(self, u: int, v: int):
        self.adj[u] &= ~(1 << v)
        self.adj[v] &= ~(1 << u)
        self.deg[u] -= 1
        self.deg[v] -= 1

    def _try_edge(self, u: int, v: int) -> bool:
        self._tick()
        self._link(u, v)
        if edge_completes_pattern(self.adj, self.n, u, v, self.f):
            self._unlink(u, v)
            return False
        return True

    def _feasible(self, i: int) -> bool:
        """Vertices after i can still reach degree d using pairs among themselves"""
        open_mask = 0
        for k in range(i + 1, self.n):
            if self.deg[k] < self.d:
                open_mask |= 1 << k
        total = 0
        for j in range(i + 1, self.n):
            need = self.d - self.deg[j]
            if need and need > (open_mask & ~self.adj[j] & ~(1 << j)).bit_count():
                return False
            total += need
        return total % 2 == 0

    def _row(self, i: int) -> bool:
        if i == self.n:
            return True
        need = self.d - self.deg[i]
        candidates = [j for j in range(i + 1, self.n) if self.deg[j] < self.d and not self.adj[i] >> j & 1]
        return self._choose(i, candidates, 0, need)

    def _choose(self, i: int, candidates: Sequence[int], start: int, need: int) -> bool:
        if need == 0:
            return self._feasible(i) and self._row(i + 1)
        for index in range(start, len(candidates) - need + 1):
            j = candidates[index]
            if self._try_edge(i, j):
                if self._choose(i, candidates, index + 1, need - 1):
                    return True
                self._unlink(i, j)
        return False

    def run(self) -> Optional[Graph]:
        for v in range(1, self.d + 1):
            if not self._try_edge(0, v):
                return None
        if self._feasible(0) and self._row(1):
            return Graph(self.n, self.adj)
        return None


def exists_regular_free(n: int, d: int, f: ForbiddenPattern, budget: Optional[SearchBudget] = None,
                        deadline: Optional[float] = None) -> SearchOutcome:
    """Search for a d-regular F-free graph on n vertices.

    FOUND carries the first graph in search order; EXHAUSTED proves none exists;
    BUDGET means the node or time limit stopped the search first.
    """
    if not 0 <= d < n:
        raise ValueError(f"degree must satisfy 0 <= d < n, got n={n}, d={d}")
    if n * d % 2:
        raise InfeasibleDegreeError(f"no {d}-regular graph on {n} vertices: n*d is odd")
    if d == 0:
        return SearchOutcome(SearchResult.FOUND, edgeless_graph(n))

    budget = budget or SearchBudget()
    started = time.monotonic()
    if deadline is None:
        deadline = started + budget.max_seconds
    search = _RegularSearch(n, d, f, budget.max_nodes, deadline)
    try:
        graph = search.run()
    except _BudgetExceeded:
        return SearchOutcome(SearchResult.BUDGET, None, search.nodes, time.monotonic() - started)
    result = SearchResult.FOUND if graph is not None else SearchResult.EXHAUSTED
    return SearchOutcome(result, graph, search.nodes, time.monotonic() - started)


def degree_cap(n: int, f: ForbiddenPattern, budget: SearchBudget) -> Tuple[int, Tuple[str, ...]]:
    """Largest degree worth searching, and any unproven premise behind it"""
    cap = n - 1
    assumptions: List[str] = []
    if budget.degree_cap_override is not None:
        cap = min(cap, budget.degree_cap_override)
        assumptions.append(f"degree cap override {budget.degree_cap_override}")
    if not budget.use_degree_caps:
        return cap, tuple(assumptions)

    canon = f.canonical()
    if canon.kind is PatternKind.CLIQUE:
        r = canon.size - 1
        cap = min(cap, turan_degree_cap(n, r))
        if r == 2 and n % 2:
            # odd order forces a non-bipartite graph
            cap = min(cap, andrasfai_degree_cap(n, 3))
    elif canon.kind is PatternKind.K4_MINUS_EDGE and n >= 4:
        cap = min(cap, n // 2)
    elif canon.kind is PatternKind.CYCLE and canon.size % 2:
        g = canon.size
        if n >= 2 * g - 4:
            cap = min(cap, n // 2)
        if budget.odd_cycle_cap and n % 2 and n >= 2 * g - 4:
            cap = min(cap, andrasfai_degree_cap(n, g + 2))
            assumptions.append(f"a regular C{g}-free graph of odd order has degree <= floor(2n/{g + 2})")
    return cap, tuple(assumptions)


def rex_exact(n: int, f: ForbiddenPattern, budget: Optional[SearchBudget] = None,
              monitor=None, search_id: Optional[str] = None) -> OracleOutcome:
    """rex(n, F) by searching feasible degrees from the top down"""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    budget = budget or SearchBudget()
    cap, assumptions = degree_cap(n, f, budget)
    search_id = search_id or f"{f.spec}@{n}"
    if monitor is not None:
        monitor.start_search(search_id, n, f.spec, cap)

    deadline = time.monotonic() + budget.max_seconds
    attempts: List[DegreeAttempt] = []
    total_nodes = 0
    budget_hit = False
    rex: Optional[RexValue] = None

    for d in range(cap, -1, -1):
        if n * d % 2:
            continue
        if d and time.monotonic() > deadline:
            outcome = SearchOutcome(SearchResult.BUDGET)
        else:
            outcome = exists_regular_free(n, d, f, budget, deadline)
        attempts.append(DegreeAttempt(d, outcome.result, outcome.nodes))
        total_nodes += outcome.nodes
        if monitor is not None:
            monitor.log_degree_attempt(d, outcome.result.value, outcome.nodes, outcome.seconds)
        logger.info(f"Oracle n={n} {f.spec}: d={d} -> {outcome.result.value} ({outcome.nodes} nodes)")

        if outcome.result is SearchResult.BUDGET:
            budget_hit = True
            continue
        if outcome.result is SearchResult.FOUND:
            if not budget_hit:
                status = RexStatus.EXACT
            elif d == 0:
                status = RexStatus.INCONCLUSIVE
            else:
                status = RexStatus.LOWER_BOUND
            rex = RexValue(
                n=n,
                pattern=f,
                value=d * n // 2,
                status=status,
                source=RexSource.ORACLE,
                branch="search",
                witness=outcome.graph,
                assumptions=assumptions,
            )
            break

    if rex is None:
        rex = RexValue(n=n, pattern=f, value=0, status=RexStatus.INCONCLUSIVE, source=RexSource.ORACLE,
                       branch="search", assumptions=assumptions)
    if monitor is not None:
        monitor.finish_search(rex.status.value, rex.value)
    return OracleOutcome(rex=rex, degrees_tried=tuple(attempts), nodes_expanded=total_nodes)
