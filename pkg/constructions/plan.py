"""
Construction plans: class sizes of a base graph plus an ordered schedule of
edge deletions. Every step resolves to explicit edges when the plan is built,
so a plan is auditable line by line.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, List, Optional, Sequence, Tuple

from graphs import Edge, EdgeError, Graph, VertexSet, delete_edges, is_regular

logger = logging.getLogger(__name__)


class ConstructionError(ValueError):
    """No construction covers the request"""


class ConstructionVerificationError(ConstructionError):
    """A construction was built but failed its own checks"""


class BaseKind(str, Enum):
    MULTIPARTITE = "complete multipartite"
    CYCLE_BLOWUP = "cycle blow-up"


class StepKind(str, Enum):
    PERFECT_MATCHING = "PerfectMatching"
    MATCHING = "Matching"
    HAMILTONIAN_CYCLE = "HamiltonianCycle"
    ONE_FACTOR = "OneFactor"
    TWO_FACTOR = "TwoFactor"
    EXPLICIT_EDGES = "ExplicitEdges"


@dataclass(frozen=True)
class DeletionStep:
    kind: StepKind
    classes: Tuple[int, ...]
    edges: Tuple[Edge, ...]
    note: str = ""

    def describe(self) -> str:
        where = "A" + " + A".join(str(c + 1) for c in self.classes) if self.classes else "-"
        text = f"{self.kind.value} on {where}: {len(self.edges)} edges"
        return f"{text} ({self.note})" if self.note else text


@dataclass(frozen=True)
class ConstructionPlan:
    family: str
    base: BaseKind
    class_sizes: Tuple[int, ...]
    deletions: Tuple[DeletionStep, ...]
    target_degree: int

    @property
    def n(self) -> int:
        return sum(self.class_sizes)

    def blocks(self) -> List[VertexSet]:
        """Class A_i occupies a contiguous index block, in class order"""
        result, start = [], 0
        for size in self.class_sizes:
            result.append(VertexSet(self.n, tuple(range(start, start + size))))
            start += size
        return result

    def base_graph(self) -> Graph:
        blocks = self.blocks()
        m = len(blocks)
        adj = [0] * self.n
        if self.base is BaseKind.MULTIPARTITE:
            full = (1 << self.n) - 1
            for block in blocks:
                for v in block:
                    adj[v] = full & ~block.mask
        else:
            for i, block in enumerate(blocks):
                # a 2-cycle blow-up would join a class pair twice; callers use m >= 3
                joined = blocks[(i - 1) % m].mask | blocks[(i + 1) % m].mask
                for v in block:
                    adj[v] = joined
        return Graph(self.n, adj)

    def apply(self) -> Graph:
        graph = self.base_graph()
        for index, step in enumerate(self.deletions):
            try:
                graph = delete_edges(graph, step.edges)
            except EdgeError as e:
                raise ConstructionVerificationError(f"{self.family}: step {index + 1} ({step.describe()}) failed: {e}") from e
        return graph

    def to_text(self) -> str:
        lines = [
            f"family: {self.family}",
            f"base: {self.base.value}",
            "class sizes: " + ",".join(str(s) for s in self.class_sizes),
            f"target degree: {self.target_degree}",
        ]
        lines.extend(f"delete {i + 1}: {step.describe()}" for i, step in enumerate(self.deletions))
        return "\n".join(lines)


@dataclass(frozen=True)
class ConstructionResult:
    graph: Graph
    plan: ConstructionPlan
    claimed_degree: int
    claimed_edges: int
    lower_bound_only: bool = False
    notes: Tuple[str, ...] = field(default=())


def realize(plan: ConstructionPlan, is_free: Callable[[Graph], bool],
            lower_bound_only: bool = False, notes: Sequence[str] = ()) -> ConstructionResult:
    """Apply the plan and verify regularity, edge count and pattern-freeness"""
    graph = plan.apply()
    degree = is_regular(graph) if graph.n else 0
    expected_edges = plan.target_degree * plan.n // 2
    if degree != plan.target_degree:
        raise ConstructionVerificationError(f"{plan.family}: expected {plan.target_degree}-regular, got degree {degree}")
    if graph.edge_count != expected_edges:
        raise ConstructionVerificationError(f"{plan.family}: expected {expected_edges} edges, got {graph.edge_count}")
    if not is_free(graph):
        raise ConstructionVerificationError(f"{plan.family}: result contains the forbidden pattern")
    logger.debug(f"Verified {plan.family} on {plan.n} vertices: {degree}-regular, {graph.edge_count} edges")
    return ConstructionResult(
        graph=graph,
        plan=plan,
        claimed_degree=plan.target_degree,
        claimed_edges=expected_edges,
        lower_bound_only=lower_bound_only,
        notes=tuple(notes),
    )


# ----------------------------------------------------------------------
# step builders
# ----------------------------------------------------------------------

def alternating_arrangement(groups: Sequence[Sequence[int]]) -> List[int]:
    """Cyclic order of the union in which consecutive vertices lie in different groups.

    Groups are concatenated largest first and dealt alternately into even and odd
    positions; this succeeds whenever no group exceeds half of the union.
    """
    ordered = sorted((list(g) for g in groups if len(g)), key=len, reverse=True)
    items = [v for g in ordered for v in g]
    total = len(items)
    if ordered and len(ordered[0]) > total // 2:
        raise ConstructionError(
            f"class of size {len(ordered[0])} exceeds half of a {total}-vertex union; no alternating order"
        )
    half = (total + 1) // 2
    result = [0] * total
    result[0::2] = items[:half]
    result[1::2] = items[half:]
    return result


def perfect_matching(left: Sequence[int], right: Sequence[int], classes: Tuple[int, ...], note: str = "") -> DeletionStep:
    if len(left) != len(right):
        raise ConstructionError(f"perfect matching needs equal sides, got {len(left)} and {len(right)}")
    return DeletionStep(StepKind.PERFECT_MATCHING, classes, tuple(zip(left, right)), note)


def matching(left: Sequence[int], right: Sequence[int], size: int, classes: Tuple[int, ...], note: str = "") -> DeletionStep:
    if size > min(len(left), len(right)):
        raise ConstructionError(f"matching of size {size} does not fit sides {len(left)} and {len(right)}")
    return DeletionStep(StepKind.MATCHING, classes, tuple(zip(left[:size], right[:size])), note)


def one_factor(groups: Sequence[Sequence[int]], classes: Tuple[int, ...], note: str = "") -> DeletionStep:
    order = alternating_arrangement(groups)
    if len(order) % 2:
        raise ConstructionError(f"a 1-factor needs an even union, got {len(order)} vertices")
    pairs = tuple((order[i], order[i + 1]) for i in range(0, len(order), 2))
    return DeletionStep(StepKind.ONE_FACTOR, classes, pairs, note)


def _cycle_edges(groups: Sequence[Sequence[int]]) -> Tuple[Edge, ...]:
    order = alternating_arrangement(groups)
    if len(order) < 3:
        raise ConstructionError(f"a spanning cycle needs at least 3 vertices, got {len(order)}")
    return tuple((order[i], order[(i + 1) % len(order)]) for i in range(len(order)))


def hamiltonian_cycle(groups: Sequence[Sequence[int]], classes: Tuple[int, ...], note: str = "") -> DeletionStep:
    return DeletionStep(StepKind.HAMILTONIAN_CYCLE, classes, _cycle_edges(groups), note)


def two_factor(groups: Sequence[Sequence[int]], classes: Tuple[int, ...], note: str = "") -> DeletionStep:
    return DeletionStep(StepKind.TWO_FACTOR, classes, _cycle_edges(groups), note)


def explicit_edges(edges: Sequence[Edge], classes: Tuple[int, ...] = (), note: str = "") -> DeletionStep:
    return DeletionStep(StepKind.EXPLICIT_EDGES, classes, tuple(edges), note)


def circulant_bipartite(left: Sequence[int], right: Sequence[int], degree: int, first_offset: int = 0) -> List[Edge]:
    """Left vertex i joins right[(i*degree + t) mod |right|] for t in range(degree).

    Right degrees come out as floor/ceil of |left|*degree/|right|, the ceil ones first.
    With first_offset=1 and |left| == |right| the result is regular and avoids
    the pairs (left[i], right[i]).
    """
    width = len(right)
    if degree > width - first_offset:
        raise ConstructionError(f"degree {degree} does not fit {width} right vertices")
    edges = []
    for i, x in enumerate(left):
        if first_offset:
            targets = [(i + first_offset + t) % width for t in range(degree)]
        else:
            targets = [(i * degree + t) % width for t in range(degree)]
        edges.extend((x, right[j]) for j in targets)
    return edges
