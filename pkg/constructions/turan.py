"""
Turán graphs and their regularizations (clique-free families)
"""

import logging
from typing import List, Tuple

from graphs import Graph
from patterns import contains_clique

from .plan import (
    BaseKind,
    ConstructionError,
    ConstructionPlan,
    ConstructionResult,
    alternating_arrangement,
    explicit_edges,
    hamiltonian_cycle,
    matching,
    one_factor,
    perfect_matching,
    realize,
)

logger = logging.getLogger(__name__)


def turan_class_sizes(n: int, r: int) -> Tuple[int, ...]:
    """Smaller classes first: r - s classes of size q, then s classes of size q + 1"""
    q, s = divmod(n, r)
    return (q,) * (r - s) + (q + 1,) * s


def _turan_plan(n: int, r: int, family: str, target: int, deletions=()) -> ConstructionPlan:
    return ConstructionPlan(
        family=family,
        base=BaseKind.MULTIPARTITE,
        class_sizes=turan_class_sizes(n, r),
        deletions=tuple(deletions),
        target_degree=target,
    )


def turan_graph(n: int, r: int) -> Graph:
    if r < 1 or r > n:
        raise ConstructionError(f"Turán graph T({n},{r}) needs 1 <= r <= n")
    return _turan_plan(n, r, "turan", 0).base_graph()


def turan_degree_cap(n: int, r: int) -> int:
    """Largest degree a regular K_{r+1}-free graph on n vertices can have.

    Turán bounds the degree by floor((r-1)n/r); an odd bound on odd n drops by one.
    """
    cap = (r - 1) * n // r
    return cap - 1 if cap % 2 and n % 2 else cap


def _clique_free(size: int):
    return lambda g: not contains_clique(g, size)


def complete_graph_result(n: int) -> ConstructionResult:
    """K_n as a (trivially) regular witness, for n below the order of F"""
    plan = _turan_plan(n, n, f"complete K{n}", n - 1)
    return realize(plan, lambda g: True)


def edgeless_result(n: int) -> ConstructionResult:
    plan = _turan_plan(n, 1, f"edgeless on {n} vertices", 0)
    return realize(plan, lambda g: True)


def complete_bipartite_regular(n: int) -> ConstructionResult:
    """K_{n/2,n/2}: the even-order witness for every 3-chromatic F"""
    if n < 2 or n % 2:
        raise ConstructionError(f"balanced complete bipartite graph needs even n >= 2, got {n}")
    plan = _turan_plan(n, 2, "balanced bipartite", n // 2)
    return realize(plan, _clique_free(3))


def k4_extremal(n: int) -> ConstructionResult:
    """2*floor(n/3)-regular K4-free graph with n*floor(n/3) edges"""
    if n < 3:
        raise ConstructionError(f"k4_extremal needs n >= 3, got {n}")
    k, s = divmod(n, 3)
    plan = _turan_plan(n, 3, "K4-extremal", 2 * k, _k4_deletions(n, k, s))
    # n = 3k + 2 with k even leaves room for degree 2k + 1
    return realize(plan, _clique_free(4), lower_bound_only=2 * k < turan_degree_cap(n, 3))


def _k4_deletions(n: int, k: int, s: int) -> list:
    blocks = _turan_plan(n, 3, "", 0).blocks()
    if s == 0:
        return []
    if s == 1:
        # sizes k, k, k+1
        return [perfect_matching(blocks[0], blocks[1], (0, 1))]
    # sizes k, k+1, k+1; the last vertex of each large class keeps its degree after the matchings
    small, large1, large2 = blocks
    return [
        matching(small, large1, k, (0, 1)),
        matching(small, large2, k, (0, 2)),
        explicit_edges([(large1[-1], large2[-1])], (1, 2), "edge between the two undecreased vertices"),
    ]


def _round_robin(classes: List[List[int]], count: int) -> List[List[int]]:
    """Take count vertices from the classes in index order, one class at a time, earliest vertices first"""
    taken: List[List[int]] = [[] for _ in classes]
    i = 0
    while count:
        c = i % len(classes)
        if len(taken[c]) < len(classes[c]):
            taken[c].append(classes[c][len(taken[c])])
            count -= 1
        i += 1
    return taken


def regularized_turan(n: int, r: int) -> ConstructionResult:
    """Regular K_{r+1}-free graph obtained from T(n,r) by deleting O(n) edges"""
    if r < 3:
        raise ConstructionError(f"regularized_turan covers r >= 3, got r={r}")
    if n < r:
        raise ConstructionError(f"regularized_turan needs n >= r, got n={n}, r={r}")
    q, s = divmod(n, r)
    free = _clique_free(r + 1)
    family = f"regularized T({n},{r})"
    blocks = [list(b) for b in _turan_plan(n, r, "", 0).blocks()]
    small = blocks[: r - s]   # size q, degree n - q
    large = blocks[r - s:]    # size q + 1, degree n - q - 1
    small_ids = tuple(range(r - s))
    large_ids = tuple(range(r - s, r))

    if s == 0:
        return realize(_turan_plan(n, r, family, n - q), free)

    if s <= r - 2 and (r - s) * q % 2 == 0:
        steps = [one_factor(small, small_ids, "1-factor on the high-degree classes")]
        return realize(_turan_plan(n, r, family, n - q - 1, steps), free)

    if s == r - 1 and r == 3:
        return k4_extremal(n)

    if s == r - 1:
        steps, target = _single_high_class_steps(n, q, small[0], large, large_ids)
        return _checked_against_cap(_turan_plan(n, r, family, target, steps), free)

    if s == 1:
        # r - 1 and q both odd: the lone large class has even size q + 1
        big = large[0]
        ends = _round_robin(small, q + 1)
        step_matching = list(zip(big, _interleave(ends)))
        rest = [[v for v in cls if v not in set(chosen)] for cls, chosen in zip(small, ends)]
        if 0 < sum(map(len, rest)) < 3:
            return _spanning_cycle(n, r, family, free, sum(map(len, rest)))
        steps = [
            explicit_edges(step_matching, small_ids + large_ids, "matching from the low-degree class, ends spread round-robin"),
            one_factor(ends, small_ids, "1-factor on the matched high-degree ends"),
        ]
        if any(rest):
            steps.append(hamiltonian_cycle(rest, small_ids, "Hamiltonian cycle on the untouched high-degree vertices"))
        return _checked_against_cap(_turan_plan(n, r, family, n - q - 2, steps), free)

    # 2 <= s <= r - 2 with (r - s) q odd: n - q is even, so the large classes carry the odd degree
    steps = [
        one_factor(large, large_ids, "1-factor on the odd-degree classes"),
        hamiltonian_cycle(small, small_ids, "Hamiltonian cycle on the remaining high-degree classes"),
    ]
    return _checked_against_cap(_turan_plan(n, r, family, n - q - 2, steps), free)


def _checked_against_cap(plan: ConstructionPlan, free, notes=()) -> ConstructionResult:
    """Lower-bound-only unless the target degree reaches the Turán degree cap"""
    cap = turan_degree_cap(plan.n, len(plan.class_sizes))
    return realize(plan, free, lower_bound_only=plan.target_degree < cap, notes=notes)


def _spanning_cycle(n: int, r: int, family: str, free, leftover: int) -> ConstructionResult:
    """Keep only a Hamiltonian cycle of T(n, r); used when too few vertices are left for the cycle step"""
    base = _turan_plan(n, r, "", 0)
    order = alternating_arrangement(base.blocks())
    kept = {tuple(sorted((order[i], order[(i + 1) % n]))) for i in range(n)}
    dropped = [e for e in base.base_graph().edges() if e not in kept]
    steps = [explicit_edges(dropped, tuple(range(r)), "every edge off one spanning cycle")]
    note = f"only {leftover} vertices left for the Hamiltonian cycle step; kept a spanning cycle of T({n},{r}) instead"
    return _checked_against_cap(_turan_plan(n, r, family, 2, steps), free, notes=(note,))


def _interleave(groups: List[List[int]]) -> List[int]:
    """Round-robin read-out of the groups, matching the order they were filled"""
    out = []
    depth = max((len(g) for g in groups), default=0)
    for level in range(depth):
        out.extend(g[level] for g in groups if level < len(g))
    return out


def _single_high_class_steps(n: int, q: int, high: List[int], low: List[List[int]], low_ids: Tuple[int, ...]):
    high_id = (0,)
    if q % 2 == 0:
        # each high vertex loses 3 edges to distinct low vertices, then a 1-factor among those
        ends = _round_robin(low, 3 * q)
        flat = _interleave(ends)
        star = [(high[i // 3], flat[i]) for i in range(3 * q)]
        rest = [[v for v in cls if v not in set(chosen)] for cls, chosen in zip(low, ends)]
        steps = [
            explicit_edges(star, high_id + low_ids, "three edges from every high-degree vertex"),
            one_factor(ends, low_ids, "1-factor on the low-degree ends"),
        ]
        if any(rest):
            steps.append(hamiltonian_cycle(rest, low_ids, "Hamiltonian cycle on the other low-degree vertices"))
        return steps, n - q - 3
    # q odd: two edges from every high vertex, then a 1-factor on the n - 3q untouched low vertices
    ends = _round_robin(low, 2 * q)
    flat = _interleave(ends)
    star = [(high[i // 2], flat[i]) for i in range(2 * q)]
    rest = [[v for v in cls if v not in set(chosen)] for cls, chosen in zip(low, ends)]
    steps = [
        explicit_edges(star, high_id + low_ids, "two edges from every high-degree vertex"),
        one_factor(rest, low_ids, "1-factor on the untouched low-degree vertices"),
    ]
    return steps, n - q - 2
