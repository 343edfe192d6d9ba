"""
Odd-cycle blow-ups: triangle-free (C5 base), C5-free (C7 base) and
odd-girth families, each regularized by a fixed deletion table
"""

import logging
from typing import Callable, List, Sequence, Tuple

from graphs import Graph, graph_odd_girth
from patterns import contains_clique

from .plan import (
    BaseKind,
    ConstructionError,
    ConstructionPlan,
    ConstructionResult,
    DeletionStep,
    circulant_bipartite,
    explicit_edges,
    matching,
    one_factor,
    perfect_matching,
    realize,
    two_factor,
)

logger = logging.getLogger(__name__)


def _plan(family: str, sizes: Sequence[int], target: int, steps=()) -> ConstructionPlan:
    return ConstructionPlan(
        family=family,
        base=BaseKind.CYCLE_BLOWUP,
        class_sizes=tuple(sizes),
        deletions=tuple(steps),
        target_degree=target,
    )


def _classes(sizes: Sequence[int]) -> List[Tuple[int, ...]]:
    return [tuple(block) for block in _plan("", sizes, 0).blocks()]


def _odd_girth_at_least(length: int) -> Callable[[Graph], bool]:
    def check(g: Graph) -> bool:
        girth = graph_odd_girth(g)
        return girth is None or girth >= length

    return check


def _triangle_free(g: Graph) -> bool:
    return not contains_clique(g, 3)


def _marked_c4(a1: Sequence[int], a2: Sequence[int]) -> DeletionStep:
    """4-cycle a1' a2' a1'' a2'' on the last two vertices of A1 and of A2"""
    x1, x2 = a1[-2], a1[-1]
    y1, y2 = a2[-2], a2[-1]
    return explicit_edges([(x1, y1), (y1, x2), (x2, y2), (y2, x1)], (0, 1), "4-cycle on the marked vertices")


def _spanning_cycle_blowup(n: int, length: int, family: str, free) -> ConstructionResult:
    """Sizes (m, m, 1, ..., 1): keep one Hamiltonian cycle of the blow-up, delete the rest.

    Covers the smallest rows of the tables, where the 2-factors they call for
    would have to live inside K_{1,1}.
    """
    m = (n - length + 2) // 2
    sizes = (m, m) + (1,) * (length - 2)
    classes = _classes(sizes)
    a1, a2 = classes[0], classes[1]
    tour = [classes[-1][0]]
    for i in range(m):
        tour.extend((a1[i], a2[i]))
    tour.extend(c[0] for c in classes[2:-1])
    kept = {frozenset((tour[i], tour[(i + 1) % n])) for i in range(n)}
    base = _plan(family, sizes, 2).base_graph()
    doomed = [e for e in base.edges() if frozenset(e) not in kept]
    steps = [explicit_edges(doomed, tuple(range(length)), "everything off the kept Hamiltonian cycle")]
    return realize(_plan(family, sizes, 2, steps), free)


def c5_blowup_extremal(n: int) -> ConstructionResult:
    """Triangle-free 2k-regular graph on n = 5k + s vertices (n odd) with k*n edges"""
    if n < 5 or n % 2 == 0:
        raise ConstructionError(
            f"C5 blow-up table needs odd n >= 5, got {n}; even n is covered by the balanced complete bipartite graph"
        )
    k, s = divmod(n, 5)
    family = f"C5 blow-up, n={n} (k={k}, s={s})"
    target = 2 * k

    if s == 0:
        return realize(_plan(family, (k,) * 5, target), _triangle_free)
    if s == 4 and k == 1:
        return _spanning_cycle_blowup(n, 5, family, _triangle_free)

    if s == 1:
        sizes = (k + 1, k + 1, k, k - 1, k)
        a = _classes(sizes)
        steps = [perfect_matching(a[0], a[1], (0, 1))]
    elif s == 2:
        sizes = (k + 1, k + 1, k, k, k)
        a = _classes(sizes)
        steps = [
            matching(a[0], a[4], k, (0, 4)),
            matching(a[1], a[2], k, (1, 2)),
            explicit_edges([(a[0][k], a[1][k])], (0, 1), "leftover edge"),
        ]
    elif s == 3:
        sizes = (k + 1, k + 1, k + 1, k, k)
        a = _classes(sizes)
        steps = [
            perfect_matching(a[0], a[1], (0, 1)),
            perfect_matching(a[1], a[2], (1, 2)),
            perfect_matching(a[3], a[4], (3, 4)),
        ]
    else:
        sizes = (k + 2, k + 2, k, k, k)
        a = _classes(sizes)
        steps = [
            _marked_c4(a[0], a[1]),
            two_factor([a[0][:k], a[4]], (0, 4)),
            two_factor([a[1][:k], a[2]], (1, 2)),
        ]
    return realize(_plan(family, sizes, target, steps), _triangle_free)


def c7_blowup_extremal(n: int) -> ConstructionResult:
    """Odd-girth-7 (hence C5-free) 2k-regular graph on n = 7k + s vertices (n odd)"""
    if n < 7 or n % 2 == 0:
        raise ConstructionError(
            f"C7 blow-up table needs odd n >= 7, got {n}; for even n use K_{{n/2,n/2}}, which has no odd cycle"
        )
    k, s = divmod(n, 7)
    family = f"C7 blow-up, n={n} (k={k}, s={s})"
    target = 2 * k
    free = _odd_girth_at_least(7)

    if s == 0:
        return realize(_plan(family, (k,) * 7, target), free)
    if s in (4, 6) and k == 1:
        return _spanning_cycle_blowup(n, 7, family, free)

    if s == 1:
        sizes = (k + 1, k, k, k + 1, k, k - 1, k)
        a = _classes(sizes)
        steps = [perfect_matching(a[1], a[2], (1, 2))]
    elif s == 2:
        sizes = (k + 1, k + 1, k, k, k, k, k)
        a = _classes(sizes)
        steps = [
            matching(a[0], a[6], k, (0, 6)),
            matching(a[1], a[2], k, (1, 2)),
            explicit_edges([(a[0][k], a[1][k])], (0, 1), "leftover edge"),
        ]
    elif s == 3:
        sizes = (k + 1, k + 1, k, k, k + 1, k, k)
        a = _classes(sizes)
        steps = [
            perfect_matching(a[0], a[1], (0, 1)),
            perfect_matching(a[2], a[3], (2, 3)),
            perfect_matching(a[5], a[6], (5, 6)),
        ]
    elif s == 4:
        sizes = (k + 2, k + 2, k, k, k, k, k)
        a = _classes(sizes)
        steps = [
            _marked_c4(a[0], a[1]),
            two_factor([a[0][:k], a[6]], (0, 6)),
            two_factor([a[1][:k], a[2]], (1, 2)),
        ]
    elif s == 5:
        sizes = (k + 2, k + 2, k, k, k + 1, k, k)
        a = _classes(sizes)
        # every consecutive pair except those touching A5
        steps = [
            _marked_c4(a[0], a[1]),
            matching(a[0], a[1], k, (0, 1)),
            matching(a[1], a[2], k, (1, 2)),
            matching(a[2], a[3], k, (2, 3)),
            matching(a[5], a[6], k, (5, 6)),
            matching(a[6], a[0], k, (6, 0)),
        ]
    else:
        sizes = (k + 2, k + 2, k, k, k + 2, k, k)
        a = _classes(sizes)
        steps = [
            two_factor([a[0], a[1]], (0, 1)),
            two_factor([a[2], a[3]], (2, 3)),
            two_factor([a[5], a[6]], (5, 6)),
        ]
    return realize(_plan(family, sizes, target, steps), free)


def blowup_parameters(n: int, g: int) -> Tuple[int, int]:
    """Largest a with n - (g+2)a even and non-negative; b is half the remainder"""
    length = g + 2
    a = n // length
    while a >= 1 and (n - length * a) % 2:
        a -= 1
    if a < 1:
        raise ConstructionError(f"no blow-up of C{length} fits {n} vertices with even remainder")
    return a, (n - length * a) // 2


def odd_girth_blowup(n: int, g: int) -> ConstructionResult:
    """2a-regular blow-up of C_{g+2} with odd girth g + 2, on n = (g+2)a + 2b vertices"""
    if g < 3 or g % 2 == 0:
        raise ConstructionError(f"odd_girth_blowup needs odd g >= 3, got {g}")
    length = g + 2
    if n < length:
        raise ConstructionError(f"odd_girth_blowup needs n >= {length}, got {n}")
    a, b = blowup_parameters(n, g)
    m = a + b
    sizes = (m, m) + (a,) * (length - 2)
    classes = _classes(sizes)
    a1, a2, a3, last = classes[0], classes[1], classes[2], classes[-1]
    family = f"C{length} blow-up, n={n} (a={a}, b={b})"

    steps = []
    if b:
        steps.append(explicit_edges(circulant_bipartite(last, a1, b), (length - 1, 0), f"{b}-regular from A{length} into A1"))
        steps.append(explicit_edges(circulant_bipartite(a3, a2, b), (2, 1), f"{b}-regular from A3 into A2"))
        low, extra = divmod(a * b, m)
        if extra == 0:
            steps.append(explicit_edges(circulant_bipartite(a1, a2, b * b // m, first_offset=1), (0, 1), "regular remainder"))
        else:
            # vertices of A1/A2 with index >= extra lost one edge fewer to H
            steps.append(explicit_edges([(a1[j], a2[j]) for j in range(extra, m)], (0, 1), "evening matching"))
            rest = b - low - 1
            if rest:
                steps.append(explicit_edges(circulant_bipartite(a1, a2, rest, first_offset=1), (0, 1), "regular remainder"))
    steps = [step for step in steps if step.edges]
    logger.debug(f"odd_girth_blowup n={n} g={g}: a={a} b={b}, {len(steps)} deletion steps")
    return realize(_plan(family, sizes, 2 * a, steps), _odd_girth_at_least(length), lower_bound_only=True)
