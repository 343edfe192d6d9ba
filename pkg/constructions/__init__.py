"""
Deterministic regular F-free witnesses with auditable deletion plans
"""

import logging

from patterns import ForbiddenPattern, PatternKind, unicyclic_cycle_length

from .blowups import blowup_parameters, c5_blowup_extremal, c7_blowup_extremal, odd_girth_blowup
from .plan import (
    BaseKind,
    ConstructionError,
    ConstructionPlan,
    ConstructionVerificationError,
    ConstructionResult,
    DeletionStep,
    StepKind,
    alternating_arrangement,
    circulant_bipartite,
    realize,
)
from .turan import (
    complete_bipartite_regular,
    complete_graph_result,
    edgeless_result,
    k4_extremal,
    regularized_turan,
    turan_class_sizes,
    turan_degree_cap,
    turan_graph,
)

logger = logging.getLogger(__name__)

SUPPORTED_FAMILIES = (
    "K3, K4-e and unicyclic patterns on a triangle (balanced bipartite for even n, C5 blow-up for odd n >= 5)",
    "K4 (n >= 3)",
    "K<r+1> for r >= 4 (regularized Turán graph, n >= r)",
    "C5 and unicyclic patterns on a C5 (C7 blow-up, odd n >= 7)",
    "C<g> and unicyclic patterns on a C<g>, odd g >= 7 (blow-up of C<g+2>)",
)


def _unsupported(f: ForbiddenPattern) -> ConstructionError:
    families = "; ".join(SUPPORTED_FAMILIES)
    return ConstructionError(f"no construction family for {f.spec}. Supported: {families}")


def _triangle_family(n: int) -> ConstructionResult:
    if n % 2 == 0:
        return complete_bipartite_regular(n)
    if n < 5:
        return edgeless_result(n)
    return c5_blowup_extremal(n)


def build_for_pattern(n: int, f: ForbiddenPattern) -> ConstructionResult:
    """Pick the construction family for F and build its n-vertex witness"""
    if n < 1:
        raise ConstructionError(f"n must be positive, got {n}")
    canon = f.canonical()
    if n < canon.order:
        return complete_graph_result(n)

    cycle = canon.size if canon.kind is PatternKind.CYCLE else None
    if canon.kind is PatternKind.CUSTOM:
        cycle = unicyclic_cycle_length(canon)

    if canon.kind is PatternKind.CLIQUE:
        r = canon.size - 1
        if r == 2:
            return _triangle_family(n)
        if r == 3:
            return k4_extremal(n)
        return regularized_turan(n, r)

    if canon.kind is PatternKind.K4_MINUS_EDGE or cycle == 3:
        return _triangle_family(n)

    if cycle == 5:
        if n % 2 == 0:
            raise ConstructionError(
                f"{f.spec} at even n={n} is not covered by the C7 table; "
                f"K_{{{n // 2},{n // 2}}} is bipartite, hence {f.spec}-free, with {n * n // 4} edges"
            )
        if n < 7:
            return edgeless_result(n)
        return c7_blowup_extremal(n)

    if cycle is not None and cycle >= 7 and cycle % 2:
        return odd_girth_blowup(n, cycle)

    raise _unsupported(f)


__all__ = [
    "SUPPORTED_FAMILIES",
    "BaseKind",
    "ConstructionError",
    "ConstructionPlan",
    "ConstructionVerificationError",
    "ConstructionResult",
    "DeletionStep",
    "StepKind",
    "alternating_arrangement",
    "blowup_parameters",
    "build_for_pattern",
    "c5_blowup_extremal",
    "c7_blowup_extremal",
    "circulant_bipartite",
    "complete_bipartite_regular",
    "complete_graph_result",
    "edgeless_result",
    "k4_extremal",
    "odd_girth_blowup",
    "realize",
    "regularized_turan",
    "turan_class_sizes",
    "turan_degree_cap",
    "turan_graph",
]
