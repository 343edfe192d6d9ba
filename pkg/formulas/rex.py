"""
Closed-form values of ex(n, K_{r+1}) and rex(n, F) in every regime where
they are known exactly, with explicit lower-bound / not-covered answers elsewhere
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from math import comb
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from constructions import (
    ConstructionError,
    ConstructionResult,
    c5_blowup_extremal,
    c7_blowup_extremal,
    complete_bipartite_regular,
    k4_extremal,
    odd_girth_blowup,
    regularized_turan,
    turan_degree_cap,
)
from graphs import Graph, complete_graph, edgeless_graph
from patterns import ForbiddenPattern, PatternKind, unicyclic_cycle_length

logger = logging.getLogger(__name__)


class RexStatus(str, Enum):
    EXACT = "Exact"
    LOWER_BOUND = "LowerBound"
    NOT_COVERED = "NotCovered"
    INCONCLUSIVE = "Inconclusive"


class RexSource(str, Enum):
    FORMULA = "formula"
    CONSTRUCTION = "construction"
    ORACLE = "oracle"


@dataclass(frozen=True)
class RexValue:
    n: int
    pattern: ForbiddenPattern
    value: int
    status: RexStatus
    source: RexSource = RexSource.FORMULA
    branch: str = ""
    witness: Optional[Graph] = None
    threshold_assumed: bool = False
    conjectured: Optional[int] = None
    assumptions: Tuple[str, ...] = field(default=())

    @property
    def witness_degree(self) -> Optional[int]:
        if self.witness is None or self.witness.n == 0:
            return None
        return self.witness.degree(0)

    @property
    def source_label(self) -> str:
        if self.source is RexSource.FORMULA and self.branch:
            return f"formula:{self.branch}"
        return self.source.value


class FormulaThresholds(BaseModel):
    """Smallest n at which a "sufficiently large n" branch is reported as Exact"""

    model_config = ConfigDict(frozen=True)

    k4e: int = Field(default=25, gt=0)
    c5: int = Field(default=21, gt=0)
    unicyclic: int = Field(default=25, gt=0)

    @classmethod
    def from_config(cls) -> "FormulaThresholds":
        from utils.config import get_config

        cfg = get_config().get_formula_config()
        return cls(k4e=cfg["k4e_threshold"], c5=cfg["c5_threshold"], unicyclic=cfg["unicyclic_threshold"])


def ex_turan(n: int, r: int) -> int:
    """Turán number of K_{r+1}: edges of the complete r-partite graph with balanced classes"""
    if not 1 <= r <= n:
        raise ValueError(f"ex_turan needs 1 <= r <= n, got n={n}, r={r}")
    return comb(n, 2) - sum(comb((n + i) // r, 2) for i in range(r))


def ex_cap(n: int, chi: int) -> int:
    """ex(n, K_chi), the ceiling on rex for any F of chromatic number chi"""
    r = chi - 1
    if r >= n:
        return comb(n, 2)
    return ex_turan(n, max(r, 1))


def andrasfai_degree_cap(n: int, k: int) -> int:
    """Largest minimum degree a non-bipartite graph of odd girth >= k can have: floor(2n/k).

    k = 3 stands for the triangle-free case and maps to k = 5.
    """
    if k < 3 or k % 2 == 0:
        raise ValueError(f"degree cap needs an odd k >= 3, got {k}")
    if k == 3:
        k = 5
    return 2 * n // k


def _value(n: int, f: ForbiddenPattern, value: int, status: RexStatus, branch: str,
           witness: Optional[Graph] = None, **extra) -> RexValue:
    return RexValue(n=n, pattern=f, value=value, status=status, source=RexSource.FORMULA,
                    branch=branch, witness=witness, **extra)


def _not_covered(n: int, f: ForbiddenPattern, branch: str = "not-covered", **extra) -> RexValue:
    return _value(n, f, 0, RexStatus.NOT_COVERED, branch, **extra)


def _from_construction(n: int, f: ForbiddenPattern, result: ConstructionResult, status: RexStatus,
                       branch: str, **extra) -> RexValue:
    return _value(n, f, result.claimed_edges, status, branch, result.graph, **extra)


def _clique(n: int, r: int, f: ForbiddenPattern) -> RexValue:
    q, s = divmod(n, r)
    ex = ex_turan(n, r)
    parity_ok = 1 <= s <= r - 2 and (r - s) * q % 2 == 0

    if r == 3:
        result = k4_extremal(n)
        if s == 0:
            assert result.claimed_edges == ex, f"K4 branch disagrees with Turán at n={n}"
        if parity_ok:
            assert result.claimed_edges == ex - (r - s) * q // 2, f"K4 branch disagrees with the parity branch at n={n}"
        # the complement of C3 + C5 at n = 8 is 5-regular and K4-free
        status = RexStatus.LOWER_BOUND if result.lower_bound_only else RexStatus.EXACT
        return _from_construction(n, f, result, status, "k4-thirds")
    if s == 0:
        return _from_construction(n, f, regularized_turan(n, r), RexStatus.EXACT, "turan-divisible")
    try:
        result = regularized_turan(n, r)
    except ConstructionError as e:
        logger.info(f"No regularized Turán schedule for n={n}, r={r}: {e}")
        return _not_covered(n, f, "turan-open")
    if parity_ok:
        assert result.claimed_edges == ex - (r - s) * q // 2
        return _from_construction(n, f, result, RexStatus.EXACT, "turan-parity")
    if not result.lower_bound_only:
        return _from_construction(n, f, result, RexStatus.EXACT, "turan-odd-order")
    return _from_construction(n, f, result, RexStatus.LOWER_BOUND, "turan-lower-bound")


def _triangle_family_witness(n: int) -> Tuple[int, Graph]:
    if n % 2 == 0:
        return n * n // 4, complete_bipartite_regular(n).graph
    if n < 5:
        return 0, edgeless_graph(n)
    return n * (n // 5), c5_blowup_extremal(n).graph


def _triangle(n: int, f: ForbiddenPattern) -> RexValue:
    value, witness = _triangle_family_witness(n)
    branch = "bipartite-even" if n % 2 == 0 else "c5-blowup"
    return _value(n, f, value, RexStatus.EXACT, branch, witness)


def _thresholded(n: int, f: ForbiddenPattern, value: int, witness: Graph, branch: str,
                 threshold: int, premise: str) -> RexValue:
    if n >= threshold:
        return _value(n, f, value, RexStatus.EXACT, branch, witness,
                      threshold_assumed=True, assumptions=(premise,))
    return _value(n, f, value, RexStatus.LOWER_BOUND, branch, witness)


def _k4_minus_edge(n: int, f: ForbiddenPattern, t: FormulaThresholds) -> RexValue:
    value, witness = _triangle_family_witness(n)
    if n % 2 == 0:
        return _value(n, f, value, RexStatus.EXACT, "bipartite-even", witness)
    return _thresholded(n, f, value, witness, "c5-blowup", t.k4e, f"n >= {t.k4e} is large enough for K4-e")


def _unicyclic_triangle(n: int, f: ForbiddenPattern, t: FormulaThresholds) -> RexValue:
    value, witness = _triangle_family_witness(n)
    branch = "unicyclic-bipartite-even" if n % 2 == 0 else "unicyclic-c5-blowup"
    return _thresholded(n, f, value, witness, branch, t.unicyclic,
                        f"n >= {t.unicyclic} is large enough for {f.spec}")


def _c5(n: int, f: ForbiddenPattern, threshold: int, branch: str) -> RexValue:
    if n % 2 == 0:
        return _not_covered(n, f, "even-order")
    if n < 7:
        value, witness = 0, edgeless_graph(n)
    else:
        value, witness = n * (n // 7), c7_blowup_extremal(n).graph
    return _thresholded(n, f, value, witness, branch, threshold, f"n >= {threshold} is large enough for {f.spec}")


def _odd_cycle(n: int, f: ForbiddenPattern, g: int) -> RexValue:
    conjectured = n * (n // (g + 2))
    if n % 2 == 0:
        return _not_covered(n, f, "even-order", conjectured=None)
    try:
        result = odd_girth_blowup(n, g)
    except ConstructionError as e:
        logger.info(f"No C{g + 2} blow-up on {n} vertices: {e}")
        return _not_covered(n, f, "odd-cycle-open", conjectured=conjectured)
    return _from_construction(n, f, result, RexStatus.LOWER_BOUND, "odd-girth-blowup", conjectured=conjectured)


def rex_formula(n: int, f: ForbiddenPattern, thresholds: Optional[FormulaThresholds] = None) -> RexValue:
    """Dispatch rex(n, F) to the closed form that covers it"""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    t = thresholds or FormulaThresholds.from_config()
    canon = f.canonical()

    if n < canon.order:
        result = _value(n, f, comb(n, 2), RexStatus.EXACT, "complete", complete_graph(n))
    elif canon.kind is PatternKind.CLIQUE:
        r = canon.size - 1
        result = _triangle(n, f) if r == 2 else _clique(n, r, f)
    elif canon.kind is PatternKind.K4_MINUS_EDGE:
        result = _k4_minus_edge(n, f, t)
    elif canon.kind is PatternKind.CYCLE:
        g = canon.size
        if g == 5:
            result = _c5(n, f, t.c5, "c7-blowup")
        elif g % 2:
            result = _odd_cycle(n, f, g)
        else:
            result = _not_covered(n, f, "bipartite-pattern")
    else:
        cycle = unicyclic_cycle_length(canon)
        if cycle == 3:
            result = _unicyclic_triangle(n, f, t)
        elif cycle == 5:
            result = _c5(n, f, t.c5, "unicyclic-c7-blowup")
        else:
            result = _not_covered(n, f)

    logger.debug(f"rex_formula({n}, {f.spec}) = {result.value} [{result.status.value}] via {result.branch}")
    return result
