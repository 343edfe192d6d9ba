"""
Formula stage for the cross-validation pipeline
Evaluates the closed form for rex(n, F) and checks its witness
"""

import logging
from typing import Dict, Any, Optional

from formulas import FormulaThresholds, RexStatus, ex_cap, rex_formula
from oracle import verify_claim
from patterns import chromatic_number, parse_pattern

logger = logging.getLogger(__name__)


class FormulaStage:
    """Stage responsible for the closed-form value"""

    def __init__(self, thresholds: Optional[FormulaThresholds] = None, verify_witness: bool = True):
        self.thresholds = thresholds
        self.verify_witness = verify_witness

    def __call__(self, state: Dict[str, Any]) -> Dict[str, Any]:
        n = state["n"]
        f = parse_pattern(state["pattern_spec"])
        rex = rex_formula(n, f, self.thresholds)

        state["ex_cap"] = ex_cap(n, chromatic_number(f.canonical()))
        state["formula_value"] = rex.value
        state["formula_status"] = rex.status.value
        state["formula_branch"] = rex.branch
        state["formula_witness"] = rex.witness
        state["formula_threshold_assumed"] = rex.threshold_assumed
        state["formula_conjectured"] = rex.conjectured
        state["formula_assumptions"] = list(rex.assumptions)
        logger.info(f"rex({n}, {f.spec}) = {rex.value} [{rex.status.value}] via {rex.branch}")

        if self.verify_witness and rex.status is RexStatus.EXACT:
            degree = 2 * rex.value // n if n else 0
            report = verify_claim(rex.witness, f, degree) if rex.witness is not None else None
            if report is None:
                state["verification_failures"].append(f"formula Exact {rex.value} has no witness")
            elif not report.passed:
                details = "; ".join(e.detail for e in report.failures())
                state["verification_failures"].append(f"formula witness failed: {details}")
        return state
