"""
Oracle stage for the cross-validation pipeline
Runs the exhaustive search and certifies what it found
"""

import logging
from typing import Dict, Any, Optional

from monitoring import SearchMonitor
from oracle import SearchBudget, rex_exact, verify_claim
from patterns import parse_pattern

logger = logging.getLogger(__name__)


class OracleStage:
    """Stage responsible for the ground-truth search"""

    def __init__(self, monitor: Optional[SearchMonitor] = None):
        self.monitor = monitor or SearchMonitor()

    def __call__(self, state: Dict[str, Any]) -> Dict[str, Any]:
        n = state["n"]
        f = parse_pattern(state["pattern_spec"])
        budget = SearchBudget.from_config(**state.get("budget", {}))
        outcome = rex_exact(n, f, budget, monitor=self.monitor)
        rex = outcome.rex

        state["oracle_value"] = rex.value
        state["oracle_status"] = rex.status.value
        state["oracle_nodes"] = outcome.nodes_expanded
        state["oracle_degrees"] = [
            {"degree": a.degree, "result": a.result.value, "nodes": a.nodes} for a in outcome.degrees_tried
        ]
        state["oracle_assumptions"] = list(rex.assumptions)

        if rex.witness is not None:
            report = verify_claim(rex.witness, f, 2 * rex.value // n)
            if not report.passed:
                details = "; ".join(e.detail for e in report.failures())
                state["verification_failures"].append(f"oracle witness failed: {details}")
        return state
