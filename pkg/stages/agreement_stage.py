"""
Agreement stage for the cross-validation pipeline
"""

import logging
from typing import Dict, Any

from utils.workflow_utils import find_disagreements

logger = logging.getLogger(__name__)


class AgreementStage:
    """Stage that compares formula, construction and oracle"""

    def __call__(self, state: Dict[str, Any]) -> Dict[str, Any]:
        disagreements = find_disagreements(state)
        state["disagreements"] = disagreements

        if state.get("formula_status") == "Exact" and state.get("construction_error"):
            state["verification_failures"].append(
                f"formula is Exact but the construction failed: {state['construction_error']}"
            )
            logger.warning(f"n={state['n']} {state['pattern_spec']}: {state['verification_failures'][-1]}")

        if disagreements:
            agreement = "disagree"
        elif not state.get("use_oracle"):
            agreement = "unchecked"
        elif state.get("oracle_status") == "Inconclusive":
            agreement = "inconclusive"
        elif state.get("oracle_value") == state.get("formula_value"):
            agreement = "agree"
        else:
            agreement = "consistent"
        state["agreement"] = agreement
        return state
