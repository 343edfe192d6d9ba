"""
Construction stage for the cross-validation pipeline
"""

import logging
from typing import Dict, Any

from constructions import ConstructionError, build_for_pattern
from patterns import parse_pattern

logger = logging.getLogger(__name__)


class ConstructionStage:
    """Stage that builds the routed construction, recording why when none applies"""

    def __call__(self, state: Dict[str, Any]) -> Dict[str, Any]:
        n = state["n"]
        f = parse_pattern(state["pattern_spec"])
        try:
            result = build_for_pattern(n, f)
        except ConstructionError as e:
            logger.info(f"No construction for {f.spec} at n={n}: {e}")
            state["construction_error"] = str(e)
            return state

        state["construction_edges"] = result.claimed_edges
        state["construction_degree"] = result.claimed_degree
        state["construction_family"] = result.plan.family
        return state
