"""
Workflow Utilities
Helper functions for pipeline execution and state management
"""

import time
import logging
from typing import Dict, Any, List, Optional

logger = logging.getLogger(__name__)


def log_stage_call(state: dict, stage_name: str) -> dict:
    """Log stage call and update state"""
    if "stage_call_log" not in state or not isinstance(state.get("stage_call_log"), list):
        state["stage_call_log"] = []

    call_id = len(state["stage_call_log"]) + 1
    state["stage_call_log"].append({
        "call_id": call_id,
        "stage_name": stage_name,
        "timestamp": time.time(),
    })

    logger.debug(f"Stage Call #{call_id}: {stage_name} (n={state.get('n')}, forbid={state.get('pattern_spec')})")
    return state


def should_run_oracle(state: Dict[str, Any]) -> str:
    """Route to the exhaustive search only when it was requested"""
    if state.get("use_oracle"):
        return "oracle"
    return "agreement"


def find_disagreements(state: Dict[str, Any]) -> List[str]:
    """Every contradiction between Exact claims and the values actually realized"""
    problems = []
    f_value, f_status = state.get("formula_value"), state.get("formula_status")
    o_value, o_status = state.get("oracle_value"), state.get("oracle_status")
    c_edges = state.get("construction_edges")
    f_exact = f_status == "Exact"
    o_found = o_status in ("Exact", "LowerBound")

    if f_exact and o_status == "Exact" and f_value != o_value:
        problems.append(f"formula Exact {f_value} vs oracle Exact {o_value}")
    elif f_exact and o_found and o_value > f_value:
        problems.append(f"oracle found {o_value} edges above formula Exact {f_value}")
    if o_status == "Exact" and f_status == "LowerBound" and f_value > o_value:
        problems.append(f"formula lower bound {f_value} exceeds oracle Exact {o_value}")
    if f_exact and c_edges is not None and c_edges != f_value:
        problems.append(f"construction has {c_edges} edges, formula Exact {f_value}")
    return problems


def create_initial_state(n: int, pattern_spec: str, use_oracle: bool = False,
                         budget: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """Create initial state for pipeline execution"""
    return {
        "n": n,
        "pattern_spec": pattern_spec,
        "use_oracle": use_oracle,
        "budget": dict(budget or {}),
        "formula_value": None,
        "formula_status": None,
        "formula_branch": "",
        "formula_witness": None,
        "formula_threshold_assumed": False,
        "formula_conjectured": None,
        "formula_assumptions": [],
        "ex_cap": None,
        "construction_edges": None,
        "construction_degree": None,
        "construction_family": "",
        "construction_error": "",
        "oracle_value": None,
        "oracle_status": None,
        "oracle_nodes": 0,
        "oracle_degrees": [],
        "oracle_assumptions": [],
        "verification_failures": [],
        "agreement": "",
        "disagreements": [],
        "stage_call_log": [],
        "final_output": {},
    }


def create_final_output(state: Dict[str, Any]) -> Dict[str, Any]:
    """Create the result row from state"""
    witness = state.get("formula_witness")
    return {
        "n": state["n"],
        "pattern": state["pattern_spec"],
        "ex_cap": state.get("ex_cap"),
        "rex_value": state.get("formula_value"),
        "status": state.get("formula_status"),
        "source": f"formula:{state['formula_branch']}" if state.get("formula_branch") else "formula",
        "witness_degree": witness.degree(0) if witness is not None and witness.n else None,
        "threshold_assumed": state.get("formula_threshold_assumed", False),
        "conjectured": state.get("formula_conjectured"),
        "assumptions": list(state.get("formula_assumptions", [])) + list(state.get("oracle_assumptions", [])),
        "construction_edges": state.get("construction_edges"),
        "construction_family": state.get("construction_family", ""),
        "construction_error": state.get("construction_error", ""),
        "oracle_value": state.get("oracle_value"),
        "oracle_status": state.get("oracle_status"),
        "oracle_nodes": state.get("oracle_nodes", 0),
        "oracle_degrees": list(state.get("oracle_degrees", [])),
        "agreement": state.get("agreement", ""),
        "disagreements": list(state.get("disagreements", [])),
        "verification_failures": list(state.get("verification_failures", [])),
    }
