"""
Cross-validation pipeline for regular Turán numbers using LangGraph
Runs formula, construction and (optionally) exhaustive search, then compares them
"""

import logging
import uuid
from typing import TypedDict, Dict, Any, List, Optional

from langgraph.graph import StateGraph, START, END

from formulas import FormulaThresholds
from graphs import Graph
from monitoring import SearchMonitor
from graph_logging import PipelineLogger
from stages import FormulaStage, ConstructionStage, OracleStage, AgreementStage
from utils.workflow_utils import log_stage_call, should_run_oracle, create_initial_state, create_final_output
from utils.logging_utils import RexLogger

logger = logging.getLogger(__name__)


class RexState(TypedDict):
    n: int
    pattern_spec: str
    use_oracle: bool
    budget: dict
    # Formula
    formula_value: Optional[int]
    formula_status: Optional[str]
    formula_branch: str
    formula_witness: Optional[Graph]
    formula_threshold_assumed: bool
    formula_conjectured: Optional[int]
    formula_assumptions: list
    ex_cap: Optional[int]
    # Construction
    construction_edges: Optional[int]
    construction_degree: Optional[int]
    construction_family: str
    construction_error: str
    # Oracle
    oracle_value: Optional[int]
    oracle_status: Optional[str]
    oracle_nodes: int
    oracle_degrees: list
    oracle_assumptions: list
    # Verdict
    verification_failures: list
    agreement: str
    disagreements: list
    stage_call_log: list
    final_output: dict


class CrossValidationWorkflow:
    """Orchestrates formula, construction and oracle for one (n, F)"""

    def __init__(self, thresholds: Optional[FormulaThresholds] = None, monitor: Optional[SearchMonitor] = None):
        self.search_monitor = monitor or SearchMonitor()
        self.graph_logger = PipelineLogger()
        self.rex_logger = RexLogger()

        self.formula_stage = FormulaStage(thresholds)
        self.construction_stage = ConstructionStage()
        self.oracle_stage = OracleStage(self.search_monitor)
        self.agreement_stage = AgreementStage()

        self.app = self._build_langgraph_workflow()

    def _run_stage(self, name: str, stage, state: RexState) -> RexState:
        self.graph_logger.log_node_start(name, state)
        state = stage(state)
        log_stage_call(state, name)
        self.graph_logger.log_node_complete(name, state)
        return state

    def _formula_node(self, state: RexState) -> RexState:
        """Formula stage wrapper for LangGraph"""
        state = self._run_stage("formula", self.formula_stage, state)
        self.rex_logger.log_formula(state["n"], state["pattern_spec"], state["formula_value"],
                                    state["formula_status"], state["formula_branch"])
        return state

    def _construction_node(self, state: RexState) -> RexState:
        """Construction stage wrapper for LangGraph"""
        state = self._run_stage("construction", self.construction_stage, state)
        if state["construction_edges"] is not None:
            self.rex_logger.log_construction(state["construction_family"], state["n"],
                                             state["construction_degree"], state["construction_edges"])
        return state

    def _oracle_node(self, state: RexState) -> RexState:
        """Oracle stage wrapper for LangGraph"""
        state = self._run_stage("oracle", self.oracle_stage, state)
        for attempt in state["oracle_degrees"]:
            self.rex_logger.log_oracle_degree(state["n"], state["pattern_spec"], attempt["degree"],
                                              attempt["result"], attempt["nodes"])
        return state

    def _agreement_node(self, state: RexState) -> RexState:
        """Agreement stage wrapper for LangGraph; assembles the final row"""
        state = self._run_stage("agreement", self.agreement_stage, state)
        for detail in state["disagreements"]:
            self.rex_logger.log_disagreement(state["n"], state["pattern_spec"], detail)
        state["final_output"] = create_final_output(state)
        return state

    def _should_run_oracle(self, state: RexState) -> str:
        decision = should_run_oracle(state)
        self.graph_logger.log_conditional_edge("construction", decision, state)
        self.rex_logger.log_conditional_edge("construction", decision)
        return decision

    def _build_langgraph_workflow(self):
        """Build the LangGraph StateGraph for one cross-validation run"""
        workflow = StateGraph(RexState)

        workflow.add_node("formula", self._formula_node)
        workflow.add_node("construction", self._construction_node)
        workflow.add_node("oracle", self._oracle_node)
        workflow.add_node("agreement", self._agreement_node)

        workflow.add_edge(START, "formula")
        workflow.add_edge("formula", "construction")
        workflow.add_conditional_edges(
            "construction",
            self._should_run_oracle,
            {
                "oracle": "oracle",
                "agreement": "agreement",
            }
        )
        workflow.add_edge("oracle", "agreement")
        workflow.add_edge("agreement", END)

        return workflow.compile()

    def run(self, n: int, pattern_spec: str, use_oracle: bool = False,
            budget: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        """Run the pipeline for one (n, F) and return the result row"""
        execution_id = str(uuid.uuid4())[:8]
        self.graph_logger.start_execution(execution_id)

        initial_state = create_initial_state(n, pattern_spec, use_oracle, budget)
        final_state = self.app.invoke(initial_state)

        self.graph_logger.log_execution_complete(execution_id, final_state)
        final_output = final_state.get("final_output") or create_final_output(final_state)
        return final_output

    def run_range(self, ns: List[int], pattern_spec: str, use_oracle: bool = False,
                  budget: Optional[Dict[str, Any]] = None) -> List[Dict[str, Any]]:
        return [self.run(n, pattern_spec, use_oracle, budget) for n in ns]

    def inspect_runtime_state(self, search_id: str = None):
        """Inspect oracle searches tracked so far"""
        if search_id:
            return self.search_monitor.get_search_summary(search_id)
        return self.search_monitor.get_runtime_stats()

    def get_execution_summary(self):
        return self.graph_logger.get_execution_summary()


def run_row(n: int, pattern_spec: str, use_oracle: bool = False,
            budget: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """One pipeline run in a fresh workflow; picklable entry point for worker pools"""
    return CrossValidationWorkflow().run(n, pattern_spec, use_oracle, budget)
