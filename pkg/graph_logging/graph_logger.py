"""
Pipeline Execution Logger
Logs node timing and routing decisions of the cross-validation pipeline
"""

import logging
import time
from typing import Dict, Any, List

logger = logging.getLogger(__name__)


class PipelineLogger:
    """Logger for cross-validation pipeline runs"""

    def __init__(self):
        self.execution_start_time = None
        self.node_start_times: Dict[str, float] = {}
        self.node_durations: Dict[str, float] = {}
        self.conditional_decisions: List[Dict[str, Any]] = []

    def start_execution(self, execution_id: str):
        """Log start of a pipeline run"""
        self.execution_start_time = time.time()
        self.node_start_times = {}
        self.node_durations = {}
        self.conditional_decisions = []
        logger.info(f"Starting pipeline execution: {execution_id}")

    def log_node_start(self, node_name: str, state: Dict[str, Any]):
        """Log start of node execution"""
        self.node_start_times[node_name] = time.time()
        logger.info(f"Starting node: {node_name} (n={state.get('n')}, forbid={state.get('pattern_spec')})")

    def log_node_complete(self, node_name: str, state: Dict[str, Any]):
        """Log completion of node execution"""
        if node_name not in self.node_start_times:
            return
        duration = time.time() - self.node_start_times[node_name]
        self.node_durations[node_name] = duration
        logger.info(f"Completed node: {node_name} (took {duration:.2f}s)")

        if node_name == "formula":
            logger.info(f"   Formula: {state.get('formula_value')} [{state.get('formula_status')}]")
        elif node_name == "construction":
            logger.info(f"   Construction edges: {state.get('construction_edges')}")
        elif node_name == "oracle":
            logger.info(f"   Oracle: {state.get('oracle_value')} [{state.get('oracle_status')}]")
        elif node_name == "agreement":
            logger.info(f"   Agreement: {state.get('agreement')}")

    def log_conditional_edge(self, from_node: str, decision: str, state: Dict[str, Any]):
        """Log conditional edge decision"""
        self.conditional_decisions.append({
            "from_node": from_node,
            "decision": decision,
            "timestamp": time.time(),
            "use_oracle": state.get("use_oracle", False),
        })
        logger.info(f"Conditional edge: {from_node} -> {decision}")

    def log_execution_complete(self, execution_id: str, final_state: Dict[str, Any]):
        """Log completion of a pipeline run"""
        if self.execution_start_time:
            total_duration = time.time() - self.execution_start_time
            logger.info(f"Pipeline execution completed: {execution_id} (took {total_duration:.2f}s)")
            if final_state.get("disagreements"):
                logger.warning(f"   Disagreements: {final_state['disagreements']}")

    def get_execution_summary(self):
        """Get execution summary"""
        return {
            "execution_duration": time.time() - self.execution_start_time if self.execution_start_time else 0,
            "conditional_decisions": self.conditional_decisions,
            "node_executions": len(self.node_durations),
            "node_durations": dict(self.node_durations),
        }
