"""
Utility functions for the regular Turán toolkit
"""

from .export_utils import (
    REX_COLUMNS,
    TABLE_COLUMNS,
    format_csv,
    format_markdown,
    graph6_record,
    read_graph6_lines,
    render_table,
    write_output,
)
from .config import get_config, print_config_status
from .workflow_utils import log_stage_call, should_run_oracle, find_disagreements, create_initial_state, create_final_output
from .logging_utils import RexLogger, get_rex_logger, setup_logging

__all__ = [
    "REX_COLUMNS",
    "TABLE_COLUMNS",
    "format_csv",
    "format_markdown",
    "graph6_record",
    "read_graph6_lines",
    "render_table",
    "write_output",
    "get_config",
    "print_config_status",
    "log_stage_call",
    "should_run_oracle",
    "find_disagreements",
    "create_initial_state",
    "create_final_output",
    "RexLogger",
    "get_rex_logger",
    "setup_logging"
]
