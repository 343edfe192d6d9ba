"""
Centralized logging utilities for the regular Turán toolkit
"""

import logging
import sys
from typing import Dict, Any, Optional, Union

from .config import get_config


def _level(value: Union[int, str, None]) -> int:
    if isinstance(value, int):
        return value
    return getattr(logging, str(value or "WARNING").upper(), logging.WARNING)


class RexLogger:
    """Centralized logging for constructions, formulas and oracle runs.

    Everything goes to stderr (and optionally a file); stdout is reserved
    for graph6 lines and table rows.
    """

    def __init__(self, name: str = "rex", level: Union[int, str, None] = None,
                 log_file: Optional[str] = None):
        cfg = get_config()
        self.logger = logging.getLogger(name)
        self.log_file = log_file if log_file is not None else cfg.log_file

        if not self.logger.handlers:
            self.logger.setLevel(_level(level if level is not None else cfg.log_level))
            self._setup_handlers()
        elif level is not None:
            self.logger.setLevel(_level(level))

    def _setup_handlers(self):
        """Setup logging handlers for console and file output"""
        formatter = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        )

        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(formatter)
        self.logger.addHandler(console_handler)

        if self.log_file:
            file_handler = logging.FileHandler(self.log_file)
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(formatter)
            self.logger.addHandler(file_handler)

    def log_construction(self, family: str, n: int, degree: int, edges: int):
        """Log a verified construction"""
        self.logger.info(f"Construction {family}: n={n}, {degree}-regular, {edges} edges")

    def log_construction_failure(self, n: int, pattern: str, error: Exception):
        self.logger.error(f"Construction for {pattern} at n={n} failed: {error}")

    def log_formula(self, n: int, pattern: str, value: int, status: str, branch: str):
        """Log a formula evaluation"""
        self.logger.info(f"Formula rex({n}, {pattern}) = {value} [{status}] via {branch}")

    def log_oracle_degree(self, n: int, pattern: str, degree: int, result: str, nodes: int):
        """Log one degree attempt of the exhaustive search"""
        self.logger.info(f"Oracle n={n} {pattern}: d={degree} -> {result} ({nodes} nodes)")

    def log_disagreement(self, n: int, pattern: str, detail: str):
        self.logger.error(f"DISAGREEMENT at n={n}, {pattern}: {detail}")

    def log_conditional_edge(self, from_node: str, decision: str):
        """Log conditional edge decision"""
        self.logger.info(f"Conditional edge: {from_node} -> {decision}")

    def log_export_success(self, export_paths: Dict[str, str]):
        """Log successful export"""
        self.logger.info("Export successful")
        for kind, path in export_paths.items():
            self.logger.info(f"  {kind}: {path}")

    def log_export_failure(self, error: Exception):
        self.logger.error(f"Export failed: {error}")

    def log_runtime_stats(self, stats: Dict[str, Any]):
        """Log runtime statistics"""
        self.logger.info("Runtime statistics:")
        for key, value in stats.items():
            self.logger.info(f"  {key}: {value}")


def get_rex_logger(name: str = "rex") -> RexLogger:
    """Get a toolkit logger instance"""
    return RexLogger(name)


def setup_logging(level: Union[int, str, None] = None, log_file: Optional[str] = None) -> RexLogger:
    """Route every package logger through the toolkit's handlers"""
    rex = RexLogger(level=level, log_file=log_file)
    root = logging.getLogger()
    root.setLevel(rex.logger.level)
    for handler in rex.logger.handlers:
        if handler not in root.handlers:
            root.addHandler(handler)
    rex.logger.propagate = False
    return rex
