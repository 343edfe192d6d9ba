"""
Graph logging module for pipeline execution
"""

from .graph_logger import PipelineLogger

__all__ = ['PipelineLogger']
