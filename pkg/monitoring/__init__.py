"""
Monitoring module for oracle search tracking
"""

from .runtime_monitor import SearchMonitor

__all__ = ['SearchMonitor']
