"""
Search Monitor for oracle runs
Tracks every degree attempt of every exhaustive search and provides runtime inspection
"""

import time
import logging
from typing import Dict, Any, List, Optional

logger = logging.getLogger(__name__)


class SearchMonitor:
    """Runtime monitor for tracking exhaustive searches"""

    def __init__(self):
        self.search_log: List[Dict[str, Any]] = []
        self.current_search_id: Optional[str] = None

    def start_search(self, search_id: str, n: int, pattern: str, degree_cap: int):
        """Start tracking a new search"""
        self.current_search_id = search_id
        self.search_log.append({
            "search_id": search_id,
            "n": n,
            "pattern": pattern,
            "degree_cap": degree_cap,
            "start_time": time.time(),
            "attempts": [],
            "status": None,
            "value": None,
        })
        logger.info(f"Started search tracking: {search_id} (degree cap {degree_cap})")

    def log_degree_attempt(self, degree: int, result: str, nodes: int, seconds: float):
        """Log one degree of the descending sweep"""
        if not self.current_search_id:
            return
        self.search_log[-1]["attempts"].append({
            "degree": degree,
            "result": result,
            "nodes": nodes,
            "seconds": seconds,
        })
        logger.debug(f"{self.current_search_id}: d={degree} -> {result} ({nodes} nodes, {seconds:.3f}s)")

    def finish_search(self, status: str, value: int):
        if not self.current_search_id:
            return
        search = self.search_log[-1]
        search["status"] = status
        search["value"] = value
        search["duration"] = time.time() - search["start_time"]
        logger.info(f"Finished search {self.current_search_id}: {value} [{status}]")
        self.current_search_id = None

    def get_search_summary(self, search_id: str = None):
        """Get search summary"""
        if search_id:
            for search in self.search_log:
                if search["search_id"] == search_id:
                    return search
            return None
        return self.search_log[-1] if self.search_log else None

    def get_runtime_stats(self):
        """Get runtime statistics"""
        if not self.search_log:
            return {"message": "No searches tracked"}

        results: Dict[str, int] = {}
        total_nodes = 0
        for search in self.search_log:
            for attempt in search["attempts"]:
                results[attempt["result"]] = results.get(attempt["result"], 0) + 1
                total_nodes += attempt["nodes"]

        return {
            "total_searches": len(self.search_log),
            "degree_attempts": results,
            "nodes_expanded": total_nodes,
            "current_search": self.current_search_id,
        }
