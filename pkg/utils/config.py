"""
Configuration utility for the regular Turán toolkit
Loads environment variables and provides configuration defaults
"""

import os
from dotenv import load_dotenv
from typing import List, Optional

from rich.console import Console


def _flag(name: str, default: str) -> bool:
    return os.getenv(name, default).strip().lower() in ("1", "true", "yes", "on")


class Config:
    """Configuration class for formulas, oracle budgets and output"""

    def __init__(self):
        # Load environment variables from .env file
        load_dotenv()

        # "Sufficiently large n" thresholds for the formula branches
        self.k4e_threshold = int(os.getenv("REX_K4E_THRESHOLD", "25"))
        self.c5_threshold = int(os.getenv("REX_C5_THRESHOLD", "21"))
        self.unicyclic_threshold = int(os.getenv("REX_UNICYCLIC_THRESHOLD", "25"))

        # Oracle budget
        self.budget_nodes = int(os.getenv("REX_BUDGET_NODES", "2000000"))
        self.budget_seconds = float(os.getenv("REX_BUDGET_SECONDS", "300"))
        self.odd_cycle_cap = _flag("REX_ODD_CYCLE_CAP", "true")
        self.workers = int(os.getenv("REX_WORKERS", "1"))

        # Output settings
        self.default_format = os.getenv("REX_DEFAULT_FORMAT", "csv").strip().lower()
        self.log_level = os.getenv("REX_LOG_LEVEL", "WARNING").strip().upper()
        self.log_file: Optional[str] = os.getenv("REX_LOG_FILE") or None

    def problems(self) -> List[str]:
        """Every configuration value that is out of range"""
        issues = []
        for name, value in (
            ("REX_K4E_THRESHOLD", self.k4e_threshold),
            ("REX_C5_THRESHOLD", self.c5_threshold),
            ("REX_UNICYCLIC_THRESHOLD", self.unicyclic_threshold),
            ("REX_BUDGET_NODES", self.budget_nodes),
            ("REX_BUDGET_SECONDS", self.budget_seconds),
            ("REX_WORKERS", self.workers),
        ):
            if value <= 0:
                issues.append(f"{name} must be positive, got {value}")
        if self.default_format not in ("csv", "md"):
            issues.append(f"REX_DEFAULT_FORMAT must be csv or md, got {self.default_format!r}")
        return issues

    def validate(self) -> bool:
        """Validate that every setting is in range"""
        return not self.problems()

    def get_formula_config(self) -> dict:
        """Get formula threshold configuration"""
        return {
            "k4e_threshold": self.k4e_threshold,
            "c5_threshold": self.c5_threshold,
            "unicyclic_threshold": self.unicyclic_threshold,
        }

    def get_budget_config(self) -> dict:
        """Get oracle budget configuration"""
        return {
            "max_nodes": self.budget_nodes,
            "max_seconds": self.budget_seconds,
            "odd_cycle_cap": self.odd_cycle_cap,
        }


# Global configuration instance
config = Config()


def get_config() -> Config:
    """Get the global configuration instance"""
    return config


def print_config_status(console: Optional[Console] = None):
    """Print configuration status to stderr"""
    console = console or Console(stderr=True)
    console.print("Configuration Status:")
    console.print("=" * 30)

    for issue in config.problems():
        console.print(f"❌ {issue}")
    if config.validate():
        console.print("✅ Configuration: valid")

    console.print(f"📐 K4-e threshold: {config.k4e_threshold}")
    console.print(f"📐 C5 threshold: {config.c5_threshold}")
    console.print(f"📐 Unicyclic threshold: {config.unicyclic_threshold}")
    console.print(f"🔍 Budget: {config.budget_nodes} nodes / {config.budget_seconds}s")
    console.print(f"🔍 Odd-cycle degree cap: {config.odd_cycle_cap}")
    console.print(f"🧵 Workers: {config.workers}")
    console.print(f"📄 Default format: {config.default_format}")
    console.print(f"📝 Log level: {config.log_level}" + (f" (file: {config.log_file})" if config.log_file else ""))

    console.print("=" * 30)
