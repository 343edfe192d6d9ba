"""
Cross-validation pipeline stages
"""

from .formula_stage import FormulaStage
from .construction_stage import ConstructionStage
from .oracle_stage import OracleStage
from .agreement_stage import AgreementStage

__all__ = [
    "FormulaStage",
    "ConstructionStage",
    "OracleStage",
    "AgreementStage",
]
