"""
Closed-form Turán and regular Turán numbers
"""

from .rex import (
    FormulaThresholds,
    RexSource,
    RexStatus,
    RexValue,
    andrasfai_degree_cap,
    ex_cap,
    ex_turan,
    rex_formula,
    turan_degree_cap,
)

__all__ = [
    "FormulaThresholds",
    "RexSource",
    "RexStatus",
    "RexValue",
    "andrasfai_degree_cap",
    "ex_cap",
    "ex_turan",
    "rex_formula",
    "turan_degree_cap",
]
