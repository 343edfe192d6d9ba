"""
Exhaustive ground truth for rex(n, F) at small n, and witness certificates
"""

from .certificates import CertificateEntry, CertificateReport, verify_claim
from .search import (
    DegreeAttempt,
    InfeasibleDegreeError,
    OracleOutcome,
    SearchBudget,
    SearchOutcome,
    SearchResult,
    degree_cap,
    exists_regular_free,
    rex_exact,
)

__all__ = [
    "CertificateEntry",
    "CertificateReport",
    "verify_claim",
    "DegreeAttempt",
    "InfeasibleDegreeError",
    "OracleOutcome",
    "SearchBudget",
    "SearchOutcome",
    "SearchResult",
    "degree_cap",
    "exists_regular_free",
    "rex_exact",
]
