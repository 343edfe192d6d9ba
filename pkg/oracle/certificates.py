"""
Certificate reports: independent checks of a claimed regular F-free witness
"""

from dataclasses import dataclass, field
from typing import List, Tuple

from graphs import Graph, degree_sequence
from patterns import ForbiddenPattern, find_pattern


@dataclass(frozen=True)
class CertificateEntry:
    check: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class CertificateReport:
    pattern: str
    n: int
    claimed_degree: int
    entries: Tuple[CertificateEntry, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.entries)

    def failures(self) -> List[CertificateEntry]:
        return [entry for entry in self.entries if not entry.passed]

    def to_lines(self) -> List[str]:
        head = f"# certificate n={self.n} forbid={self.pattern} d={self.claimed_degree}: {'PASS' if self.passed else 'FAIL'}"
        body = [f"#   {'ok  ' if e.passed else 'FAIL'} {e.check}: {e.detail}" for e in self.entries]
        return [head] + body


def verify_claim(g: Graph, f: ForbiddenPattern, claimed_d: int) -> CertificateReport:
    """Check d-regularity, F-freeness and the edge count d*n/2; failures are entries, not errors"""
    degrees = sorted(set(degree_sequence(g)))
    if degrees == [claimed_d] or (g.n == 0 and claimed_d == 0):
        regular = CertificateEntry("regular", True, f"every vertex has degree {claimed_d}")
    else:
        regular = CertificateEntry("regular", False, f"degrees present: {degrees}")

    witness = find_pattern(g, f)
    if witness is None:
        free = CertificateEntry("forbidden-free", True, f"no copy of {f.spec}")
    else:
        free = CertificateEntry("forbidden-free", False, f"copy of {f.spec} on vertices {list(witness)}")

    twice = claimed_d * g.n
    if twice % 2 == 0 and g.edge_count == twice // 2:
        edges = CertificateEntry("edge-count", True, f"{g.edge_count} edges")
    else:
        expected = twice / 2 if twice % 2 else twice // 2
        edges = CertificateEntry("edge-count", False, f"{g.edge_count} edges, expected {expected}")

    return CertificateReport(pattern=f.spec, n=g.n, claimed_degree=claimed_d, entries=(regular, free, edges))
