"""
Test script to check the exhaustive regular Turán search
"""

import pytest

import oracle.search as search_module
from constructions import c7_blowup_extremal
from formulas import RexStatus, rex_formula, FormulaThresholds
from graphs import complete_graph, is_regular
from monitoring import SearchMonitor
from oracle import (
    InfeasibleDegreeError,
    SearchBudget,
    SearchOutcome,
    SearchResult,
    degree_cap,
    exists_regular_free,
    rex_exact,
    verify_claim,
)
from patterns import ForbiddenPattern, contains_subgraph, parse_pattern

K3 = ForbiddenPattern.clique(3)
K4 = ForbiddenPattern.clique(4)
K4E = ForbiddenPattern.k4_minus_edge()
C5 = ForbiddenPattern.cycle(5)
C7 = ForbiddenPattern.cycle(7)
TRIANGLE_WITH_PENDANT = parse_pattern("custom:0-1,1-2,2-0,2-3")

AMPLE = SearchBudget(max_nodes=50_000_000, max_seconds=3600)
UNCAPPED = SearchBudget(max_nodes=50_000_000, max_seconds=3600, use_degree_caps=False)


def oracle_value(n, f, budget=AMPLE):
    outcome = rex_exact(n, f, budget)
    assert outcome.rex.status is RexStatus.EXACT
    return outcome.rex.value


# ----------------------------------------------------------------------
# single degree
# ----------------------------------------------------------------------

def test_exists_regular_free_examples():
    found = exists_regular_free(5, 2, K3, AMPLE)
    assert found.result is SearchResult.FOUND
    assert is_regular(found.graph) == 2
    assert not contains_subgraph(found.graph, K3)

    assert exists_regular_free(7, 4, K3, UNCAPPED).result is SearchResult.EXHAUSTED

    k4 = exists_regular_free(7, 4, K4, AMPLE)
    assert k4.result is SearchResult.FOUND
    assert verify_claim(k4.graph, K4, 4).passed


def test_exists_regular_free_rejects_bad_degrees():
    with pytest.raises(InfeasibleDegreeError):
        exists_regular_free(5, 3, K3)
    with pytest.raises(ValueError):
        exists_regular_free(5, 5, K3)
    assert exists_regular_free(4, 0, K3).graph.edge_count == 0


def test_budget_stops_search():
    outcome = exists_regular_free(8, 4, K4, SearchBudget(max_nodes=3))
    assert outcome.result is SearchResult.BUDGET
    assert outcome.graph is None


# ----------------------------------------------------------------------
# degree caps
# ----------------------------------------------------------------------

def test_degree_caps():
    assert degree_cap(9, K3, AMPLE) == (3, ())
    assert degree_cap(8, K3, AMPLE) == (4, ())
    assert degree_cap(8, K4, AMPLE) == (5, ())
    assert degree_cap(7, ForbiddenPattern.clique(5), AMPLE) == (4, ())
    assert degree_cap(8, K4E, AMPLE) == (4, ())
    assert degree_cap(9, K3, UNCAPPED) == (8, ())
    assert degree_cap(5, C5, AMPLE) == (4, ())
    cap, assumptions = degree_cap(9, C5, AMPLE)
    assert cap == 2 and assumptions
    assert degree_cap(9, C5, SearchBudget(odd_cycle_cap=False)) == (4, ())
    assert degree_cap(7, C7, AMPLE) == (6, ())
    assert degree_cap(9, TRIANGLE_WITH_PENDANT, AMPLE) == (8, ())
    cap, assumptions = degree_cap(9, K3, SearchBudget(degree_cap_override=2))
    assert cap == 2 and assumptions


def test_odd_cycle_cap_not_applied_below_its_range():
    # a triangle plus a 4-cycle is 2-regular and has no 7-cycle
    assert oracle_value(7, C7) == 7


# ----------------------------------------------------------------------
# rex
# ----------------------------------------------------------------------

@pytest.mark.parametrize("n,f,expected", [
    (5, K3, 5),
    (6, K3, 9),
    (4, K3, 4),
    (7, K3, 7),
    (8, K3, 16),
    (4, K4, 4),
    (5, K4, 5),
    (6, K4, 12),
    (7, K4, 14),
    (8, K4, 20),
    (9, K4, 27),
    (7, K4E, 7),
    (6, C5, 9),
    (7, C5, 7),
])
def test_rex_exact_values(n, f, expected):
    assert oracle_value(n, f) == expected


@pytest.mark.slow
@pytest.mark.parametrize("n,expected", [(9, 9), (11, 22)])
def test_rex_exact_triangle_large(n, expected):
    assert oracle_value(n, K3) == expected


@pytest.mark.slow
def test_rex_exact_c5_nine():
    outcome = rex_exact(9, C5, AMPLE)
    assert outcome.rex.value == 9
    assert outcome.rex.assumptions


def test_witness_passes_certificate():
    outcome = rex_exact(8, K4, AMPLE)
    witness = outcome.rex.witness
    assert verify_claim(witness, K4, outcome.rex.witness_degree).passed


def test_descending_degrees_recorded():
    outcome = rex_exact(7, K3, UNCAPPED)
    degrees = [attempt.degree for attempt in outcome.degrees_tried]
    assert degrees == [6, 4, 2]
    assert [a.result for a in outcome.degrees_tried] == [
        SearchResult.EXHAUSTED, SearchResult.EXHAUSTED, SearchResult.FOUND,
    ]
    assert outcome.nodes_expanded == sum(a.nodes for a in outcome.degrees_tried)


@pytest.mark.parametrize("n", [5, 7])
def test_degree_cap_is_safe(n):
    assert oracle_value(n, K3, AMPLE) == oracle_value(n, K3, UNCAPPED)


@pytest.mark.slow
def test_degree_cap_is_safe_at_nine():
    assert oracle_value(9, K3, AMPLE) == oracle_value(9, K3, UNCAPPED)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8, 9])
@pytest.mark.parametrize("spec", ["K3", "K4", "K4-e", "C5"])
def test_formula_agrees_with_oracle(n, spec):
    f = parse_pattern(spec)
    formula = rex_formula(n, f, FormulaThresholds())
    outcome = rex_exact(n, f, AMPLE)
    if formula.status is RexStatus.EXACT:
        assert outcome.rex.value == formula.value
    elif formula.status is RexStatus.LOWER_BOUND:
        assert outcome.rex.value >= formula.value


def test_search_is_deterministic():
    first = rex_exact(8, K4, AMPLE)
    second = rex_exact(8, K4, AMPLE)
    assert first.rex.witness == second.rex.witness
    assert first.degrees_tried == second.degrees_tried


def test_exhausted_budget_is_inconclusive():
    outcome = rex_exact(8, K4, SearchBudget(max_nodes=1))
    assert outcome.rex.status is RexStatus.INCONCLUSIVE
    assert outcome.degrees_tried[-1].degree == 0


def test_budget_hit_downgrades_to_lower_bound(monkeypatch):
    real = search_module.exists_regular_free

    def fake(n, d, f, budget=None, deadline=None):
        if d == 4:
            return SearchOutcome(SearchResult.BUDGET, None, 10)
        return real(n, d, f, budget, deadline)

    monkeypatch.setattr(search_module, "exists_regular_free", fake)
    outcome = rex_exact(7, K4, AMPLE)
    assert outcome.rex.status is RexStatus.LOWER_BOUND
    assert outcome.rex.value == 7


def test_monitor_tracks_attempts():
    monitor = SearchMonitor()
    rex_exact(6, K3, AMPLE, monitor=monitor, search_id="k3-six")
    summary = monitor.get_search_summary("k3-six")
    assert summary["status"] == "Exact"
    assert summary["value"] == 9
    assert [a["degree"] for a in summary["attempts"]] == [3]


@pytest.mark.parametrize("n,d,f", [(7, 4, K3)])
def test_caps_confirmed_by_full_search(n, d, f):
    assert exists_regular_free(n, d, f, UNCAPPED).result is SearchResult.EXHAUSTED


@pytest.mark.slow
@pytest.mark.parametrize("n,d,f", [(9, 4, K3), (9, 4, C5)])
def test_caps_confirmed_by_full_search_at_nine(n, d, f):
    assert exists_regular_free(n, d, f, UNCAPPED).result is SearchResult.EXHAUSTED


@pytest.mark.parametrize("n", [7])
def test_pendant_triangle_matches_triangle(n):
    assert oracle_value(n, TRIANGLE_WITH_PENDANT) == oracle_value(n, K3)


@pytest.mark.slow
@pytest.mark.parametrize("n", [9, 11])
def test_pendant_triangle_matches_triangle_large(n):
    assert oracle_value(n, TRIANGLE_WITH_PENDANT) == oracle_value(n, K3)


# ----------------------------------------------------------------------
# certificates
# ----------------------------------------------------------------------

def test_verify_claim_examples():
    c5 = rex_exact(5, K3, AMPLE).rex.witness
    assert verify_claim(c5, K3, 2).passed

    report = verify_claim(complete_graph(4), K3, 3)
    assert not report.passed
    assert [entry.check for entry in report.failures()] == ["forbidden-free"]
    assert report.to_lines()[0].endswith("FAIL")

    assert verify_claim(c7_blowup_extremal(17).graph, C5, 4).passed


def test_verify_claim_wrong_degree():
    report = verify_claim(complete_graph(4), K4E, 2)
    checks = {entry.check for entry in report.failures()}
    assert checks == {"regular", "forbidden-free", "edge-count"}


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
