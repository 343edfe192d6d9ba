"""
Test script to check the cross-validation pipeline
"""

import logging

import pytest

import stages.formula_stage as formula_stage
from formulas import FormulaThresholds, RexStatus, RexValue
from utils.workflow_utils import create_initial_state, find_disagreements, should_run_oracle
from workflow import CrossValidationWorkflow, run_row

BUDGET = {"max_nodes": 5_000_000, "max_seconds": 600}


@pytest.fixture
def workflow():
    return CrossValidationWorkflow(thresholds=FormulaThresholds())


def test_formula_only_row(workflow):
    row = workflow.run(7, "K4")
    assert row["rex_value"] == 14
    assert row["status"] == "Exact"
    assert row["source"] == "formula:k4-thirds"
    assert row["construction_edges"] == 14
    assert row["witness_degree"] == 4
    assert row["ex_cap"] == 16
    assert row["agreement"] == "unchecked"
    assert row["oracle_value"] is None
    assert row["disagreements"] == []
    assert row["verification_failures"] == []


def test_oracle_row_agrees(workflow):
    row = workflow.run(6, "K3", use_oracle=True, budget=BUDGET)
    assert row["rex_value"] == row["oracle_value"] == 9
    assert row["oracle_status"] == "Exact"
    assert row["agreement"] == "agree"
    decisions = workflow.get_execution_summary()["conditional_decisions"]
    assert decisions[-1]["decision"] == "oracle"


def test_lower_bound_confirmed_by_oracle(workflow):
    row = workflow.run(7, "C5", use_oracle=True, budget=BUDGET)
    assert row["status"] == "LowerBound"
    assert row["oracle_value"] == 7
    assert row["agreement"] == "agree"
    assert row["assumptions"]


def test_uncovered_row_keeps_construction_error(workflow):
    row = workflow.run(10, "C5")
    assert row["status"] == "NotCovered"
    assert "K_{5,5}" in row["construction_error"]
    assert row["verification_failures"] == []


def test_oracle_above_uncovered_formula_is_consistent(workflow):
    row = workflow.run(6, "C5", use_oracle=True, budget=BUDGET)
    assert row["oracle_value"] == 9
    assert row["agreement"] == "consistent"
    assert not row["disagreements"]


def test_run_range_keeps_order(workflow):
    rows = workflow.run_range([6, 7, 8, 9], "K3")
    assert [r["n"] for r in rows] == [6, 7, 8, 9]
    assert [r["rex_value"] for r in rows] == [9, 7, 16, 9]


def test_run_row_entry_point():
    row = run_row(9, "K5")
    assert row["rex_value"] == 27
    assert row["construction_edges"] == 27


def test_routing():
    assert should_run_oracle({"use_oracle": True}) == "oracle"
    assert should_run_oracle({"use_oracle": False}) == "agreement"


def _state(**values):
    state = create_initial_state(9, "K3", use_oracle=True)
    state.update(values)
    return state


def test_disagreements_between_exact_claims():
    state = _state(formula_value=9, formula_status="Exact", oracle_value=18, oracle_status="Exact")
    assert len(find_disagreements(state)) == 1
    assert find_disagreements(_state(formula_value=9, formula_status="Exact",
                                     oracle_value=9, oracle_status="Exact")) == []


def test_disagreement_when_oracle_beats_exact_formula():
    state = _state(formula_value=9, formula_status="Exact", oracle_value=18, oracle_status="LowerBound")
    assert "above formula Exact" in find_disagreements(state)[0]


def test_disagreement_when_lower_bound_exceeds_exact_oracle():
    state = _state(formula_value=20, formula_status="LowerBound", oracle_value=9, oracle_status="Exact")
    assert "exceeds oracle Exact" in find_disagreements(state)[0]


def test_disagreement_with_construction():
    state = _state(formula_value=9, formula_status="Exact", construction_edges=8)
    assert "construction has 8 edges" in find_disagreements(state)[0]


def test_disagreement_logged_once(workflow, monkeypatch, caplog):
    def wrong(n, f, thresholds=None):
        return RexValue(n=n, pattern=f, value=99, status=RexStatus.EXACT, branch="wrong")

    monkeypatch.setattr(formula_stage, "rex_formula", wrong)
    # setup_logging detaches the rex logger from the root handlers caplog listens on
    monkeypatch.setattr(workflow.rex_logger.logger, "propagate", True)
    with caplog.at_level(logging.ERROR):
        row = workflow.run(6, "K3", use_oracle=True, budget=BUDGET)
    assert row["agreement"] == "disagree"
    logged = [r for r in caplog.records if "DISAGREEMENT" in r.getMessage()]
    assert len(logged) == len(row["disagreements"]) == 2


def test_k4_lower_bound_at_eight_is_consistent_with_oracle(workflow):
    row = workflow.run(8, "K4", use_oracle=True, budget=BUDGET)
    assert (row["rex_value"], row["status"]) == (16, "LowerBound")
    assert (row["oracle_value"], row["oracle_status"]) == (20, "Exact")
    assert row["agreement"] == "consistent"
    assert row["disagreements"] == []
