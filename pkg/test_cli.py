"""
Test script to check the command-line front end
"""

import csv
import io

import pytest

import stages.formula_stage as formula_stage
import main as cli
from constructions import turan_graph
from formulas import RexStatus, RexValue, turan_degree_cap
from graphs import decode_graph6, is_regular


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def data_lines(out):
    return [line for line in out.splitlines() if line and not line.startswith("#")]


def rows(out):
    return list(csv.DictReader(io.StringIO("\n".join(data_lines(out)) + "\n")))


# ----------------------------------------------------------------------
# construct / verify
# ----------------------------------------------------------------------

def test_construct_triangle_free(capsys):
    code, out = run(capsys, "construct", "--n", "11", "--forbid", "K3")
    assert code == cli.EXIT_OK
    comments = [line for line in out.splitlines() if line.startswith("#")]
    assert comments[0] == "# n=11 forbid=K3 degree=4 edges=22"
    graph = decode_graph6(data_lines(out)[0])
    assert is_regular(graph) == 4
    assert graph.edge_count == 22


def test_construct_k4_free(capsys):
    code, out = run(capsys, "construct", "--n", "6", "--forbid", "K4")
    assert code == cli.EXIT_OK
    assert decode_graph6(data_lines(out)[0]) == turan_graph(6, 3)


def test_construct_carries_construction_notes(capsys):
    code, out = run(capsys, "construct", "--n", "5", "--forbid", "K5")
    assert code == cli.EXIT_OK
    comments = [line for line in out.splitlines() if line.startswith("#")]
    assert comments[0] == "# n=5 forbid=K5 degree=2 edges=5"
    assert any("spanning cycle" in line for line in comments)
    assert is_regular(decode_graph6(data_lines(out)[0])) == 2


def test_construct_uncovered(capsys):
    code, out = run(capsys, "construct", "--n", "10", "--forbid", "C5")
    assert code == cli.EXIT_USAGE
    assert out == ""
    code, _ = run(capsys, "construct", "--n", "8", "--forbid", "C6")
    assert code == cli.EXIT_USAGE


@pytest.mark.parametrize("argv", [
    ["construct", "--n", "7", "--forbid", "X9"],
    ["construct", "--n", "9..5", "--forbid", "K3"],
    ["construct", "--n", "0", "--forbid", "K3"],
    ["construct", "--n", "7"],
    ["rex", "--n", "7", "--forbid", "K3", "--format", "xlsx"],
    ["nonsense"],
])
def test_usage_errors(capsys, argv):
    code, out = run(capsys, *argv)
    assert code == cli.EXIT_USAGE
    assert out == ""


def test_verify_round_trip(capsys, tmp_path):
    _, out = run(capsys, "construct", "--n", "17", "--forbid", "C5")
    path = tmp_path / "c7.g6"
    path.write_text(out)
    code, report = run(capsys, "verify", "--forbid", "C5", "--degree", "4", "--in", str(path))
    assert code == cli.EXIT_OK
    assert report.splitlines()[0].endswith("PASS")
    code, report = run(capsys, "verify", "--forbid", "C5", "--degree", "3", "--in", str(path))
    assert code == cli.EXIT_VERIFICATION
    assert "FAIL" in report


def test_verify_bad_input(capsys, tmp_path):
    bad = tmp_path / "bad.g6"
    bad.write_text("B!\n")
    assert run(capsys, "verify", "--forbid", "K3", "--degree", "2", "--in", str(bad))[0] == cli.EXIT_USAGE
    empty = tmp_path / "empty.g6"
    empty.write_text("# nothing here\n")
    assert run(capsys, "verify", "--forbid", "K3", "--degree", "2", "--in", str(empty))[0] == cli.EXIT_USAGE


def test_verify_non_ascii_file(capsys, tmp_path):
    bad = tmp_path / "binary.g6"
    bad.write_bytes(b"Bw\xff\n")
    code, out = run(capsys, "verify", "--forbid", "K3", "--degree", "2", "--in", str(bad))
    assert code == cli.EXIT_USAGE
    assert out == ""


def test_verify_non_ascii_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.TextIOWrapper(io.BytesIO("Bwé\n".encode("utf-8")), encoding="utf-8"))
    code, out = run(capsys, "verify", "--forbid", "K3", "--degree", "2")
    assert code == cli.EXIT_USAGE
    assert out == ""


def test_verify_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.TextIOWrapper(io.BytesIO(b"# triangle\nBw\n"), encoding="utf-8"))
    code, out = run(capsys, "verify", "--forbid", "K4", "--degree", "2")
    assert code == cli.EXIT_OK
    assert out.startswith("# certificate n=3 forbid=K4 d=2: PASS")


# ----------------------------------------------------------------------
# rex / table
# ----------------------------------------------------------------------

def test_rex_triangle_with_oracle(capsys):
    code, out = run(capsys, "rex", "--n", "5..9", "--forbid", "K3", "--oracle")
    assert code == cli.EXIT_OK
    table = rows(out)
    assert [int(r["rex_value"]) for r in table] == [5, 9, 7, 16, 9]
    assert [int(r["oracle_value"]) for r in table] == [5, 9, 7, 16, 9]
    assert {r["agreement"] for r in table} == {"agree"}


def test_rex_k4_formula(capsys):
    code, out = run(capsys, "rex", "--n", "7", "--forbid", "K4")
    assert code == cli.EXIT_OK
    (row,) = rows(out)
    assert (row["rex_value"], row["status"], row["source"]) == ("14", "Exact", "formula:k4-thirds")
    assert row["oracle_value"] == ""
    assert row["agreement"] == "unchecked"


@pytest.mark.slow
def test_rex_pendant_triangle_oracle(capsys):
    code, out = run(capsys, "rex", "--n", "9", "--forbid", "custom:0-1,1-2,2-0,0-3", "--oracle")
    assert code == cli.EXIT_OK
    (row,) = rows(out)
    assert row["status"] == "LowerBound"
    assert row["oracle_value"] == "9"


def test_rex_disagreement_exit_code(capsys, monkeypatch):
    def wrong(n, f, thresholds=None):
        return RexValue(n=n, pattern=f, value=99, status=RexStatus.EXACT, branch="wrong")

    monkeypatch.setattr(formula_stage, "rex_formula", wrong)
    code, out = run(capsys, "rex", "--n", "6", "--forbid", "K3", "--oracle")
    assert code == cli.EXIT_DISAGREEMENT
    assert rows(out)[0]["agreement"] == "disagree"


def test_table_triangle(capsys):
    code, out = run(capsys, "table", "--forbid", "K3", "--n", "4..16", "--format", "csv")
    assert code == cli.EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "n,pattern,ex_cap,rex_value,status,source,witness_degree"
    table = rows(out)
    assert len(table) == 13
    for r in table:
        n = int(r["n"])
        assert int(r["rex_value"]) == (n * n // 4 if n % 2 == 0 else n * (n // 5))
        assert int(r["ex_cap"]) == n * n // 4
    value = {int(r["n"]): int(r["rex_value"]) for r in table}
    assert value[7] < value[6]
    assert value[9] < value[8]


def test_table_is_byte_stable(capsys):
    _, first = run(capsys, "table", "--forbid", "K3", "--n", "4..16", "--format", "csv")
    _, second = run(capsys, "table", "--forbid", "K3", "--n", "4..16", "--format", "csv")
    assert first == second
    assert not any(line.startswith("#") for line in first.splitlines())


def test_table_c5_markdown(capsys):
    code, out = run(capsys, "table", "--forbid", "C5", "--n", "7..21", "--format", "md")
    assert code == cli.EXIT_OK
    body = [line for line in out.splitlines()[2:]]
    assert len(body) == 15
    for line in body:
        cells = [c.strip() for c in line.strip("|").split("|")]
        n = int(cells[0])
        if n % 2:
            assert int(cells[3]) == n * (n // 7)
        else:
            assert cells[4] == "NotCovered"


def test_table_k5_flags(capsys):
    code, out = run(capsys, "table", "--forbid", "K5", "--n", "5..16", "--format", "csv")
    assert code == cli.EXIT_OK
    for r in rows(out):
        exact = int(r["witness_degree"]) == turan_degree_cap(int(r["n"]), 4)
        assert (r["status"] == "Exact") == exact
    status = {int(r["n"]): r["status"] for r in rows(out)}
    assert status[5] == "Exact"
    assert status[11] == "LowerBound"


def test_table_to_file(capsys, tmp_path):
    target = tmp_path / "k4.md"
    code, out = run(capsys, "table", "--forbid", "K4", "--n", "3..9", "--format", "md", "--out", str(target))
    assert code == cli.EXIT_OK
    assert out == ""
    assert target.read_text().startswith("| n | pattern |")


def test_verbose_adds_metadata_comment(capsys):
    code, out = run(capsys, "table", "--forbid", "K4", "--n", "3..5", "--verbose")
    assert code == cli.EXIT_OK
    assert out.startswith("# table forbid=K4 n=3..5")


def test_selftest(capsys):
    assert run(capsys, "selftest")[0] == cli.EXIT_OK


def test_parse_range():
    assert cli.parse_range("7") == [7]
    assert cli.parse_range("5..9") == [5, 6, 7, 8, 9]
    with pytest.raises(ValueError):
        cli.parse_range("9..5")
