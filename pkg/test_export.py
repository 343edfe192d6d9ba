"""
Test script to check export functionality
"""

import io

import pytest

from graphs import complete_graph, edgeless_graph
from utils.export_utils import (
    REX_COLUMNS,
    TABLE_COLUMNS,
    format_csv,
    format_markdown,
    graph6_record,
    read_graph6_lines,
    render_table,
    write_output,
)

ROWS = [
    {"n": 6, "pattern": "K3", "ex_cap": 9, "rex_value": 9, "status": "Exact",
     "source": "formula:bipartite-even", "witness_degree": 3},
    {"n": 7, "pattern": "K3", "ex_cap": 12, "rex_value": 7, "status": "Exact",
     "source": "formula:c5-blowup", "witness_degree": None},
]


def test_csv_layout():
    text = format_csv(ROWS)
    lines = text.split("\n")
    assert lines[0] == ",".join(TABLE_COLUMNS)
    assert lines[1] == "6,K3,9,9,Exact,formula:bipartite-even,3"
    assert lines[2] == "7,K3,12,7,Exact,formula:c5-blowup,"
    assert text.endswith("\n") and "\r" not in text


def test_csv_is_byte_stable():
    assert format_csv(ROWS) == format_csv([dict(r) for r in ROWS])


def test_csv_quotes_custom_patterns():
    row = {"n": 9, "pattern": "custom:0-1,1-2,2-0,0-3", "agreement": True}
    line = format_csv([row], REX_COLUMNS).splitlines()[1]
    assert line.startswith('9,"custom:0-1,1-2,2-0,0-3"')
    assert line.endswith(",true")


def test_markdown_layout():
    lines = format_markdown(ROWS).splitlines()
    assert lines[0] == "| " + " | ".join(TABLE_COLUMNS) + " |"
    assert lines[1].count("---") == len(TABLE_COLUMNS)
    assert lines[3] == "| 7 | K3 | 12 | 7 | Exact | formula:c5-blowup |  |"


def test_render_table_formats():
    assert render_table(ROWS, "csv") == format_csv(ROWS)
    assert render_table(ROWS, "md") == format_markdown(ROWS)
    with pytest.raises(ValueError):
        render_table(ROWS, "xlsx")


def test_graph6_record_and_reader():
    record = graph6_record(complete_graph(3), ["n=3 forbid=K4", "# already a comment"])
    assert record == "# n=3 forbid=K4\n# already a comment\nBw\n"
    stream = io.StringIO(record + "\n" + graph6_record(edgeless_graph(1)))
    assert read_graph6_lines(stream) == [complete_graph(3), edgeless_graph(1)]


def test_write_output_to_file(tmp_path):
    target = tmp_path / "nested" / "table.csv"
    assert write_output("a,b\n", str(target)) == str(target)
    assert target.read_bytes() == b"a,b\n"


def test_write_output_to_stdout(capsys):
    assert write_output("Bw\n") == "<stdout>"
    assert capsys.readouterr().out == "Bw\n"


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
