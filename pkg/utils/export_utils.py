"""
Export utilities for the regular Turán toolkit
Byte-stable CSV / Markdown tables and graph6 records with plan comments
"""

import csv
import io
import os
import sys
import logging
from typing import Any, Dict, Iterable, List, Optional, Sequence, Union

from graphs import Graph, decode_graph6, encode_graph6

logger = logging.getLogger(__name__)

TABLE_COLUMNS = ("n", "pattern", "ex_cap", "rex_value", "status", "source", "witness_degree")
REX_COLUMNS = (
    "n", "pattern", "rex_value", "status", "source",
    "oracle_value", "oracle_status", "construction_edges", "agreement",
)


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def format_csv(rows: Iterable[Dict[str, Any]], columns: Sequence[str] = TABLE_COLUMNS) -> str:
    """CSV with a header line and \\n line endings"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(c)) for c in columns])
    return buffer.getvalue()


def format_markdown(rows: Iterable[Dict[str, Any]], columns: Sequence[str] = TABLE_COLUMNS) -> str:
    """GitHub-style pipe table"""
    lines = [
        "| " + " | ".join(columns) + " |",
        "|" + "|".join("---" for _ in columns) + "|",
    ]
    for row in rows:
        lines.append("| " + " | ".join(_cell(row.get(c)) for c in columns) + " |")
    return "\n".join(lines) + "\n"


def render_table(rows: List[Dict[str, Any]], fmt: str, columns: Sequence[str] = TABLE_COLUMNS) -> str:
    if fmt == "csv":
        return format_csv(rows, columns)
    if fmt == "md":
        return format_markdown(rows, columns)
    raise ValueError(f"unknown table format {fmt!r}; expected csv or md")


def graph6_record(graph: Graph, comments: Sequence[str] = ()) -> str:
    """`#`-prefixed comment lines followed by the graph6 line"""
    lines = [f"# {line}" if not line.startswith("#") else line for line in comments]
    lines.append(encode_graph6(graph).decode("ascii"))
    return "\n".join(lines) + "\n"


def read_graph6_lines(stream: Iterable[Union[bytes, str]]) -> List[Graph]:
    """Every graph6 line of the stream; comments and blank lines are skipped.

    Text lines are re-encoded as UTF-8, so error offsets always count bytes.
    """
    graphs = []
    for line in stream:
        raw = line.encode("utf-8") if isinstance(line, str) else line
        text = raw.strip()
        if not text or text.startswith(b"#"):
            continue
        graphs.append(decode_graph6(text))
    return graphs


def write_output(text: str, out_path: Optional[str] = None) -> str:
    """Write to a file when a path is given, stdout otherwise"""
    if out_path:
        directory = os.path.dirname(out_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(out_path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        logger.info(f"Wrote {len(text)} bytes to {out_path}")
        return out_path
    sys.stdout.write(text)
    sys.stdout.flush()
    return "<stdout>"
