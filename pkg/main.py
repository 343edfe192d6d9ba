"""
Main entry point for the regular Turán toolkit
Subcommands: construct, verify, rex, table, selftest
"""

import argparse
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Any, List, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator
from rich.console import Console
from rich.table import Table
from tqdm import tqdm

from constructions import (
    ConstructionError,
    ConstructionVerificationError,
    build_for_pattern,
    c5_blowup_extremal,
    c7_blowup_extremal,
    k4_extremal,
    regularized_turan,
)
from formulas import ex_turan
from graphs import Graph6FormatError
from oracle import verify_claim
from patterns import PatternError, parse_pattern
from utils import (
    REX_COLUMNS,
    TABLE_COLUMNS,
    get_config,
    get_rex_logger,
    graph6_record,
    print_config_status,
    read_graph6_lines,
    render_table,
    setup_logging,
    write_output,
)
from workflow import CrossValidationWorkflow, run_row

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_DISAGREEMENT = 3

console = Console(stderr=True)


def parse_range(text: str) -> List[int]:
    """`7` or `5..9` (inclusive)"""
    value = text.strip()
    if ".." in value:
        low, _, high = value.partition("..")
        start, stop = int(low), int(high)
        if stop < start:
            raise ValueError(f"empty range {text!r}")
        return list(range(start, stop + 1))
    return [int(value)]


class CommandRequest(BaseModel):
    """A validated command line"""

    model_config = ConfigDict(frozen=True)

    subcommand: str
    ns: List[int] = Field(default_factory=list)
    pattern_spec: Optional[str] = None
    use_oracle: bool = False
    budget_nodes: Optional[int] = Field(default=None, gt=0)
    budget_seconds: Optional[float] = Field(default=None, gt=0)
    use_degree_caps: bool = True
    fmt: str = "csv"
    out: Optional[str] = None
    in_path: Optional[str] = None
    degree: Optional[int] = Field(default=None, ge=0)
    workers: int = Field(default=1, gt=0)
    verbose: bool = False

    @field_validator("subcommand")
    @classmethod
    def _known(cls, value: str) -> str:
        if value not in ("construct", "verify", "rex", "table", "selftest"):
            raise ValueError(f"unknown subcommand {value!r}")
        return value

    @field_validator("pattern_spec")
    @classmethod
    def _parses(cls, value: Optional[str]) -> Optional[str]:
        if value is not None:
            parse_pattern(value)
        return value

    @field_validator("ns")
    @classmethod
    def _positive(cls, value: List[int]) -> List[int]:
        if any(n < 1 for n in value):
            raise ValueError("n must be positive")
        return value

    @field_validator("fmt")
    @classmethod
    def _format(cls, value: str) -> str:
        if value not in ("csv", "md"):
            raise ValueError(f"format must be csv or md, got {value!r}")
        return value

    def budget(self) -> Dict[str, Any]:
        return {
            "max_nodes": self.budget_nodes,
            "max_seconds": self.budget_seconds,
            "use_degree_caps": self.use_degree_caps,
        }


def build_parser() -> argparse.ArgumentParser:
    cfg = get_config()
    parser = argparse.ArgumentParser(
        prog="rex",
        description="Regular Turán numbers: constructions, closed forms and exhaustive checks",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, needs_n=True):
        if needs_n:
            p.add_argument("--n", required=True, help="INT or A..B")
        p.add_argument("--forbid", required=True, help="K<r>, K4-e, C<g> or custom:u-v,...")
        p.add_argument("--verbose", action="store_true")

    p = sub.add_parser("construct", help="emit a verified regular F-free witness as graph6")
    common(p)
    p.add_argument("--out")

    p = sub.add_parser("verify", help="check graph6 graphs for d-regularity and F-freeness")
    common(p, needs_n=False)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--in", dest="in_path")

    for name, help_text in (("rex", "formula value per n, optionally checked by exhaustive search"),
                            ("table", "byte-stable table of ex and rex values")):
        p = sub.add_parser(name, help=help_text)
        common(p)
        p.add_argument("--format", dest="fmt", choices=("csv", "md"), default=cfg.default_format)
        p.add_argument("--out")
        p.add_argument("--workers", type=int, default=cfg.workers)
        if name == "rex":
            p.add_argument("--oracle", action="store_true")
            p.add_argument("--budget-nodes", type=int)
            p.add_argument("--budget-seconds", type=float)
            p.add_argument("--no-degree-caps", action="store_true")

    p = sub.add_parser("selftest", help="run the built-in acceptance battery")
    p.add_argument("--verbose", action="store_true")
    return parser


def to_request(args: argparse.Namespace) -> CommandRequest:
    return CommandRequest(
        subcommand=args.subcommand,
        ns=parse_range(args.n) if getattr(args, "n", None) else [],
        pattern_spec=getattr(args, "forbid", None),
        use_oracle=getattr(args, "oracle", False),
        budget_nodes=getattr(args, "budget_nodes", None),
        budget_seconds=getattr(args, "budget_seconds", None),
        use_degree_caps=not getattr(args, "no_degree_caps", False),
        fmt=getattr(args, "fmt", "csv"),
        out=getattr(args, "out", None),
        in_path=getattr(args, "in_path", None),
        degree=getattr(args, "degree", None),
        workers=getattr(args, "workers", 1),
        verbose=args.verbose,
    )


def _export(text: str, out_path: Optional[str], kind: str):
    target = write_output(text, out_path)
    if out_path:
        get_rex_logger().log_export_success({kind: target})


def cmd_construct(request: CommandRequest) -> int:
    f = parse_pattern(request.pattern_spec)
    chunks = []
    for n in request.ns:
        try:
            result = build_for_pattern(n, f)
        except ConstructionVerificationError as e:
            get_rex_logger().log_construction_failure(n, f.spec, e)
            return EXIT_VERIFICATION
        except ConstructionError as e:
            console.print(f"[red]error:[/red] {e}")
            return EXIT_USAGE
        report = verify_claim(result.graph, f, result.claimed_degree)
        if not report.passed:
            for line in report.to_lines():
                logger.error(line)
            return EXIT_VERIFICATION
        comments = [
            f"n={n} forbid={f.spec} degree={result.claimed_degree} edges={result.claimed_edges}"
            + (" lower-bound" if result.lower_bound_only else ""),
        ] + list(result.notes) + result.plan.to_text().splitlines()
        chunks.append(graph6_record(result.graph, comments))
    _export("".join(chunks), request.out, "graph6")
    return EXIT_OK


def cmd_verify(request: CommandRequest) -> int:
    f = parse_pattern(request.pattern_spec)
    try:
        if request.in_path:
            with open(request.in_path, "rb") as handle:
                graphs = read_graph6_lines(handle)
        else:
            graphs = read_graph6_lines(getattr(sys.stdin, "buffer", sys.stdin))
    except Graph6FormatError as e:
        console.print(f"[red]error:[/red] bad graph6 input at offset {e.offset}: {e}")
        return EXIT_USAGE
    except OSError as e:
        console.print(f"[red]error:[/red] cannot read {request.in_path}: {e}")
        return EXIT_USAGE
    if not graphs:
        console.print("[red]error:[/red] no graph6 lines to verify")
        return EXIT_USAGE

    lines, failed = [], 0
    for graph in graphs:
        report = verify_claim(graph, f, request.degree)
        failed += not report.passed
        lines.extend(report.to_lines())
    write_output("\n".join(lines) + "\n")
    return EXIT_VERIFICATION if failed else EXIT_OK


def _run_rows(request: CommandRequest, use_oracle: bool) -> List[Dict[str, Any]]:
    budget = request.budget()
    if request.workers > 1 and len(request.ns) > 1:
        with ProcessPoolExecutor(max_workers=request.workers) as pool:
            jobs = pool.map(run_row, request.ns, [request.pattern_spec] * len(request.ns),
                            [use_oracle] * len(request.ns), [budget] * len(request.ns))
            return list(tqdm(jobs, total=len(request.ns), file=sys.stderr, disable=not request.verbose))
    workflow = CrossValidationWorkflow()
    return [
        workflow.run(n, request.pattern_spec, use_oracle, budget)
        for n in tqdm(request.ns, file=sys.stderr, disable=not request.verbose)
    ]


def _verdict(rows: List[Dict[str, Any]]) -> int:
    if any(row["disagreements"] for row in rows):
        return EXIT_DISAGREEMENT
    if any(row["verification_failures"] for row in rows):
        for row in rows:
            for failure in row["verification_failures"]:
                logger.error(f"n={row['n']} {row['pattern']}: {failure}")
        return EXIT_VERIFICATION
    return EXIT_OK


def _metadata(request: CommandRequest) -> str:
    ns = request.ns
    span = f"{ns[0]}..{ns[-1]}" if len(ns) > 1 else str(ns[0])
    return f"# {request.subcommand} forbid={request.pattern_spec} n={span} format={request.fmt}\n"


def cmd_rex(request: CommandRequest) -> int:
    rows = _run_rows(request, request.use_oracle)
    text = render_table(rows, request.fmt, REX_COLUMNS)
    if request.verbose:
        text = _metadata(request) + text
    _export(text, request.out, "rex table")
    return _verdict(rows)


def cmd_table(request: CommandRequest) -> int:
    rows = _run_rows(request, use_oracle=False)
    text = render_table(rows, request.fmt, TABLE_COLUMNS)
    if request.verbose:
        text = _metadata(request) + text
    _export(text, request.out, "table")
    return _verdict(rows)


def _selftest_checks():
    """(name, callable returning None or a failure message)"""

    def family(builder, ns, edges_of):
        def check():
            for n in ns:
                result = builder(n)
                if result.claimed_edges != edges_of(n):
                    return f"n={n}: {result.claimed_edges} edges, expected {edges_of(n)}"
            return None
        return check

    def turan_spot():
        result = regularized_turan(9, 4)
        expected = ex_turan(9, 4) - 3
        return None if result.claimed_edges == expected else f"{result.claimed_edges} != {expected}"

    checks = [
        ("C5 blow-up, odd n 5..25", family(c5_blowup_extremal, range(5, 26, 2), lambda n: n * (n // 5))),
        ("C7 blow-up, odd n 7..35", family(c7_blowup_extremal, range(7, 36, 2), lambda n: n * (n // 7))),
        ("K4 schedule, n 3..20", family(k4_extremal, range(3, 21), lambda n: n * (n // 3))),
        ("regularized T(9,4)", turan_spot),
    ]
    return checks


def cmd_selftest(request: CommandRequest) -> int:
    table = Table(title="selftest")
    table.add_column("check")
    table.add_column("result")
    code = EXIT_OK

    for name, check in _selftest_checks():
        try:
            failure = check()
        except ConstructionError as e:
            failure = str(e)
        table.add_row(name, "ok" if failure is None else f"FAIL: {failure}")
        if failure is not None:
            code = max(code, EXIT_VERIFICATION)

    workflow = CrossValidationWorkflow()
    budget = {"max_seconds": 60.0}
    for spec in ("K3", "K4", "K4-e", "C5"):
        rows = [workflow.run(n, spec, use_oracle=True, budget=budget) for n in range(3, 10)]
        verdict = _verdict(rows)
        summary = ", ".join(f"{row['n']}:{row['oracle_value']}" for row in rows)
        table.add_row(f"formula vs oracle {spec}, n 3..9", ("ok " if verdict == EXIT_OK else "FAIL ") + summary)
        code = max(code, verdict)

    console.print(table)
    if request.verbose:
        get_rex_logger().log_runtime_stats(workflow.inspect_runtime_state())
    return code


COMMANDS = {
    "construct": cmd_construct,
    "verify": cmd_verify,
    "rex": cmd_rex,
    "table": cmd_table,
    "selftest": cmd_selftest,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the regular Turán toolkit"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    setup_logging(logging.INFO if args.verbose else get_config().log_level)
    if args.verbose:
        print_config_status(console)

    try:
        request = to_request(args)
    except (ValueError, ValidationError, PatternError) as e:
        console.print(f"[red]error:[/red] {e}")
        return EXIT_USAGE

    try:
        return COMMANDS[request.subcommand](request)
    except ConstructionVerificationError as e:
        logger.error(f"Internal verification failure: {e}")
        return EXIT_VERIFICATION
    except OSError as e:
        get_rex_logger().log_export_failure(e)
        console.print(f"[red]error:[/red] {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
