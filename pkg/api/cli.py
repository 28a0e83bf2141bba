"""Командная строка: analyze, verify, classify, family, enumerate, spectrum.

Коды выхода: 0 - успех, 1 - контрпример или несогласованность,
2 - ошибка использования или разбора, 3 - превышение емкости или численный сбой.
"""

import argparse
import os
import sys
from typing import IO, Iterable, List, Optional

from pydantic import ValidationError

from catalog.catalog_file import dump_jsonl, read_catalog
from catalog.generator import EnumerationSpec, all_graphs
from catalog.graph6 import emit_graph6, parse_graph6
from cores.exact_core import char_poly
from cores.graph_core import Graph
from cores.spectrum_core import eigenvalues
from families.constructors import build_family, parse_family_spec
from families.recognizers import classify
from harness.analysis import analyze
from harness.checks import parse_theorem_ids
from harness.models import AnalysisReport, ReportHeader, SuiteSummary
from harness.suite import SuiteSource, run_suite
from utils.config import configure, get_config, get_tolerances, load_config
from utils.errors import InputError, ToolkitError
from utils.logger import get_system_logger, log_exception, setup_logging


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graph-energy",
                                     description="Energy, rank and chromatic number of small graphs")
    parser.add_argument("--config", help="YAML file with tolerances and limits")
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        help="log level for stderr (default from config)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one or more graphs")
    p.add_argument("graph6", nargs="?")
    p.add_argument("--file", help="graph6 catalog, one graph per line")
    p.add_argument("--family", help="family spec, e.g. family:A:7,4")
    p.add_argument("--pretty", action="store_true")

    p = sub.add_parser("verify", help="run theorem checks over a graph source")
    p.add_argument("--theorems", default="all", help="T1,...,T16 or 'all'")
    p.add_argument("--max-n", type=int, help="exhaustive enumeration of all graphs up to N vertices")
    p.add_argument("--file", help="graph6 catalog")
    p.add_argument("--family", action="append", default=[], help="family spec (repeatable)")
    p.add_argument("--jobs", type=int, help="worker processes")
    p.add_argument("--summary-file", help="write the summary here instead of stderr")
    p.add_argument("--failures-only", action="store_true", help="emit only failed and errored checks")
    p.add_argument("--no-constructed", action="store_true",
                   help="do not append B_n, named graphs and larger trees to an enumeration")
    p.add_argument("--progress", action="store_true")
    p.add_argument("--pretty", action="store_true")

    p = sub.add_parser("classify", help="structural classification record")
    p.add_argument("graph6")

    p = sub.add_parser("family", help="build a named family member")
    p.add_argument("spec")
    p.add_argument("--emit-graph6", action="store_true")

    p = sub.add_parser("enumerate", help="all graphs on N vertices up to isomorphism")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--trees", action="store_true")
    p.add_argument("--bipartite", action="store_true")

    p = sub.add_parser("spectrum", help="adjacency spectrum and energy")
    p.add_argument("graph6")
    p.add_argument("--charpoly", action="store_true")
    return parser


class Painter:
    """Цвет только на терминале и только без NO_COLOR"""

    def __init__(self, stream: IO[str]):
        self.enabled = stream.isatty() and "NO_COLOR" not in os.environ

    def paint(self, text: str, color: str) -> str:
        if not self.enabled:
            return text
        code = {"green": "32", "red": "31", "yellow": "33"}[color]
        return f"\033[{code}m{text}\033[0m"


def _write_json(record, out: IO[str]):
    dump_jsonl([record], out)


def _render_report(report: AnalysisReport, out: IO[str], painter: Painter):
    rows = [
        ("graph6", report.graph6), ("n", report.n), ("m", report.m),
        ("energy", f"{report.energy:.9f}"), ("energy(complement)", f"{report.energy_complement:.9f}"),
        ("rank", report.rank), ("|a_r|", report.a_r_abs), ("chi", report.chi),
        ("chi(complement)", report.chi_complement), ("positive", report.positive_count),
        ("spectrum", " ".join(f"{v:.6f}" for v in report.spectrum)),
        ("finck type", report.classification.finck_type),
        ("E<2chi exception", report.classification.theorem_ab_exception.family
         if report.classification.theorem_ab_exception else "none"),
    ]
    width = max(len(k) for k, _ in rows)
    for key, value in rows:
        out.write(f"{key.ljust(width)}  {value}\n")
    for tid, passed in report.theorem_flags.items():
        mark = "-" if passed is None else (painter.paint("PASS", "green") if passed
                                          else painter.paint("FAIL", "red"))
        out.write(f"  {tid.ljust(4)} {mark}\n")
    out.write("\n")


def _render_summary(summary: SuiteSummary, out: IO[str], painter: Painter):
    out.write(f"{'theorem':<8}{'checked':>9}{'skipped':>9}{'passed':>9}{'failed':>9}{'errored':>9}\n")
    for tid, c in summary.per_theorem.items():
        failed = str(c.failed).rjust(9)
        if c.failed:
            failed = painter.paint(failed, "red")
        out.write(f"{tid:<8}{c.checked:>9}{c.hypothesis_skipped:>9}{c.passed:>9}{failed}{c.errored:>9}\n")
    verdict = painter.paint("OK", "green") if summary.ok else painter.paint("FAILED", "red")
    out.write(f"graphs: {summary.graphs}  {verdict}\n")
    for item in summary.counterexamples:
        out.write(f"  counterexample {item['theorem_id']}: {item['graph6']}\n")


def _analyze_sources(args) -> Iterable[Graph]:
    chosen = [x for x in (args.graph6, args.file, args.family) if x]
    if len(chosen) != 1:
        raise InputError("analyze takes exactly one of <graph6>, --file, --family")
    if args.graph6:
        return [parse_graph6(args.graph6)]
    if args.file:
        return read_catalog(args.file)
    return [build_family(parse_family_spec(args.family))]


def cmd_analyze(args, out: IO[str], err: IO[str]) -> int:
    painter = Painter(out)
    graphs = _analyze_sources(args)
    if not args.pretty:
        _write_json(ReportHeader(tolerances=get_tolerances(), theorems=[], source="analyze"), out)
    for g in graphs:
        report = analyze(g)
        if args.pretty:
            _render_report(report, out, painter)
        else:
            _write_json(report, out)
    return 0


def cmd_verify(args, out: IO[str], err: IO[str]) -> int:
    theorem_ids = parse_theorem_ids(args.theorems)
    if args.max_n is None and not args.file and not args.family:
        raise InputError("verify needs --max-n, --file or --family")
    source = SuiteSource(max_n=args.max_n, catalog=args.file, families=args.family,
                         constructed=not args.no_constructed)
    jobs = args.jobs if args.jobs is not None else get_config().jobs
    if jobs < 1:
        raise InputError(f"--jobs must be at least 1, got {jobs}")
    stream = None if args.pretty else out
    summary = run_suite(theorem_ids, source, stream=stream, jobs=jobs,
                        progress=args.progress, failures_only=args.failures_only)
    if args.pretty:
        _render_summary(summary, out, Painter(out))
    if args.summary_file:
        with open(args.summary_file, "w", encoding="utf-8") as f:
            _write_json(summary, f)
    else:
        _write_json(summary, err)
    return 0 if summary.ok else 1


def cmd_classify(args, out: IO[str], err: IO[str]) -> int:
    _write_json(classify(parse_graph6(args.graph6)), out)
    return 0


def cmd_family(args, out: IO[str], err: IO[str]) -> int:
    spec = parse_family_spec(args.spec)
    g = build_family(spec)
    graph6 = emit_graph6(g)
    if args.emit_graph6:
        out.write(graph6 + "\n")
    else:
        _write_json({"kind": "family", "spec": spec.label(), "graph6": graph6,
                     "n": g.n, "m": g.m, "edges": g.edges()}, out)
    return 0


def cmd_enumerate(args, out: IO[str], err: IO[str]) -> int:
    spec = EnumerationSpec(n=args.n, connected_only=args.connected,
                           bipartite_only=args.bipartite, trees_only=args.trees)
    for g in all_graphs(spec):
        out.write(emit_graph6(g) + "\n")
    return 0


def cmd_spectrum(args, out: IO[str], err: IO[str]) -> int:
    g = parse_graph6(args.graph6)
    spectrum = eigenvalues(g, certify=True)
    record = {"kind": "spectrum", "graph6": emit_graph6(g), "eigenvalues": spectrum.eigenvalues,
              "energy": spectrum.energy, "positive_count": spectrum.positive_count,
              "max_residual": spectrum.max_residual}
    if args.charpoly:
        record["char_poly"] = char_poly(g).coeffs
    _write_json(record, out)
    return 0


def _report(error: ToolkitError, args: argparse.Namespace, err: IO[str]) -> int:
    log_exception(get_system_logger(), error, f"command {args.command}")
    err.write(f"error: {error}\n")
    return error.exit_code


COMMANDS = {
    "analyze": cmd_analyze,
    "verify": cmd_verify,
    "classify": cmd_classify,
    "family": cmd_family,
    "enumerate": cmd_enumerate,
    "spectrum": cmd_spectrum,
}


def main(argv: Optional[List[str]] = None, stdout: Optional[IO[str]] = None,
         stderr: Optional[IO[str]] = None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        config = load_config(args.config, {"log_level": args.log_level})
        configure(config)
        setup_logging(config.log_level, config.log_dir)
        return COMMANDS[args.command](args, out, err)
    except ValidationError as e:
        problem = e.errors()[0]
        field = ".".join(str(part) for part in problem["loc"])
        return _report(InputError(f"invalid {field}: {problem['msg']}"), args, err)
    except ToolkitError as e:
        return _report(e, args, err)
    except OSError as e:
        err.write(f"error: {e}\n")
        return 2
