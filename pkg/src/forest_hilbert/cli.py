# Command-line front end: graph ingestion, method selection, verification, and machine-readable output

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence

import pandas as pd

from .algebra import shapes_logger
from .cache import get_poly_cache
from .config import get_config
from .corpus import CorpusGraph, load_corpus
from .errors import ConfigError, ForestHilbertError, require_positive_t
from .forests import (
    HilbertFunction,
    activity_table,
    count_labeled_forests,
    iter_subforests,
)
from .graph import Multigraph, read_graph
from .recovery import RECOVERED, recovered_table
from .tutte import TuttePoly, j_poly, tutte, tutte_of_clone, tutte_via_activity
from .utils import FormatUtils, JsonUtils, Timer
from .verify import METHODS, VerifyReport, compute_hilbert, exit_status, hilbert_report, verify_corpus

logger = logging.getLogger(__name__)

FORMATS = ("text", "json")


@dataclass
class RunConfig:
    """Everything one invocation needs; equal configs give byte-identical output."""

    command: str
    inputs: List[str]
    t: Optional[int] = None
    n: Optional[int] = None
    method: str = "forests"
    output_format: str = "text"
    max_forests: Optional[int] = None
    max_basis: Optional[int] = None
    max_subset_vertices: Optional[int] = None
    seed: Optional[int] = None
    samples: Optional[int] = None
    check: bool = False
    list_forests: bool = False
    timings: bool = False

    @staticmethod
    def from_args(args: argparse.Namespace) -> "RunConfig":
        config = RunConfig(
            command=args.command,
            inputs=list(getattr(args, "inputs", None) or []),
            t=args.t,
            n=getattr(args, "n", None),
            method=getattr(args, "method", "forests"),
            output_format=args.format,
            max_forests=args.max_forests,
            max_basis=args.max_basis,
            max_subset_vertices=args.max_subset_vertices,
            seed=args.seed,
            samples=args.samples,
            check=getattr(args, "check", False),
            list_forests=getattr(args, "list", False),
            timings=args.timings,
        )
        config.validate()
        return config

    def validate(self):
        if self.t is not None:
            require_positive_t(self.t)
        for name in ("max_forests", "max_basis", "max_subset_vertices", "samples"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ConfigError(f"{name} must be positive, got {value}")
        if self.command in ("tutte", "jpoly", "hilbert", "forests", "recover") and len(self.inputs) != 1:
            raise ConfigError(f"{self.command} takes exactly one input file")
        if self.command in ("jpoly", "hilbert") and self.t is None:
            raise ConfigError(f"{self.command} requires --t")
        if self.command == "recover" and self.n is None:
            raise ConfigError("recover requires --n")
        if self.command == "hilbert" and self.method not in METHODS + ("all",):
            raise ConfigError(f"unknown method {self.method!r}")

    def apply_overrides(self):
        """Push CLI caps into the process configuration."""
        get_config().override(
            max_forests=self.max_forests,
            max_basis=self.max_basis,
            max_subset_vertices=self.max_subset_vertices,
            seed=self.seed,
            samples=self.samples,
        )


def _poly_json(tp) -> Dict:
    return {"text": str(tp.poly), "terms": tp.poly.to_json()}


def _emit(config: RunConfig, text: str, data: Dict, timer: Optional[Timer] = None):
    if config.output_format == "json":
        if config.timings and timer is not None:
            data = dict(data, timings={k: round(v, 6) for k, v in timer.timings.items()})
        sys.stdout.write(JsonUtils.dumps(data))
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")
        if config.timings and timer is not None:
            for label, seconds in timer.timings.items():
                sys.stdout.write(f"# {label}: {FormatUtils.format_duration(seconds)}\n")


def _graph(config: RunConfig) -> Multigraph:
    return read_graph(config.inputs[0])


def cmd_tutte(config: RunConfig) -> int:
    g = _graph(config)
    timer = Timer()
    with timer.section("tutte"):
        tp = tutte(g)
    data = {"tutte": _poly_json(tp)}
    lines = [str(tp)]
    status = 0
    if config.check:
        with timer.section("activity expansion"):
            expansion = tutte_via_activity(activity_table(g))
        equal = expansion == tp
        data["activity_expansion"] = _poly_json(expansion)
        data["equal"] = equal
        lines.append(f"activity expansion: {expansion} [{FormatUtils.format_flag(equal)}]")
        status = 0 if equal else 1
    _emit(config, "\n".join(lines), data, timer)
    return status


def cmd_jpoly(config: RunConfig) -> int:
    g = _graph(config)
    timer = Timer()
    with timer.section("jpoly"):
        jp = j_poly(g, config.t)
    data = {"t": config.t, "jpoly": {"text": str(jp), "terms": jp.poly.to_json()}}
    lines = [str(jp)]
    status = 0
    if config.check:
        with timer.section("clone tutte"):
            clone = tutte_of_clone(g, config.t)
        equal = clone.poly == jp.poly
        data["clone_tutte"] = _poly_json(clone)
        data["equal"] = equal
        lines.append(f"tutte of clone: {clone} [{FormatUtils.format_flag(equal)}]")
        status = 0 if equal else 1
    _emit(config, "\n".join(lines), data, timer)
    return status


def _report_text(reports: Sequence[VerifyReport]) -> str:
    rows = []
    for report in reports:
        failed = [c.name for c in report.checks if not c.passed]
        failed += [k for k, ok in report.agreement.items() if not ok]
        rows.append({
            "graph": report.graph,
            "t": "-" if report.t is None else str(report.t),
            "result": FormatUtils.format_flag(report.passed),
            "failed": ", ".join(failed),
            "skipped": ", ".join(sorted(report.skipped)),
        })
    frame = pd.DataFrame(rows, columns=["graph", "t", "result", "failed", "skipped"])
    return frame.to_string(index=False)


def cmd_hilbert(config: RunConfig) -> int:
    g = _graph(config)
    name = Path(config.inputs[0]).stem
    if config.method == "all":
        report = hilbert_report(g, config.t, name)
        lines = [f"{m}: {FormatUtils.format_dims(h.dims)}" for m, h in report.hilbert.items()]
        lines += [f"skipped {m}: {reason}" for m, reason in report.skipped.items()]
        lines += [f"failed {c.name}: {c.detail}" for c in report.checks if not c.passed]
        lines.append(f"pass: {str(report.passed).lower()}")
        data = report.to_json(include_timings=config.timings)
        _emit(config, "\n".join(lines), data)
        if config.timings and config.output_format == "text":
            for label, seconds in report.timings.items():
                sys.stdout.write(f"# {label}: {FormatUtils.format_duration(seconds)}\n")
        return exit_status([report])

    timer = Timer()
    with timer.section(config.method):
        h = compute_hilbert(g, config.t, config.method)
    _emit(config, FormatUtils.format_dims(h.dims), dict(h.to_json(), method=config.method), timer)
    return 0


def _read_hilbert(path: str) -> Dict:
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as f:
        return json.load(f)


def cmd_recover(config: RunConfig) -> int:
    try:
        data = _read_hilbert(config.inputs[0])
        h = HilbertFunction.from_json(data)
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        raise ConfigError(f"{config.inputs[0]} is not a Hilbert function JSON document: {e}") from e
    t = config.t if config.t is not None else h.t
    table = recovered_table(h, t, config.n)
    tp = TuttePoly(tutte_via_activity(table).poly, RECOVERED)
    payload = {"t": t, "n": config.n, "tutte": _poly_json(tp), "counts": JsonUtils.counts_to_json(table.counts)}
    text = str(tp) + "\n" + FormatUtils.format_counts(table.counts)
    _emit(config, text, payload)
    return 0


def cmd_forests(config: RunConfig) -> int:
    g = _graph(config)
    timer = Timer()
    with timer.section("activity table"):
        table = activity_table(g)
    data = {"table": table.to_json(), "forests": table.total()}
    lines = [FormatUtils.format_table(table), f"forests: {table.total()}"]
    if config.t is not None:
        labeled = count_labeled_forests(table, config.t)
        data["t"] = config.t
        data["labeled_forests"] = labeled
        lines.append(f"{config.t}-labeled forests: {labeled}")
    if config.list_forests:
        records = list(iter_subforests(g))
        data["records"] = [
            {"edges": list(r.edge_set), "activity": r.activity, "active": list(r.active_set)}
            for r in records
        ]
        lines += [f"{list(r.edge_set)} act={r.activity} active={list(r.active_set)}" for r in records]
    _emit(config, "\n".join(lines), data, timer)
    return 0


def cmd_verify_corpus(config: RunConfig) -> int:
    corpus: List[CorpusGraph] = load_corpus()
    for path in config.inputs:
        corpus.append(CorpusGraph(Path(path).stem, read_graph(path)))
    t_values = [config.t] if config.t is not None else None
    reports = verify_corpus(corpus, t_values=t_values)
    passed = all(r.passed for r in reports)
    data = {
        "passed": passed,
        "reports": [r.to_json(include_timings=config.timings) for r in reports],
    }
    text = _report_text(reports) + f"\npass: {str(passed).lower()}"
    _emit(config, text, data)
    return exit_status(reports)


HANDLERS = {
    "tutte": cmd_tutte,
    "jpoly": cmd_jpoly,
    "hilbert": cmd_hilbert,
    "recover": cmd_recover,
    "forests": cmd_forests,
    "verify": cmd_verify_corpus,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--t", type=int, help="labels per edge (t >= 1)")
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--max-forests", type=int, help="subforest cap")
    common.add_argument("--max-basis", type=int, help="linear algebra basis cap")
    common.add_argument("--max-subset-vertices", type=int, help="vertex cap for cut-degree subsets")
    common.add_argument("--seed", type=int, help="seed for edge-order permutations")
    common.add_argument("--samples", type=int, help="number of sample points for the substitution identity")
    common.add_argument("--timings", action="store_true", help="report wall-clock time per step")
    common.add_argument("--debug-shapes", action="store_true", help="log linear system shapes per degree")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(
        prog="forest-hilbert",
        description="Hilbert functions of forest algebras and Tutte polynomials of multigraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tutte", parents=[common], help="Tutte polynomial by deletion-contraction")
    p.add_argument("inputs", nargs=1, metavar="GRAPH")
    p.add_argument("--check", action="store_true", help="compare with the activity expansion")

    p = sub.add_parser("jpoly", parents=[common], help="Tutte polynomial of the t-clone graph")
    p.add_argument("inputs", nargs=1, metavar="GRAPH")
    p.add_argument("--check", action="store_true", help="compare with the clone graph directly")

    p = sub.add_parser("hilbert", parents=[common], help="graded dimensions by one method or all")
    p.add_argument("inputs", nargs=1, metavar="GRAPH")
    p.add_argument("--method", choices=METHODS + ("all",), default="forests")

    p = sub.add_parser("recover", parents=[common], help="Tutte polynomial from a Hilbert function")
    p.add_argument("inputs", nargs=1, metavar="HILBERT_JSON", help="path, or - for stdin")
    p.add_argument("--n", type=int, help="vertex count of the source graph")

    p = sub.add_parser("forests", parents=[common], help="activity table of the subforests")
    p.add_argument("inputs", nargs=1, metavar="GRAPH")
    p.add_argument("--list", action="store_true", help="list every subforest")

    p = sub.add_parser("verify", parents=[common], help="run every identity over the corpus")
    p.add_argument("inputs", nargs="*", metavar="GRAPH", help="extra graphs appended to the corpus")
    return parser


def setup_logging(verbosity: int, debug_shapes: bool = False):
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(
        stream=sys.stderr,
        level=level,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )
    if debug_shapes:
        shapes_logger.setLevel(logging.DEBUG)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.verbose, args.debug_shapes)
    try:
        config = RunConfig.from_args(args)
        config.apply_overrides()
        status = HANDLERS[config.command](config)
    except ForestHilbertError as e:
        sys.stderr.write(f"error: {e}\n")
        return e.exit_code
    except OSError as e:
        sys.stderr.write(f"error: {e}\n")
        return 2
    logger.debug("cache: %s", get_poly_cache().stats())
    return status
