# Verification module: four-way Hilbert comparison and the identity checks run over the corpus

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from .algebra import quotient_analysis, subalgebra_hilbert
from .config import get_config
from .corpus import CorpusGraph, edge_permutations
from .errors import BudgetExceededError, RecoveryError
from .forests import (
    ActivityTable,
    HilbertFunction,
    activity_table,
    clone_activity_check,
    count_labeled_forests,
    hilbert_from_table,
    postnikov_shapiro_dims,
)
from .graph import Multigraph
from .recovery import recover_tutte
from .tutte import (
    TuttePoly,
    default_samples,
    hilbert_from_tutte,
    j_poly,
    j_poly_via_forests,
    labeled_forest_total,
    lemma_eq_check,
    tutte,
    tutte_evaluations,
    tutte_of_clone,
    tutte_via_activity,
)
from .utils import Timer

logger = logging.getLogger(__name__)

METHODS = ("forests", "tutte", "subalgebra", "quotient")
ALGEBRA_METHODS = ("subalgebra", "quotient")
QUOTIENT_VANISHING = "quotient vanishes above t*e"


def compute_hilbert(
    g: Multigraph,
    t: int,
    method: str,
    max_forests: Optional[int] = None,
    max_basis: Optional[int] = None,
    backend: Optional[str] = None,
    table: Optional[ActivityTable] = None,
    tp: Optional[TuttePoly] = None,
) -> HilbertFunction:
    """Hilbert function by one named method."""
    if method == "forests":
        return hilbert_from_table(table if table is not None else activity_table(g, max_forests), t)
    elif method == "tutte":
        return hilbert_from_tutte(g, t, tp)
    elif method == "subalgebra":
        return subalgebra_hilbert(g, t, max_basis=max_basis, backend=backend)
    elif method == "quotient":
        return quotient_analysis(g, t, max_basis=max_basis, backend=backend).hilbert
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> Dict:
        data = {"name": self.name, "passed": self.passed}
        if self.detail:
            data["detail"] = self.detail
        return data


@dataclass
class VerifyReport:
    """Per-method Hilbert functions for one graph and t, with agreement flags and identity checks."""

    graph: str
    t: Optional[int]
    hilbert: Dict[str, HilbertFunction] = field(default_factory=dict)
    agreement: Dict[str, bool] = field(default_factory=dict)
    checks: List[CheckResult] = field(default_factory=list)
    skipped: Dict[str, str] = field(default_factory=dict)
    timings: Dict[str, float] = field(default_factory=dict)

    @property
    def budget_skipped(self) -> bool:
        """A cap stopped the whole graph, or every method, before anything was checked."""
        return "graph" in self.skipped or (bool(self.skipped) and not self.hilbert and not self.checks)

    @property
    def passed(self) -> bool:
        if self.budget_skipped or not (self.hilbert or self.checks):
            return False
        return all(self.agreement.values()) and all(c.passed for c in self.checks)

    def add_check(self, name: str, passed: bool, detail: str = "") -> CheckResult:
        result = CheckResult(name, bool(passed), detail)
        if not result.passed:
            logger.warning("%s t=%s: %s failed %s", self.graph, self.t, name, detail)
        self.checks.append(result)
        return result

    def compare(self):
        """Pairwise equality of every computed method."""
        self.agreement = {
            f"{a}={b}": self.hilbert[a] == self.hilbert[b]
            for a, b in itertools.combinations([m for m in METHODS if m in self.hilbert], 2)
        }

    def to_json(self, include_timings: bool = False) -> Dict:
        data = {
            "graph": self.graph,
            "t": self.t,
            "passed": self.passed,
            "hilbert": {m: list(h.dims) for m, h in self.hilbert.items()},
            "agreement": dict(self.agreement),
            "checks": [c.to_json() for c in self.checks],
            "skipped": dict(self.skipped),
        }
        if include_timings:
            data["timings"] = {k: round(v, 6) for k, v in self.timings.items()}
        return data


def _run_quotient(
    report: VerifyReport, g: Multigraph, t: int, max_basis: Optional[int], backend: Optional[str]
):
    """Quotient dimensions plus a check that nothing survives above degree t*e."""
    result = quotient_analysis(g, t, max_basis=max_basis, backend=backend)
    report.hilbert["quotient"] = result.hilbert
    report.checks = [c for c in report.checks if c.name != QUOTIENT_VANISHING]
    overflow = ", ".join(f"dim {k} = {d}" for k, d in sorted(result.overflow.items()))
    report.add_check(QUOTIENT_VANISHING, result.vanishes, overflow)


def hilbert_report(
    g: Multigraph,
    t: int,
    name: str = "graph",
    methods: Sequence[str] = METHODS,
    max_forests: Optional[int] = None,
    max_basis: Optional[int] = None,
    backend: Optional[str] = None,
    table: Optional[ActivityTable] = None,
    tp: Optional[TuttePoly] = None,
) -> VerifyReport:
    """Run the requested methods; a method over its cap is recorded as skipped."""
    report = VerifyReport(graph=name, t=t)
    timer = Timer()
    for method in methods:
        try:
            with timer.section(method):
                if method == "quotient":
                    _run_quotient(report, g, t, max_basis, backend)
                else:
                    report.hilbert[method] = compute_hilbert(
                        g, t, method, max_forests, max_basis, backend, table, tp
                    )
        except BudgetExceededError as e:
            report.skipped[method] = str(e)
            logger.info("%s t=%d: %s skipped: %s", name, t, method, e)

    reference = report.hilbert.get("forests") or report.hilbert.get("tutte")
    backend = backend or get_config().get("rank_backend")
    if backend == "modular" and reference is not None:
        for method in ALGEBRA_METHODS:
            if method in report.hilbert and report.hilbert[method] != reference:
                logger.warning("%s t=%d: modular %s disagrees, recomputing exactly", name, t, method)
                with timer.section(method):
                    if method == "quotient":
                        _run_quotient(report, g, t, max_basis, "exact")
                    else:
                        report.hilbert[method] = compute_hilbert(g, t, method, max_basis=max_basis, backend="exact")
    report.timings = timer.timings
    report.compare()
    return report


def _maximal_forests(table: ActivityTable) -> int:
    return sum(n for (a, _), n in table.counts.items() if a == table.rank)


def graph_checks(
    item: CorpusGraph,
    t_values: Sequence[int],
    permutations: int,
    seed: int,
    samples: Optional[int] = None,
    max_forests: Optional[int] = None,
    max_basis: Optional[int] = None,
    backend: Optional[str] = None,
) -> List[VerifyReport]:
    """Every identity for one graph: one report per t plus a t-independent report."""
    g = item.graph
    table = activity_table(g, max_forests)
    tp = tutte(g)

    general = VerifyReport(graph=item.name, t=None)
    general.add_check("activity expansion", tutte_via_activity(table) == tp)
    evaluations = tutte_evaluations(tp)
    general.add_check(
        "T(1,1) counts maximal forests",
        evaluations["T(1,1)"] == _maximal_forests(table),
        f"{evaluations['T(1,1)']} vs {_maximal_forests(table)}",
    )
    general.add_check(
        "T(2,1) counts forests",
        evaluations["T(2,1)"] == table.total(),
        f"{evaluations['T(2,1)']} vs {table.total()}",
    )
    general.add_check(
        "t=1 activity description",
        postnikov_shapiro_dims(table) == hilbert_from_table(table, 1),
    )
    for index, order in enumerate(edge_permutations(g, permutations, seed)):
        permuted = g.permuted(order)
        same_table = activity_table(permuted, max_forests).counts == table.counts
        same_tutte = tutte(permuted) == tp
        general.add_check(f"edge order {index}", same_table and same_tutte, f"order {order}")
    if item.recoverable:
        n = g.v
        for t in (n, n + 1):
            try:
                recovered = recover_tutte(hilbert_from_table(table, t), t, n)
                general.add_check(f"recovery t={t}", recovered == tp, str(recovered))
            except RecoveryError as e:
                general.add_check(f"recovery t={t}", False, str(e))

    reports = [general]
    for t in t_values:
        report = hilbert_report(g, t, item.name, METHODS, max_forests, max_basis, backend, table, tp)
        base = report.hilbert.get("forests")

        jp = j_poly(g, t)
        report.add_check("clone polynomial", jp.poly == tutte_of_clone(g, t).poly)
        report.add_check("labeled forest expansion", jp.poly == j_poly_via_forests(table, t).poly)
        try:
            violations = clone_activity_check(g, t, max_forests)
            report.add_check("clone activity", not violations, f"{len(violations)} violations")
        except BudgetExceededError as e:
            report.skipped["clone activity"] = str(e)
        points = default_samples(samples, t) if samples is not None else None
        report.add_check("substitution identity", lemma_eq_check(g, t, points))

        forests = count_labeled_forests(table, t)
        total = labeled_forest_total(tp, g.rank, t)
        if base is not None:
            report.add_check(
                "dimension total", base.total() == forests == total, f"{base.total()}, {forests}, {total}"
            )

        for order in edge_permutations(g, permutations, seed + t) if base is not None else ():
            permuted = g.permuted(order)
            forest_side = hilbert_from_table(activity_table(permuted, max_forests), t)
            tutte_side = hilbert_from_tutte(permuted, t)
            report.add_check(
                "edge order invariance",
                forest_side == base and tutte_side == base,
                f"order {order}",
            )

        if g.v > 0:
            looped = g.add_loop(0)
            loop_report = hilbert_report(looped, t, item.name + "+loop", METHODS, max_forests, max_basis, backend)
            mismatched = [
                m for m, h in loop_report.hilbert.items()
                if m in report.hilbert and h.trimmed() != report.hilbert[m].trimmed()
            ]
            report.add_check("loop invariance", not mismatched, ",".join(mismatched))
        reports.append(report)
    return reports


def verify_corpus(
    corpus: Sequence[CorpusGraph],
    t_values: Optional[Sequence[int]] = None,
    permutations: Optional[int] = None,
    seed: Optional[int] = None,
    samples: Optional[int] = None,
    max_forests: Optional[int] = None,
    max_basis: Optional[int] = None,
    backend: Optional[str] = None,
) -> List[VerifyReport]:
    """Reports for every corpus graph, in corpus order."""
    config = get_config()
    t_values = list(t_values) if t_values is not None else config.get("t_values")
    permutations = permutations if permutations is not None else config.get("permutations")
    seed = seed if seed is not None else config.get("seed")
    samples = samples if samples is not None else config.get("samples")
    reports: List[VerifyReport] = []
    for item in corpus:
        logger.info("verifying %s (%d vertices, %d edges)", item.name, item.graph.v, item.graph.e)
        try:
            reports.extend(
                graph_checks(item, t_values, permutations, seed, samples, max_forests, max_basis, backend)
            )
        except BudgetExceededError as e:
            skipped = VerifyReport(graph=item.name, t=None)
            skipped.skipped["graph"] = str(e)
            reports.append(skipped)
            logger.warning("%s skipped: %s", item.name, e)
    failed = [r for r in reports if not r.passed]
    logger.info("verified %d reports, %d failed", len(reports), len(failed))
    return reports


def exit_status(reports: Sequence[VerifyReport]) -> int:
    """0 when every report passed, 3 when the only shortfall is a cap, 1 otherwise."""
    if all(r.passed for r in reports):
        return 0
    if all(r.passed or r.budget_skipped for r in reports):
        return 3
    return 1
