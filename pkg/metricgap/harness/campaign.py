"""Verification campaigns: every applicable check over a corpus of graphs.

Each graph of the corpus is one job. A job computes the exact gaps it needs
once (memoised per job) and runs every check whose hypotheses hold, turning
each `BoundReport` into a `CampaignRecord`. Checks that would exceed the
budget, or whose preconditions fail, are kept as not-applicable records so
the report still says what was skipped and why.
"""

__all__ = [
    "CampaignRecord",
    "CampaignReport",
    "FORMAT_VERSION",
    "run_verify",
    "VerifyOptions",
]

from collections import namedtuple
import csv
from fractions import Fraction
from io import StringIO
from itertools import permutations
import json
import logging
import math
from operator import attrgetter
from pathlib import Path
import time
import typing

import numpy as np

from ..bounds import (
    bipartite_identities,
    brute_force_max,
    complete_comparison_bound,
    denominator_bounds,
    edge_addition_bounds,
    h_perturbation_ratio_bounds,
    kn_minus_edge_sequence,
    lower_bound_SG,
    make_gap,
    naive_lower,
    naive_lower_regular,
    opt_lemma_max,
    regular_supergraph_bounds,
    subgraph_bound,
    upper_bound_complete,
)
from ..bounds.report import BoundReport, check, recorded
from ..embedding import relate_to_R_report
from ..enum import BoundDirection, CheckStatus, ExitCode
from ..errors import BudgetExceeded, NumericalError, PreconditionError, UndefinedGap
from ..graph_core import add_edge, apsp, components, Graph, remove_edge
from ..graph_core.families import (
    balanced_bipartite_plus_matching,
    complete,
    complete_multipartite,
    cycle,
)
from ..spectral import lambda_R, rayleigh_R
from ..utils import fraction_to_json
from ..utils.gap_async import gather_in_executor
from ..utils.settings import Settings
from .corpus import CorpusSpec, graph_label


logger = logging.getLogger(__name__)

FORMAT_VERSION = 1

LOWER, UPPER, EQUAL = BoundDirection.LOWER, BoundDirection.UPPER, BoundDirection.EQUAL

# Eigenvalue sums must match the trace this closely.
TRACE_TOLERANCE = 1e-8

# Two-valued real quotients must match the exact rationals this closely.
QUOTIENT_TOLERANCE = 1e-12


CampaignRecord = namedtuple(
    "CampaignRecord",
    ("check", "g", "h", "status", "bound", "subject", "note", "runtime"),
)
CampaignRecord.__doc__ = """\
One check on one pair. `g` and `h` identify the inputs (graph6 for `g`, the
label given on the command line for `h`), so the record can be reproduced
from ``(g, h, check)`` alone.
"""


VerifyOptions = namedtuple(
    "VerifyOptions",
    ("samples", "chain_budget", "settings"),
    defaults=(1000, 10 ** 6, None),
)
VerifyOptions.__doc__ = """\
`samples` random assignments per pair for the denominator checks, and the
largest assignment space ``j^n`` for which ``lambda(G, K_j)`` is computed
in the complete-graph chain and comparisons.
"""


_Job = namedtuple("_Job", ("index", "g", "h_list", "options"))


class _Recorder:
    """Collects the records of one graph, timing every check."""

    def __init__(self, g_id):
        self.g_id = g_id
        self.records = []

    def skip(self, name, h_id, reason, runtime=0.0, g_id=None):
        self.records.append(
            CampaignRecord(
                name,
                self.g_id if g_id is None else g_id,
                h_id,
                CheckStatus.NOT_APPLICABLE,
                None,
                None,
                reason,
                runtime,
            )
        )

    def fail(self, name, h_id, error, runtime=0.0, g_id=None):
        self.records.append(
            CampaignRecord(
                name,
                self.g_id if g_id is None else g_id,
                h_id,
                CheckStatus.FAILED,
                None,
                error.residual,
                str(error),
                runtime,
            )
        )

    def run(self, name, h_id, func, *args, g_id=None, **kwargs):
        start = time.perf_counter()
        try:
            reports = func(*args, **kwargs)
        except (BudgetExceeded, PreconditionError, UndefinedGap) as error:
            self.skip(name, h_id, str(error), time.perf_counter() - start, g_id)
            return
        except NumericalError as error:
            self.fail(name, h_id, error, time.perf_counter() - start, g_id)
            return
        runtime = time.perf_counter() - start
        if isinstance(reports, BoundReport):
            reports = [reports]
        for report in reports:
            self.records.append(
                CampaignRecord(
                    report.name,
                    self.g_id if g_id is None else g_id,
                    h_id,
                    report.status,
                    report.bound_value,
                    report.subject_value,
                    report.note,
                    runtime,
                )
            )


def _extremes(g: Graph, h: Graph, gap) -> typing.List[BoundReport]:
    value = gap(g, h)
    top = upper_bound_complete(g.n)
    reports = [
        check("positive", LOWER, 0, value, strict=True),
        check("upper_bound_complete", UPPER, top, value),
    ]
    if g.is_complete():
        reports.append(check("complete_attains_upper", EQUAL, top, value))
    else:
        reports.append(check("noncomplete_below_upper", UPPER, top, value, strict=True))
    return reports


def _k2_extremality(g: Graph, h: Graph, gap) -> BoundReport:
    return check("k2_extremality", UPPER, gap(g, complete(2)), gap(g, h))


def _within_budget(j, n, budget):
    if j ** n > budget:
        raise BudgetExceeded(
            "%d^%d assignments exceed the campaign budget of %d." % (j, n, budget)
        )


def _complete_chain(g: Graph, gap, budget: int) -> typing.List[BoundReport]:
    """``lambda(G, K_j)`` is non-increasing in `j` and constant from ``j = n``."""
    values = {}
    for j in range(2, g.n + 2):
        if j ** g.n > budget:
            break
        values[j] = gap(g, complete(j))
    if len(values) < 2:
        _within_budget(3, g.n, budget)
    reports = []
    for j in sorted(values)[1:]:
        name = "complete_chain_K%d_K%d" % (j - 1, j)
        if j > g.n:
            reports.append(check(name, EQUAL, values[j - 1], values[j]))
        else:
            reports.append(check(name, UPPER, values[j - 1], values[j]))
    return reports


def _comparisons(g: Graph, h: Graph, gap, budget: int) -> typing.List[BoundReport]:
    reports = []
    for j in (h.n, h.n + 1):
        _within_budget(j, g.n, budget)
        reports.append(complete_comparison_bound(g, h, j, gap=gap))
    return reports


def _sampled_denominators(
    g: Graph, h: Graph, samples: int, rng
) -> typing.List[BoundReport]:
    """Screen random assignments with numpy, then check the extreme ones exactly.

    The smallest and the largest denominator among the samples are the only
    candidates that can break the lower and the upper bound.
    """
    if not h.is_connected():
        raise PreconditionError("%r is not connected." % (h,), h)
    squared = apsp(h).squared
    degrees = np.array(g.degrees, dtype=np.int64)
    us, vs = np.triu_indices(g.n, 1)
    weights = degrees[us] * degrees[vs]
    assignments = rng.integers(0, h.n, size=(samples, g.n))
    denominators = (squared[assignments[:, us], assignments[:, vs]] * weights).sum(
        axis=1
    )
    nonconstant = np.flatnonzero(denominators > 0)
    if nonconstant.size == 0:
        raise PreconditionError("Every sampled assignment was constant.")
    smallest = nonconstant[np.argmin(denominators[nonconstant])]
    largest = nonconstant[np.argmax(denominators[nonconstant])]
    note = "extreme of %d samples" % nonconstant.size
    lower, _ = denominator_bounds(g, h, tuple(assignments[smallest]))
    _, upper = denominator_bounds(g, h, tuple(assignments[largest]))
    return [
        report
        if report.status is CheckStatus.NOT_APPLICABLE
        else report._replace(note=note)
        for report in (lower, upper)
    ]


def _spectral(g: Graph, gap, settings: Settings) -> typing.List[BoundReport]:
    spectrum = lambda_R(g)
    trace = sum(1 for degree in g.degrees if degree > 0)
    reports = [
        check(
            "spectral_trace",
            UPPER,
            TRACE_TOLERANCE,
            abs(sum(spectrum.eigenvalues) - trace),
        ),
        recorded(
            "k2_above_real",
            LOWER,
            spectrum.lambda1,
            float(gap(g, complete(2))),
        ),
    ]
    if g.is_complete():
        reports.append(
            check(
                "spectral_complete",
                UPPER,
                settings.tolerance,
                abs(spectrum.lambda1 - float(upper_bound_complete(g.n))),
            )
        )
    witness = gap.result(g, complete(2)).witness
    reports.append(
        check(
            "rayleigh_R_matches_exact",
            UPPER,
            QUOTIENT_TOLERANCE,
            abs(rayleigh_R(g, witness) - float(gap(g, complete(2)))),
        )
    )
    return reports


def _ratio(g: Graph, h: Graph, gap, settings: Settings) -> typing.List[BoundReport]:
    record = relate_to_R_report(g, h, gap=gap)
    reports = [
        check("ratio_positive", LOWER, 0, record.ratio, strict=True),
        recorded("ratio", LOWER, None, record.ratio),
    ]
    if g.is_complete():
        reports.append(
            check(
                "ratio_complete",
                UPPER,
                settings.tolerance,
                abs(record.ratio - record.log_squared),
            )
        )
    return reports


def _verify_disconnected(g: Graph, g_id, h_list, gap) -> _Recorder:
    recorder = _Recorder(g_id)
    loaded = [part for part in components(g) if any(g.degree(v) for v in part)]
    for label, h in h_list:
        if len(loaded) >= 2 and h.m > 0:
            recorder.run(
                "disconnected_zero",
                label,
                lambda: check("disconnected_zero", EQUAL, 0, gap(g, h)),
            )
        else:
            recorder.skip(
                "disconnected_zero", label, "fewer than two components with edges"
            )
    return recorder


def _verify_graph(job: _Job) -> typing.List[CampaignRecord]:
    """Every per-graph check for one graph of the corpus."""
    g, h_list, options = job.g, job.h_list, job.options
    settings = options.settings.replace(workers=1)
    gap = make_gap(settings)
    g_id = graph_label(g)
    if g.n < 2 or not g.is_connected():
        return _verify_disconnected(g, g_id, h_list, gap).records

    recorder = _Recorder(g_id)
    rng = np.random.default_rng([settings.seed, job.index])
    budget = options.chain_budget
    recorder.run("complete_chain", "K*", _complete_chain, g, gap, budget)
    recorder.run("spectral", "R", _spectral, g, gap, settings)

    for label, h in h_list:
        recorder.run("extremes", label, _extremes, g, h, gap)
        recorder.run("k2_extremality", label, _k2_extremality, g, h, gap)
        recorder.run("lower_bound_SG", label, lower_bound_SG, g, h, gap=gap)
        recorder.run("naive_lower", label, naive_lower, g, h, gap=gap)
        if g.is_regular():
            recorder.run(
                "naive_lower_regular", label, naive_lower_regular, g, h, gap=gap
            )
        recorder.run("complete_comparison", label, _comparisons, g, h, gap, budget)
        recorder.run(
            "denominator_bounds",
            label,
            _sampled_denominators,
            g,
            h,
            options.samples,
            rng,
        )
        recorder.run("ratio", label, _ratio, g, h, gap, settings)
        if g.volume >= 6:
            for u, v in g.non_edges():
                recorder.run(
                    "edge_addition",
                    label,
                    edge_addition_bounds,
                    g,
                    add_edge(g, u, v),
                    h,
                    gap=gap,
                    g_id="%s+%d-%d" % (g_id, u, v),
                )

    for (label, h), (label_prime, h_prime) in permutations(h_list, 2):
        pair = "%s>%s" % (label, label_prime)
        if h.n == h_prime.n:
            recorder.run(
                "h_perturbation",
                pair,
                h_perturbation_ratio_bounds,
                g,
                h,
                h_prime,
                gap=gap,
            )
        if h_prime != h and h_prime.is_connected() and h_prime.is_subgraph_of(h):
            recorder.run("subgraph_bound", pair, subgraph_bound, g, h, h_prime, gap=gap)
    return recorder.records


def _regular_pairs() -> typing.List[typing.Tuple[Graph, Graph]]:
    """Regular graphs paired with a supergraph one degree higher."""
    c6 = cycle(6)
    k6 = complete(6)
    k6_minus_matching = k6
    for u in range(3):
        k6_minus_matching = remove_edge(k6_minus_matching, u, u + 3)
    pairs = [
        (complete_multipartite(n, 2), balanced_bipartite_plus_matching(n))
        for n in (2, 4)
    ]
    pairs.append((c6, add_edge(add_edge(add_edge(c6, 0, 3), 1, 4), 2, 5)))
    pairs.append((k6_minus_matching, k6))
    return pairs


def _budgeted(func, n, k, options):
    def wrapper(*args, **kwargs):
        _within_budget(k, n, options.chain_budget)
        return func(*args, **kwargs)

    return wrapper


def _lemma(C: int, k: int) -> BoundReport:
    value, _ = brute_force_max(C, k)
    return check("lemma_max_k%d" % k, EQUAL, opt_lemma_max(C, k), value)


def _family_checks(h_list, gap, options: VerifyOptions) -> typing.List[CampaignRecord]:
    """Checks tied to the structured families rather than to one corpus graph."""
    recorder = _Recorder("-")
    for g, g_plus in _regular_pairs():
        for label, h in h_list:
            recorder.run(
                "regular_supergraph",
                label,
                _budgeted(regular_supergraph_bounds, g_plus.n, h.n, options),
                g,
                g_plus,
                h,
                gap=gap,
                g_id="%s>%s" % (graph_label(g), graph_label(g_plus)),
            )
    for n, j, k in ((2, 2, 3), (3, 2, 3), (2, 3, 2), (4, 2, 2), (3, 2, 4), (1, 3, 2)):
        recorder.run(
            "bipartite_identities",
            "K2,K%d" % k,
            bipartite_identities,
            n,
            j,
            k,
            gap=gap,
            g_id="K_%d^%d" % (n, j),
        )
    recorder.run(
        "kn_minus_edge", "K2", kn_minus_edge_sequence, range(3, 9), gap=gap, g_id="Kn-e"
    )
    for C in range(6, 13):
        for k in range(2, 5):
            recorder.run("lemma_max", "-", _lemma, C, k, g_id="C=%d" % C)
    return recorder.records


def run_verify(
    spec: CorpusSpec, settings: Settings = None, *, samples=1000, chain_budget=10 ** 6
) -> "CampaignReport":
    """Run every applicable check over the corpus of `spec`.

    Graphs fan out over ``settings.workers`` processes; the report is
    sorted, so it does not depend on the number of workers.
    """
    settings = Settings() if settings is None else settings
    options = VerifyOptions(samples, chain_budget, settings)
    graphs = spec.graphs()
    jobs = [_Job(index, g, spec.h_list, options) for index, g in enumerate(graphs)]
    logger.info(
        "Verifying %d graph(s) against %d target(s).", len(jobs), len(spec.h_list)
    )
    records = []
    results = gather_in_executor(_verify_graph, jobs, workers=settings.workers)
    for job_records in results:
        records.extend(job_records)
    if spec.mode == "families":
        records.extend(
            _family_checks(spec.h_list, make_gap(settings.replace(workers=1)), options)
        )
    report = CampaignReport(spec.dump(), records)
    logger.info("Campaign summary: %r", report.summary)
    return report


def _json_value(value):
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, (int, Fraction)):
        return fraction_to_json(value)
    value = float(value)
    return value if math.isfinite(value) else str(value)


def _text_value(value):
    return "" if value is None else str(value)


class CampaignReport:
    """The sorted records of a campaign and their summary."""

    def __init__(self, corpus: dict, records: typing.Iterable[CampaignRecord]):
        super(CampaignReport, self).__init__()
        self.corpus = corpus
        self.records = tuple(
            sorted(records, key=attrgetter("check", "g", "h", "note"))
        )

    @property
    def summary(self) -> typing.Dict[str, int]:
        counts = {status: 0 for status in CheckStatus}
        for record in self.records:
            counts[record.status] += 1
        return {
            "total": len(self.records),
            "passed": counts[CheckStatus.PASSED],
            "failed": counts[CheckStatus.FAILED],
            "not_applicable": counts[CheckStatus.NOT_APPLICABLE],
            "recorded": counts[CheckStatus.RECORDED],
        }

    @property
    def failed(self) -> typing.List[CampaignRecord]:
        return [r for r in self.records if r.status is CheckStatus.FAILED]

    @property
    def exit_code(self) -> ExitCode:
        return ExitCode.CHECK_FAILURE if self.failed else ExitCode.PASS

    def minimum_ratio(self) -> typing.Optional[CampaignRecord]:
        """The ratio record with the smallest value, if any were recorded."""
        ratios = [
            r
            for r in self.records
            if r.check == "ratio" and r.status is CheckStatus.RECORDED
        ]
        return min(ratios, key=attrgetter("subject"), default=None)

    def dump(self, *, runtime=True) -> dict:
        records = []
        for record in self.records:
            data = {
                "check": record.check,
                "g": record.g,
                "h": record.h,
                "status": record.status.value,
                "holds": {
                    CheckStatus.PASSED: True,
                    CheckStatus.FAILED: False,
                }.get(record.status),
                "bound": _json_value(record.bound),
                "subject": _json_value(record.subject),
                "note": record.note,
            }
            if runtime:
                data["runtime"] = record.runtime
            records.append(data)
        return {
            "format_version": FORMAT_VERSION,
            "corpus": self.corpus,
            "summary": self.summary,
            "records": records,
        }

    def to_json(self, *, runtime=True) -> str:
        return json.dumps(self.dump(runtime=runtime), indent=2, sort_keys=True)

    def to_csv(self) -> str:
        output = StringIO()
        writer = csv.writer(output)
        writer.writerow(CampaignRecord._fields)
        for record in self.records:
            writer.writerow(
                [
                    record.check,
                    record.g,
                    record.h,
                    record.status.value,
                    _text_value(record.bound),
                    _text_value(record.subject),
                    record.note,
                    "%.6f" % record.runtime,
                ]
            )
        return output.getvalue()

    def write(self, prefix) -> typing.Tuple[Path, Path]:
        """Write ``PREFIX.json`` and ``PREFIX.csv``."""
        prefix = Path(prefix)
        json_path = prefix.with_name(prefix.name + ".json")
        csv_path = prefix.with_name(prefix.name + ".csv")
        json_path.write_text(self.to_json() + "\n")
        csv_path.write_text(self.to_csv())
        return json_path, csv_path

    def __repr__(self):
        summary = self.summary
        return "<%s total=%d failed=%d>" % (
            self.__class__.__name__,
            summary["total"],
            summary["failed"],
        )
