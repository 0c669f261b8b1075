"""Exhaustive minimisation of the quotient over all assignments.

Assignments are enumerated as a mixed-radix counter whose most significant
digit is vertex 0, so counter order is lexicographic order. The space is cut
into jobs by a fixed-length prefix; each job evaluates its suffixes in numpy
blocks of `Settings.chunk_size` rows. Floating-point ratios only preselect
candidates; the minimum and its tie-break are decided with exact fractions,
so the answer is independent of the number of workers.
"""

__all__ = ["lambda_exact", "partial_upper_bound"]

from collections import namedtuple
from fractions import Fraction
import logging
import typing

import numpy as np

from ..errors import BudgetExceeded, PreconditionError, UndefinedGap, ZeroDenominator
from ..graph_core import apsp, components, Graph, induced_subgraph, vertex_orbits
from ..utils.gap_async import gather_in_executor
from ..utils.settings import Settings
from .rayleigh import GapResult, rayleigh_quotient


logger = logging.getLogger(__name__)

# Relative slack for the floating-point preselection.
_FLOAT_SLACK = 1e-9

_Job = namedtuple(
    "_Job", ("prefix", "n", "k", "edges", "pairs", "weights", "squared", "chunk_size")
)


def _best(a, b):
    """The better of two ``(value, witness)`` pairs; `None` loses."""
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _evaluate_block(job, assignments):
    """Best ``(value, witness)`` in a block plus its evaluated/skipped counts."""
    squared = job.squared
    rows = assignments.shape[0]
    numerator = np.zeros(rows, dtype=np.int64)
    for u, v in job.edges:
        numerator += squared[assignments[:, u], assignments[:, v]]
    denominator = np.zeros(rows, dtype=np.int64)
    for (u, v), weight in zip(job.pairs, job.weights):
        denominator += weight * squared[assignments[:, u], assignments[:, v]]

    constant = (assignments == assignments[:, :1]).all(axis=1)
    valid = ~constant & (denominator > 0)
    skipped = int((~constant & (denominator == 0)).sum())
    evaluated = int(valid.sum())
    if evaluated == 0:
        return None, evaluated, skipped

    ratio = np.full(rows, np.inf)
    ratio[valid] = numerator[valid] / denominator[valid]
    lowest = ratio.min()
    candidates = np.flatnonzero(ratio <= lowest * (1 + _FLOAT_SLACK))
    terms = {(int(numerator[i]), int(denominator[i])) for i in candidates}
    value = min(Fraction(num, den) for num, den in terms)
    for i in candidates:
        if numerator[i] * value.denominator == denominator[i] * value.numerator:
            witness = tuple(int(image) for image in assignments[i])
            return (value, witness), evaluated, skipped
    raise AssertionError("No candidate attains the exact minimum.")


def _scan_job(job):
    """Scan every completion of ``job.prefix``; runs in worker processes."""
    prefix = np.asarray(job.prefix, dtype=np.int64)
    free = job.n - len(prefix)
    total = job.k ** free
    best, evaluated, skipped = None, 0, 0
    for start in range(0, total, job.chunk_size):
        index = np.arange(start, min(total, start + job.chunk_size), dtype=np.int64)
        block = np.empty((len(index), job.n), dtype=np.int64)
        block[:, : len(prefix)] = prefix
        for column in range(job.n - 1, len(prefix) - 1, -1):
            block[:, column] = index % job.k
            index //= job.k
        found, block_evaluated, block_skipped = _evaluate_block(job, block)
        best = _best(best, found)
        evaluated += block_evaluated
        skipped += block_skipped
    return best, evaluated, skipped


def _prefixes(n, k, first_images, workers):
    """Job prefixes in lexicographic order, enough to keep `workers` busy."""
    prefixes = [(image,) for image in first_images]
    while workers > 1 and len(prefixes) < 4 * workers and len(prefixes[0]) < n:
        prefixes = [prefix + (image,) for prefix in prefixes for image in range(k)]
    return prefixes


def _search_connected(g: Graph, h: Graph, settings: Settings, prune: bool):
    """Minimise over assignments into the connected graph `h`, ``h.n >= 2``."""
    dist = apsp(h)
    if prune:
        first_images = vertex_orbits(h).representatives()
    else:
        first_images = list(h.vertices)
    degrees = g.degrees
    pairs = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if degrees[u] * degrees[v] > 0
    ]
    template = _Job(
        prefix=(),
        n=g.n,
        k=h.n,
        edges=tuple(g.sorted_edges()),
        pairs=tuple(pairs),
        weights=tuple(degrees[u] * degrees[v] for u, v in pairs),
        squared=np.array(dist.squared),
        chunk_size=settings.chunk_size,
    )
    jobs = [
        template._replace(prefix=prefix)
        for prefix in _prefixes(g.n, h.n, first_images, settings.workers)
    ]
    logger.debug(
        "Scanning %d^%d assignments in %d job(s) (first images %s).",
        h.n,
        g.n,
        len(jobs),
        first_images,
    )
    best, evaluated, skipped = None, 0, 0
    for found, job_evaluated, job_skipped in gather_in_executor(
        _scan_job, jobs, workers=settings.workers
    ):
        best = _best(best, found)
        evaluated += job_evaluated
        skipped += job_skipped
    if best is None:
        return None, evaluated, skipped
    value, witness = best
    return (value * g.volume, witness), evaluated, skipped


def partial_upper_bound(g: Graph, h: Graph) -> typing.Optional[tuple]:
    """A certified ``(value, witness)`` upper bound found without searching.

    Candidates are the assignments that separate a single vertex of positive
    degree along an edge of `h`, and, when `g` has two components of
    positive volume, the one that separates them. Returns `None` if no
    candidate is defined.
    """
    if not h.edges or g.n < 2:
        return None
    a, b = h.sorted_edges()[0]
    dist = apsp(h)
    candidates = [
        tuple(b if u == v else a for u in g.vertices)
        for v in g.vertices
        if g.degree(v) > 0
    ]
    loaded = [part for part in components(g) if any(g.degree(v) for v in part)]
    if len(loaded) >= 2:
        candidates.append(tuple(b if u in loaded[0] else a for u in g.vertices))
    best = None
    for f in candidates:
        try:
            best = _best(best, (rayleigh_quotient(g, dist, f), f))
        except ZeroDenominator:
            continue
    return best


def lambda_exact(
    g: Graph, h: Graph, settings: Settings = None, *, prune: bool = True
) -> GapResult:
    """Compute ``lambda(g, h)`` exactly.

    The minimum is taken over every nonconstant assignment with a positive
    denominator. A disconnected `h` contributes the minimum over its
    components with at least two vertices. Among minimisers the
    lexicographically smallest assignment is returned.

    :param prune: restrict the image of vertex 0 to one vertex per orbit of
        the automorphism group of `h`. This never changes the value or the
        witness, only the counts.
    :raise PreconditionError: if `h` has fewer than two vertices.
    :raise BudgetExceeded: if a component's assignment space exceeds
        ``settings.budget``.
    :raise UndefinedGap: if no assignment has a positive denominator.
    """
    settings = Settings() if settings is None else settings
    if h.n < 2:
        raise PreconditionError("The target graph needs at least two vertices.", h)
    if g.n < 2:
        raise UndefinedGap("Every assignment of a single vertex is constant.", g)

    parts = [sorted(part) for part in components(h) if len(part) >= 2]
    for part in parts:
        if len(part) ** g.n > settings.budget:
            bound = partial_upper_bound(g, h)
            logger.warning(
                "Refusing to scan %d^%d assignments (budget %d).",
                len(part),
                g.n,
                settings.budget,
            )
            raise BudgetExceeded(
                "%d^%d assignments exceed the budget of %d."
                % (len(part), g.n, settings.budget),
                partial_upper_bound=None if bound is None else bound[0],
                witness=None if bound is None else bound[1],
                obj=(g, h),
            )

    best, evaluated, skipped = None, 0, 0
    for part in parts:
        found, part_evaluated, part_skipped = _search_connected(
            g, induced_subgraph(h, part), settings, prune
        )
        if found is not None:
            value, witness = found
            found = value, tuple(part[image] for image in witness)
        best = _best(best, found)
        evaluated += part_evaluated
        skipped += part_skipped

    if best is None:
        raise UndefinedGap(
            "No nonconstant assignment of %r into %r has a positive denominator."
            % (g, h),
            (g, h),
        )
    value, witness = best
    logger.info(
        "lambda = %s over %d assignments (%d skipped).", value, evaluated, skipped
    )
    return GapResult(value, witness, evaluated, skipped)
