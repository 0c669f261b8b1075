"""Random-subset embeddings of finite graph metrics into coordinate space.

Every coordinate is the distance from a point to a random subset, so each
coordinate map is 1-Lipschitz. Subsets are drawn at scales ``t = 1 .. T``
with inclusion probability ``2^-t``, ``T`` repetitions per scale, where
``T = ceil(log2 k)``.
"""

__all__ = [
    "bourgain_embed",
    "distortion",
    "distortion_summary",
    "DistortionReport",
    "EmbeddingResult",
    "project_line",
    "projection_slack",
]

from collections import namedtuple
from fractions import Fraction
import logging
import math
import typing

import numpy as np

from ..errors import DomainError, PreconditionError
from ..graph_core import DistanceMatrix


logger = logging.getLogger(__name__)


EmbeddingResult = namedtuple(
    "EmbeddingResult", ("points", "K", "scales", "reps", "seed")
)
EmbeddingResult.__doc__ = """\
`points` holds one row of `K` coordinates per metric point; column
``(t - 1) * reps + r`` comes from scale `t` and repetition `r`.
"""

DistortionReport = namedtuple(
    "DistortionReport",
    (
        "expansion",
        "contraction",
        "distortion",
        "line_expansion",
        "line_contraction",
        "line_distortion",
    ),
)
DistortionReport.__doc__ = """\
Worst-pair stretch and shrink of an embedding in the l1 norm and after
projection to the line. A contraction is ``math.inf`` when two points at
positive distance land on the same image.
"""


def _levels(k: int) -> int:
    return max(1, math.ceil(math.log2(k)))


def _sample(rng, k, probability):
    return rng.random(k) < probability


def bourgain_embed(dist: DistanceMatrix, seed: int) -> EmbeddingResult:
    """Embed the metric `dist` with coordinates ``d(x, S)`` for random `S`.

    Each cell ``(t, r)`` draws from its own generator seeded by
    ``(seed, t, r)``, so the result depends on `seed` alone. An empty subset
    is drawn again once; if still empty the whole point set is used, which
    makes the coordinate identically 0.
    """
    k = dist.k
    if k < 2:
        raise PreconditionError("An embedding needs at least two points.", dist)
    if not dist.is_connected():
        raise DomainError("Cannot embed a metric with infinite distances.", dist)
    scales = reps = _levels(k)
    points = np.zeros((k, scales * reps), dtype=np.int64)
    for t in range(1, scales + 1):
        for r in range(reps):
            rng = np.random.default_rng([seed, t, r])
            subset = _sample(rng, k, 2.0 ** -t)
            if not subset.any():
                subset = _sample(rng, k, 2.0 ** -t)
            if not subset.any():
                logger.debug(
                    "Empty subset at scale %d, rep %d; using all points.", t, r
                )
                subset[:] = True
            points[:, (t - 1) * reps + r] = dist.dist[:, subset].min(axis=1)
    points.flags.writeable = False
    return EmbeddingResult(points, scales * reps, scales, reps, seed)


def project_line(e: EmbeddingResult) -> np.ndarray:
    """Sum the coordinates of every point."""
    return e.points.sum(axis=1)


def projection_slack(e: EmbeddingResult) -> typing.Tuple[int, int]:
    """Least and greatest ``||v - w||_1 - |phi(v) - phi(w)|`` over all pairs.

    The projection never stretches a pair, so the least slack is never
    negative. Fewer than two points give ``(0, 0)``.
    """
    points = e.points
    if len(points) < 2:
        return 0, 0
    line = project_line(e)
    us, vs = np.triu_indices(len(points), 1)
    l1 = np.abs(points[us] - points[vs]).sum(axis=1)
    slack = l1 - np.abs(line[us] - line[vs])
    return int(slack.min()), int(slack.max())


def _stretch(original, embedded):
    """``(max embedded/original, max original/embedded)`` over all pairs."""
    expansion, contraction = Fraction(0), Fraction(0)
    k = len(original)
    for i in range(k):
        for j in range(i + 1, k):
            d, e = int(original[i][j]), int(embedded[i][j])
            expansion = max(expansion, Fraction(e, d))
            if e == 0:
                contraction = math.inf
            elif contraction != math.inf:
                contraction = max(contraction, Fraction(d, e))
    return expansion, contraction


def _product(expansion, contraction):
    return math.inf if contraction == math.inf else expansion * contraction


def distortion(dist: DistanceMatrix, e: EmbeddingResult) -> DistortionReport:
    """Scan every pair for the stretch of `e` and of its line projection."""
    if dist.k < 2:
        raise PreconditionError("Distortion needs at least two points.", dist)
    points = e.points
    l1 = np.abs(points[:, None, :] - points[None, :, :]).sum(axis=2)
    line = project_line(e)
    projected = np.abs(line[:, None] - line[None, :])
    expansion, contraction = _stretch(dist.dist, l1)
    line_expansion, line_contraction = _stretch(dist.dist, projected)
    return DistortionReport(
        expansion,
        contraction,
        _product(expansion, contraction),
        line_expansion,
        line_contraction,
        _product(line_expansion, line_contraction),
    )


def distortion_summary(
    dist: DistanceMatrix, seeds: typing.Iterable[int]
) -> typing.Dict[str, typing.Dict[str, float]]:
    """Minimum, median and maximum distortion over many seeds."""
    reports = [distortion(dist, bourgain_embed(dist, seed)) for seed in seeds]
    summary = {}
    for field in ("distortion", "line_distortion"):
        values = np.array([float(getattr(report, field)) for report in reports])
        summary[field] = {
            "min": float(values.min()),
            "median": float(np.median(values)),
            "max": float(values.max()),
        }
    return summary
