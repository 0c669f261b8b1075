"""How far the gap into a graph metric sits below the classical gap."""

__all__ = ["minimum_ratio", "RatioRecord", "relate_to_R_report"]

from collections import namedtuple
import math
import typing

from ..bounds import make_gap
from ..errors import PreconditionError
from ..graph_core import Graph
from ..spectral import lambda_R


RatioRecord = namedtuple(
    "RatioRecord", ("g", "h", "lambda_h", "lambda_R", "log_squared", "ratio")
)
RatioRecord.__doc__ = """\
``ratio = lambda(g, h) * log2(k)^2 / lambda(g, R)``; bounded below by an
absolute constant, which is measured here rather than assumed.
"""


def relate_to_R_report(g: Graph, h: Graph, *, gap=None) -> RatioRecord:
    """Measure ``lambda(g, h) * log2(k)^2 / lambda(g, R)`` for one pair."""
    if not g.is_connected():
        raise PreconditionError("%r is not connected." % (g,), g)
    if h.n < 2:
        raise PreconditionError("The target graph needs at least two vertices.", h)
    gap = make_gap() if gap is None else gap
    exact = gap(g, h)
    classical = lambda_R(g).lambda1
    log_squared = math.log2(h.n) ** 2
    return RatioRecord(
        g, h, exact, classical, log_squared, float(exact) * log_squared / classical
    )


def minimum_ratio(records: typing.Iterable[RatioRecord]) -> RatioRecord:
    """The record with the smallest ratio; ties keep the first."""
    return min(records, key=lambda record: record.ratio)
