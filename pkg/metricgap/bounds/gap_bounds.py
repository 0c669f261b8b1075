"""Closed-form bounds on ``lambda(G, H)`` for a single pair of graphs."""

__all__ = [
    "complete_comparison_bound",
    "lower_bound_SG",
    "naive_lower",
    "naive_lower_regular",
    "sg_constant",
    "upper_bound_complete",
]

from fractions import Fraction
from math import comb

from ..enum import BoundDirection
from ..errors import PreconditionError
from ..graph_core import Graph
from ..graph_core.families import complete
from .report import BoundReport, check, make_gap


def _require_connected(*graphs):
    for graph in graphs:
        if not graph.is_connected():
            raise PreconditionError("%r is not connected." % (graph,), graph)


def sg_constant(g: Graph) -> int:
    """``S_G = (C(n, 2) - m) * D_G^2``, zero exactly for complete graphs."""
    return (comb(g.n, 2) - g.m) * g.diameter ** 2


def lower_bound_SG(g: Graph, h: Graph, *, gap=None) -> BoundReport:
    """``lambda(g, h) >= vol(G) / (Delta^2 (1 + S_G))``; tight for complete `g`."""
    _require_connected(g)
    gap = make_gap() if gap is None else gap
    bound = Fraction(g.volume, g.max_degree ** 2 * (1 + sg_constant(g)))
    return check("lower_bound_SG", BoundDirection.LOWER, bound, gap(g, h))


def upper_bound_complete(n: int) -> Fraction:
    """``n / (n - 1)``, attained only by the complete graph."""
    if n < 2:
        raise PreconditionError("The bound needs n >= 2, got %d." % n)
    return Fraction(n, n - 1)


def naive_lower(g: Graph, h: Graph, *, gap=None) -> BoundReport:
    """``lambda(g, h) >= 2k / (D_H^2 vol(G) (k - 1))``."""
    _require_connected(g, h)
    gap = make_gap() if gap is None else gap
    k = h.n
    bound = Fraction(2 * k, h.diameter ** 2 * g.volume * (k - 1))
    return check("naive_lower", BoundDirection.LOWER, bound, gap(g, h))


def naive_lower_regular(g: Graph, h: Graph, *, gap=None) -> BoundReport:
    """``lambda(g, h) >= 2 / ((n - 1) d D_H^2)`` for a d-regular `g`."""
    _require_connected(g, h)
    d = g.regular_degree()
    if d is None:
        raise PreconditionError("%r is not regular." % (g,), g)
    gap = make_gap() if gap is None else gap
    bound = Fraction(2, (g.n - 1) * d * h.diameter ** 2)
    return check("naive_lower_regular", BoundDirection.LOWER, bound, gap(g, h))


def complete_comparison_bound(g: Graph, h: Graph, j: int, *, gap=None) -> BoundReport:
    """``lambda(g, h) >= lambda(g, K_j) / D_H^2`` for every ``j >= k``."""
    _require_connected(h)
    if j < h.n:
        raise PreconditionError(
            "The comparison needs j >= k = %d, got %d." % (h.n, j), h
        )
    gap = make_gap() if gap is None else gap
    bound = gap(g, complete(j)) / h.diameter ** 2
    return check(
        "complete_comparison_K%d" % j, BoundDirection.LOWER, bound, gap(g, h)
    )
