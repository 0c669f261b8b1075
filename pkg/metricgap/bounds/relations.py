"""How ``lambda`` moves when one of its two graphs is perturbed.

Each check compares the ratio of two exact gaps against a window derived
from degrees, diameters and volumes. Windows come back as ``(lower, upper)``
pairs of `BoundReport`.
"""

__all__ = [
    "edge_addition_bounds",
    "edge_addition_lower_terms",
    "h_perturbation_ratio_bounds",
    "regular_supergraph_bounds",
    "subgraph_bound",
]

from fractions import Fraction
import typing

from ..enum import BoundDirection
from ..errors import PreconditionError
from ..graph_core import Graph
from .gap_bounds import sg_constant
from .report import BoundReport, check, make_gap, not_applicable, recorded


LOWER, UPPER = BoundDirection.LOWER, BoundDirection.UPPER


def _window(name, ratio, low, high, note=""):
    return (
        check(name + "_lower", LOWER, low, ratio, note=note),
        check(name + "_upper", UPPER, high, ratio, note=note),
    )


def _skipped_window(name, reason):
    return (
        not_applicable(name + "_lower", LOWER, reason),
        not_applicable(name + "_upper", UPPER, reason),
    )


def _is_one_edge_supergraph(g: Graph, g_plus: Graph) -> bool:
    return g.n == g_plus.n and g.edges < g_plus.edges and g_plus.m == g.m + 1


def h_perturbation_ratio_bounds(
    g: Graph, h: Graph, h_prime: Graph, *, gap=None
) -> typing.List[BoundReport]:
    """Every applicable window on ``lambda(g, h') / lambda(g, h)``.

    `h` and `h_prime` share the vertex set ``0 .. k-1``. The reports cover
    the degree-and-density window, its regular form, the volume-and-diameter
    window (for ``vol(G) >= 6``), and the window for a complete `h` with one
    edge removed. The volume window as literally stated in the source
    theorem is recorded without being asserted.
    """
    for graph in (g, h, h_prime):
        if not graph.is_connected():
            raise PreconditionError("%r is not connected." % (graph,), graph)
    if h.n != h_prime.n:
        raise PreconditionError("The target graphs must share a vertex set.")
    gap = make_gap() if gap is None else gap
    ratio = gap(g, h_prime) / gap(g, h)

    big, small = g.max_degree ** 2, g.min_degree ** 2
    beta = Fraction(big * (1 + sg_constant(g)), small)
    reports = list(_window("h_perturbation", ratio, 1 / beta, beta))

    d = g.regular_degree()
    if d is not None:
        spread = g.n * (g.n - 1 - d) * g.diameter ** 2
        reports.extend(
            _window(
                "h_perturbation_regular",
                ratio,
                Fraction(2, spread + 2),
                1 + Fraction(spread, 2),
            )
        )
    else:
        reports.extend(_skipped_window("h_perturbation_regular", "g is not regular"))

    diameters = h.diameter ** 2 * h_prime.diameter ** 2
    if g.volume >= 6:
        gamma = Fraction(3 * g.volume * diameters, 5)
        reports.extend(_window("h_perturbation_sparse", ratio, 1 / gamma, gamma))
    else:
        reports.extend(_skipped_window("h_perturbation_sparse", "vol(G) < 6"))
    reports.append(
        recorded(
            "h_perturbation_sparse_statement",
            UPPER,
            Fraction(big * h.diameter * g.m * (h.n - 1) ** 2, small),
            ratio,
            note="as stated; the derivation supports the sparse window instead",
        )
    )

    if h.is_complete() and _is_one_edge_supergraph(h_prime, h):
        eta = Fraction(4 * big, small)
        reports.extend(_window("h_complete_minus_edge", ratio, 1 / eta, eta))
    else:
        reports.extend(
            _skipped_window(
                "h_complete_minus_edge",
                "h is not complete or h' is not h minus one edge",
            )
        )
    return reports


def subgraph_bound(g: Graph, h: Graph, h_sub: Graph, *, gap=None) -> BoundReport:
    """``lambda(g, h) <= D_{h_sub}^2 * lambda(g, h_sub)`` for a connected subgraph."""
    if not h_sub.is_connected() or not h_sub.is_subgraph_of(h):
        raise PreconditionError(
            "%r is not a connected subgraph of %r." % (h_sub, h), (h, h_sub)
        )
    gap = make_gap() if gap is None else gap
    bound = h_sub.diameter ** 2 * gap(g, h_sub)
    return check("subgraph_bound", UPPER, bound, gap(g, h))


def edge_addition_lower_terms(
    volume: int, diameter: int
) -> typing.Tuple[Fraction, Fraction]:
    """The two candidates inside the maximum of the edge-addition lower bound."""
    d2 = diameter ** 2
    return (
        Fraction(volume - 1, volume - 1 + d2 * (2 * volume + 1)),
        Fraction(1, 4),
    )


def edge_addition_bounds(
    g: Graph, g_plus: Graph, h: Graph, *, gap=None
) -> typing.Tuple[BoundReport, BoundReport]:
    """The window on ``lambda(g + e, h) / lambda(g, h)`` for one added edge."""
    if not g.is_connected():
        raise PreconditionError("%r is not connected." % (g,), g)
    if g.volume < 6:
        raise PreconditionError("The window needs vol(G) >= 6.", g)
    if not _is_one_edge_supergraph(g, g_plus):
        raise PreconditionError(
            "%r is not %r plus one edge." % (g_plus, g), (g, g_plus)
        )
    gap = make_gap() if gap is None else gap
    ratio = gap(g_plus, h) / gap(g, h)
    growth = 1 + Fraction(2, g.volume)
    by_volume, quarter = edge_addition_lower_terms(g.volume, h.diameter)
    note = "volume term" if by_volume >= quarter else "quarter term"
    return _window(
        "edge_addition",
        ratio,
        growth * max(by_volume, quarter),
        growth * (1 + h.diameter ** 2),
        note=note,
    )


def regular_supergraph_bounds(
    g: Graph, g_plus: Graph, h: Graph, *, gap=None
) -> typing.Tuple[BoundReport, BoundReport]:
    """``d/(d+1) <= ratio <= d/(d+1) (1 + n D_H^2 / 2)`` for a regular step up."""
    d = g.regular_degree()
    d_plus = g_plus.regular_degree()
    if not d or d_plus != d + 1:
        raise PreconditionError(
            "Need a d-regular graph (d >= 1) and a (d+1)-regular supergraph.",
            (g, g_plus),
        )
    if g.n != g_plus.n or not g.edges <= g_plus.edges:
        raise PreconditionError("%r is not a supergraph of %r." % (g_plus, g))
    if not g.is_connected():
        raise PreconditionError("%r is not connected." % (g,), g)
    gap = make_gap() if gap is None else gap
    ratio = gap(g_plus, h) / gap(g, h)
    base = Fraction(d, d + 1)
    return _window(
        "regular_supergraph",
        ratio,
        base,
        base * (1 + Fraction(g.n * h.diameter ** 2, 2)),
    )
