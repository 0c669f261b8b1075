"""Exact identities for complete multipartite graphs and ``K_n`` minus an edge."""

__all__ = [
    "bipartite_identities",
    "kn_minus_edge_check",
    "kn_minus_edge_sequence",
]

import logging
import typing

from ..enum import BoundDirection
from ..errors import PreconditionError
from ..graph_core.families import complete, complete_minus_edge, complete_multipartite
from .gap_bounds import upper_bound_complete
from .report import BoundReport, check, make_gap, recorded


logger = logging.getLogger(__name__)


def bipartite_identities(
    n: int, j: int, k: int, *, gap=None
) -> typing.Tuple[BoundReport, BoundReport]:
    """``lambda(K_{n,j}, K_2) = 1`` and ``lambda(K_{n,n}, K_k) = 1``.

    `K_{n,j}` has `j` parts of `n` vertices. With ``n = 1`` both graphs are
    complete, so the values are recorded rather than asserted.
    """
    if n < 1 or j < 2 or k < 2:
        raise PreconditionError("Need n >= 1, j >= 2 and k >= 2.")
    gap = make_gap() if gap is None else gap
    multipartite = gap(complete_multipartite(n, j), complete(2))
    balanced = gap(complete_multipartite(n, 2), complete(k))
    if n == 1:
        logger.info(
            "Parts of size 1 make K_{1,%d} complete: lambda = %s, not 1.",
            j,
            multipartite,
        )
        note = "parts of size 1 give a complete graph"
        return (
            recorded("multipartite_k2", BoundDirection.EQUAL, 1, multipartite, note),
            recorded("balanced_bipartite_kk", BoundDirection.EQUAL, 1, balanced, note),
        )
    return (
        check("multipartite_k2", BoundDirection.EQUAL, 1, multipartite),
        check("balanced_bipartite_kk", BoundDirection.EQUAL, 1, balanced),
    )


def kn_minus_edge_check(
    n: int, *, gap=None
) -> typing.Tuple[BoundReport, BoundReport]:
    """``1 <= lambda(K_n - e, K_2) < n / (n - 1)``."""
    if n < 3:
        raise PreconditionError("K_n minus an edge needs n >= 3, got %d." % n)
    gap = make_gap() if gap is None else gap
    value = gap(complete_minus_edge(n), complete(2))
    return (
        check("kn_minus_edge_lower", BoundDirection.LOWER, 1, value),
        check(
            "kn_minus_edge_upper",
            BoundDirection.UPPER,
            upper_bound_complete(n),
            value,
            strict=True,
        ),
    )


def kn_minus_edge_sequence(
    orders: typing.Iterable[int], *, gap=None
) -> typing.List[BoundReport]:
    """`kn_minus_edge_check` for every order, plus the shrinking window.

    Each value must also lie below the upper end of the window of the
    preceding order, which is what convergence to 1 looks like at finite n.
    """
    gap = make_gap() if gap is None else gap
    orders = sorted(set(orders))
    reports = []
    for n in orders:
        reports.extend(kn_minus_edge_check(n, gap=gap))
    for smaller, larger in zip(orders, orders[1:]):
        reports.append(
            check(
                "kn_minus_edge_window_%d_%d" % (smaller, larger),
                BoundDirection.UPPER,
                upper_bound_complete(smaller),
                gap(complete_minus_edge(larger), complete(2)),
            )
        )
    return reports
