"""The worked examples, recomputed end to end.

Every row pairs a documented value (or window) with the value computed here,
exactly where the quantity is rational. `example_rows` builds the whole
table; `ExampleRow.match` says whether the computed value agrees.
"""

__all__ = ["example_rows", "ExampleRow"]

from collections import namedtuple
from fractions import Fraction
from itertools import product
import logging
import typing

from ..bounds import make_gap, upper_bound_complete
from ..bounds.closed_forms import (
    dumbbell_cut_value,
    kn_minus_edge_quotient,
    multipartite_k2_quotient,
    red_clique_added_fraction,
    regularized_dumbbell_cut_bound,
    same_side_edge_value,
)
from ..exact_gap import lambda_upper_witness
from ..graph_core import add_apex, add_edge, disjoint_union, remove_edge
from ..graph_core.families import (
    balanced_bipartite_plus_matching,
    complete,
    complete_minus_edge,
    complete_multipartite,
    dumbbell,
    path,
    red_clique_bipartite,
    regularized_dumbbell,
)
from ..spectral import lambda_R
from ..utils.settings import Settings


logger = logging.getLogger(__name__)


ExampleRow = namedtuple("ExampleRow", ("name", "expected", "computed", "match"))


def _equal(name, expected, computed):
    return ExampleRow(name, "= %s" % expected, computed, computed == expected)


def _at_most(name, bound, computed):
    return ExampleRow(name, "<= %s" % bound, computed, computed <= bound)


def _below(name, bound, computed):
    return ExampleRow(name, "< %s" % bound, computed, computed < bound)


def _above(name, bound, computed):
    return ExampleRow(name, "> %s" % bound, computed, computed > bound)


def _within(name, low, high, computed, *, open_high=False):
    inside = low <= computed and (computed < high if open_high else computed <= high)
    text = "in [%s, %s%s" % (low, high, ")" if open_high else "]")
    return ExampleRow(name, text, computed, inside)


def _identities(gap) -> typing.List[ExampleRow]:
    rows = [_equal("path_3_K2", Fraction(4, 3), gap(path(3), complete(2)))]
    for n in range(3, 9):
        rows.append(
            _equal(
                "complete_%d_K2" % n,
                upper_bound_complete(n),
                gap(complete(n), complete(2)),
            )
        )
    for n in range(3, 7):
        rows.append(
            _equal(
                "complete_%d_K3" % n,
                upper_bound_complete(n),
                gap(complete(n), complete(3)),
            )
        )
    k33 = complete_multipartite(3, 2)
    rows.append(_equal("K33_K2", 1, gap(k33, complete(2))))
    rows.append(_equal("K33_K4", 1, gap(k33, complete(4))))
    for n, j in ((2, 2), (3, 2), (2, 3), (4, 2)):
        value = gap(complete_multipartite(n, j), complete(2))
        rows.append(_equal("multipartite_%d_%d_K2" % (n, j), 1, value))
        closed = min(
            multipartite_k2_quotient(n, j, x)
            for x in product(range(n + 1), repeat=j)
            if 0 < sum(x) < n * j
        )
        rows.append(_equal("multipartite_%d_%d_closed_form" % (n, j), value, closed))
    for n, k in ((2, 3), (3, 3), (3, 4)):
        value = gap(complete_multipartite(n, 2), complete(k))
        rows.append(_equal("balanced_%d_K%d" % (n, k), 1, value))
    union = disjoint_union(complete(3), complete(2))
    rows.append(_equal("K3_union_K2_K2", 0, gap(union, complete(2))))
    two_missing = remove_edge(remove_edge(complete(4), 0, 1), 0, 2)
    rows.append(_equal("K4_minus_two_edges_K2", 1, gap(two_missing, complete(2))))
    return rows


def _target_examples(gap) -> typing.List[ExampleRow]:
    k33 = complete_multipartite(3, 2)
    k4e = complete_minus_edge(4)
    witness = lambda_upper_witness(k33, k4e, (3, 3, 2, 3, 1, 0))
    exact = gap(k33, k4e)
    return [
        _equal("K33_K4e_witness", Fraction(14, 15), witness),
        _at_most("K33_K4e_exact", Fraction(14, 15), exact),
        _below("K33_K4e_below_K4", gap(k33, complete(4)), exact),
    ]


def _edge_examples(gap, settings) -> typing.List[ExampleRow]:
    rows = []
    cut = tuple([0] * 3 + [1] * 3)
    two_sevenths = Fraction(2, 7)
    witness = lambda_upper_witness(dumbbell(6), complete(2), cut)
    rows.append(_equal("dumbbell_6_cut", two_sevenths, witness))
    closed = dumbbell_cut_value(6)
    rows.append(_equal("dumbbell_6_cut_closed_form", two_sevenths, closed))
    rows.append(_equal("dumbbell_6_exact", two_sevenths, gap(dumbbell(6), complete(2))))

    k33 = complete_multipartite(3, 2)
    same_side = add_edge(k33, 0, 1)
    exact = gap(same_side, complete(2))
    rows.append(_equal("same_side_edge_3", same_side_edge_value(3), exact))
    rows.append(_below("same_side_edge_3_below_K33", gap(k33, complete(2)), exact))
    classical = lambda_R(k33).lambda1 - settings.tolerance
    rows.append(
        _below("same_side_edge_3_real", classical, lambda_R(same_side).lambda1)
    )

    plus_matching = balanced_bipartite_plus_matching(4)
    f = tuple(0 if v in (0, 1, 4, 5) else 1 for v in plus_matching.vertices)
    witness = lambda_upper_witness(plus_matching, complete(2), f)
    rows.append(_equal("regular_supergraph_4_witness", Fraction(4, 5), witness))
    exact = gap(plus_matching, complete(2))
    rows.append(_at_most("regular_supergraph_4_exact", Fraction(4, 5), exact))

    k22 = complete_multipartite(2, 2)
    apex = gap(add_apex(k22), complete(2))
    rows.append(_above("K22_apex", gap(k22, complete(2)), apex))

    n, r = 16, 8
    red = red_clique_bipartite(n, r)
    f = tuple(0 if v % n < r else 1 for v in red.vertices)
    rows.append(_below("red_clique_16_8", 1, lambda_upper_witness(red, complete(2), f)))
    added = Fraction(red.m - n * n, n * (n - 1))
    rows.append(
        _equal("red_clique_16_8_added", red_clique_added_fraction(n, r), added)
    )
    return rows


def _asymptotic_examples(gap) -> typing.List[ExampleRow]:
    rows = []
    for n in range(3, 9):
        value = gap(complete_minus_edge(n), complete(2))
        rows.append(
            _within(
                "Kn_minus_edge_%d" % n,
                1,
                upper_bound_complete(n),
                value,
                open_high=True,
            )
        )
        cases = [
            kn_minus_edge_quotient(n, x, n - 2 - x, together=True)
            for x in range(n - 2)
        ] + [
            kn_minus_edge_quotient(n, x, n - 2 - x, together=False)
            for x in range(n - 1)
        ]
        rows.append(_equal("Kn_minus_edge_%d_closed_form" % n, value, min(cases)))
    for n in (6, 8, 10, 12):
        shape = gap(dumbbell(n), complete(2)) / Fraction(8, n * n)
        rows.append(_within("dumbbell_%d_shape" % n, Fraction(1, 2), 2, shape))
        d = n // 2 - 1
        value = gap(regularized_dumbbell(n), complete(2))
        bound = regularized_dumbbell_cut_bound(n)
        rows.append(_at_most("regularized_dumbbell_%d_cut" % n, bound, value))
        shape = value / Fraction(8, n * d)
        rows.append(
            _within("regularized_dumbbell_%d_shape" % n, Fraction(1, 2), 2, shape)
        )
    return rows


def example_rows(settings: Settings = None) -> typing.List[ExampleRow]:
    """Recompute every worked example; rows come back in a fixed order."""
    settings = Settings() if settings is None else settings
    gap = make_gap(settings)
    rows = _identities(gap)
    rows += _target_examples(gap)
    rows += _edge_examples(gap, settings)
    rows += _asymptotic_examples(gap)
    mismatches = [row.name for row in rows if not row.match]
    if mismatches:
        logger.warning("Mismatched example(s): %s", ", ".join(mismatches))
    return rows
