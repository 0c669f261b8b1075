"""Tests for `metricgap.bounds.relations`."""

from fractions import Fraction

from testtools.matchers import Equals

from ...enum import CheckStatus
from ...errors import PreconditionError
from ...graph_core import add_edge, disjoint_union
from ...graph_core.families import (
    balanced_bipartite_plus_matching,
    complete,
    complete_minus_edge,
    complete_multipartite,
    cycle,
    path,
)
from ...testing import TestCase
from ..relations import (
    edge_addition_bounds,
    edge_addition_lower_terms,
    h_perturbation_ratio_bounds,
    regular_supergraph_bounds,
    subgraph_bound,
)
from ..report import make_gap


def by_name(reports):
    return {report.name: report for report in reports}


class TestHPerturbation(TestCase):
    def test_every_window_applies_to_a_regular_source(self):
        reports = by_name(
            h_perturbation_ratio_bounds(cycle(4), complete(4), complete_minus_edge(4))
        )
        self.assertThat(
            sorted(reports),
            Equals(
                sorted(
                    [
                        "%s_%s" % (window, side)
                        for window in (
                            "h_perturbation",
                            "h_perturbation_regular",
                            "h_perturbation_sparse",
                            "h_complete_minus_edge",
                        )
                        for side in ("lower", "upper")
                    ]
                    + ["h_perturbation_sparse_statement"]
                )
            ),
        )
        statement = reports.pop("h_perturbation_sparse_statement")
        self.assertThat(statement.status, Equals(CheckStatus.RECORDED))
        for report in reports.values():
            self.assertTrue(report.holds, repr(report))

    def test_skipped_windows(self):
        gap = make_gap()
        reports = by_name(
            h_perturbation_ratio_bounds(path(3), path(3), complete(3), gap=gap)
        )
        for name in (
            "h_perturbation_regular_lower",
            "h_perturbation_sparse_upper",
            "h_complete_minus_edge_lower",
        ):
            self.assertThat(reports[name].status, Equals(CheckStatus.NOT_APPLICABLE))
        self.assertTrue(reports["h_perturbation_lower"].holds)

    def test_targets_must_share_vertices(self):
        self.assertRaises(
            PreconditionError,
            h_perturbation_ratio_bounds,
            path(4),
            complete(3),
            complete(4),
        )

    def test_disconnected_target(self):
        h = disjoint_union(complete(2), complete(2))
        self.assertRaises(
            PreconditionError, h_perturbation_ratio_bounds, path(4), complete(4), h
        )


class TestSubgraphBound(TestCase):
    def test_path_inside_cycle(self):
        report = subgraph_bound(path(4), cycle(4), path(4))
        self.assertTrue(report.holds)

    def test_not_a_subgraph(self):
        self.assertRaises(
            PreconditionError, subgraph_bound, path(4), path(4), cycle(4)
        )


class TestEdgeAddition(TestCase):
    def test_lower_terms(self):
        self.assertThat(
            edge_addition_lower_terms(6, 1), Equals((Fraction(5, 18), Fraction(1, 4)))
        )

    def test_chord_of_a_square(self):
        g = cycle(4)
        lower, upper = edge_addition_bounds(g, add_edge(g, 0, 2), complete(2))
        self.assertThat(lower.subject_value, Equals(Fraction(6, 5)))
        self.assertThat(lower.bound_value, Equals(Fraction(35, 96)))
        self.assertThat(upper.bound_value, Equals(Fraction(5, 2)))
        self.assertThat(lower.note, Equals("volume term"))
        self.assertTrue(lower.holds and upper.holds)

    def test_small_volume(self):
        g = path(3)
        self.assertRaises(
            PreconditionError, edge_addition_bounds, g, add_edge(g, 0, 2), complete(2)
        )

    def test_more_than_one_edge(self):
        self.assertRaises(
            PreconditionError, edge_addition_bounds, cycle(4), complete(4), complete(2)
        )


class TestRegularSupergraph(TestCase):
    def test_square_to_complete(self):
        lower, upper = regular_supergraph_bounds(
            complete_multipartite(2, 2),
            balanced_bipartite_plus_matching(2),
            complete(2),
        )
        self.assertThat(lower.subject_value, Equals(Fraction(4, 3)))
        self.assertThat(
            (lower.bound_value, upper.bound_value),
            Equals((Fraction(2, 3), Fraction(2))),
        )
        self.assertTrue(lower.holds and upper.holds)

    def test_irregular_source(self):
        self.assertRaises(
            PreconditionError,
            regular_supergraph_bounds,
            path(3),
            complete(3),
            complete(2),
        )
