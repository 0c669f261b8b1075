"""Tests for `metricgap.graph_core.families`."""

from math import comb

import networkx as nx
from testtools.matchers import Equals

from ...enum import FamilyName
from ...errors import ConstructionError
from ...testing import TestCase
from .. import families
from ..families import generate, parse_family, red_count


class TestFamilies(TestCase):

    scenarios = (
        ("complete5", dict(spec="complete:5", n=5, m=10, diameter=1)),
        ("K33", dict(spec="complete_bipartite:3:3", n=6, m=9, diameter=2)),
        ("K2x3", dict(spec="complete_multipartite:2:3", n=6, m=12, diameter=2)),
        ("path5", dict(spec="path:5", n=5, m=4, diameter=4)),
        ("cycle7", dict(spec="cycle:7", n=7, m=7, diameter=3)),
        ("star4", dict(spec="star:4", n=5, m=4, diameter=2)),
        ("K5-e", dict(spec="complete_minus_edge:5", n=5, m=9, diameter=2)),
        ("dumbbell6", dict(spec="dumbbell:6", n=6, m=7, diameter=3)),
        ("dumbbell10", dict(spec="dumbbell:10", n=10, m=21, diameter=3)),
        (
            "regdumbbell8",
            dict(spec="regularized_dumbbell:8", n=8, m=12, diameter=3),
        ),
        (
            "plusmatching4",
            dict(spec="balanced_bipartite_plus_matching:4", n=8, m=20, diameter=2),
        ),
        (
            "redclique16",
            dict(spec="red_clique_bipartite:16:8", n=32, m=312, diameter=2),
        ),
    )

    def test__order_size_and_diameter(self):
        graph = parse_family(self.spec)
        self.assertThat(
            (graph.n, graph.m, graph.diameter), Equals((self.n, self.m, self.diameter))
        )

    def test__diameter_agrees_with_networkx(self):
        graph = parse_family(self.spec)
        oracle = nx.Graph()
        oracle.add_nodes_from(graph.vertices)
        oracle.add_edges_from(graph.edges)
        self.assertThat(graph.diameter, Equals(nx.diameter(oracle)))


class TestFamilyShapes(TestCase):
    def test_dumbbell_volume(self):
        for n in (4, 6, 8, 10, 12):
            self.assertThat(
                families.dumbbell(n).volume, Equals(n * (n // 2 - 1) + 2)
            )

    def test_dumbbell_bridge(self):
        graph = families.dumbbell(8)
        self.assertTrue(graph.has_edge(3, 4))
        self.assertFalse(graph.has_edge(0, 4))

    def test_regularized_dumbbell_is_regular_and_connected(self):
        for n in (6, 8, 10, 12):
            graph = families.regularized_dumbbell(n)
            self.assertThat(graph.regular_degree(), Equals(n // 2 - 1))
            self.assertTrue(graph.is_connected())

    def test_balanced_bipartite_plus_matching_is_regular(self):
        graph = families.balanced_bipartite_plus_matching(4)
        self.assertThat(graph.regular_degree(), Equals(5))
        self.assertTrue(graph.has_edge(0, 1))
        self.assertTrue(graph.has_edge(4, 5))
        self.assertFalse(graph.has_edge(1, 2))

    def test_red_clique_volume(self):
        graph = families.red_clique_bipartite(16, 8)
        self.assertThat(graph.volume, Equals(2 * (256 + comb(8, 2) * 2)))
        self.assertThat(graph.volume, Equals(624))

    def test_red_clique_red_vertices_come_first(self):
        graph = families.red_clique_bipartite(4, 2)
        self.assertTrue(graph.has_edge(0, 1))
        self.assertTrue(graph.has_edge(4, 5))
        self.assertFalse(graph.has_edge(2, 3))

    def test_complete_minus_edge_misses_first_pair(self):
        graph = families.complete_minus_edge(5)
        self.assertFalse(graph.has_edge(0, 1))
        self.assertThat(graph.m, Equals(9))

    def test_multipartite_parts_are_contiguous(self):
        graph = families.complete_multipartite(3, 2)
        self.assertFalse(graph.has_edge(0, 2))
        self.assertTrue(graph.has_edge(2, 3))


class TestRedCount(TestCase):
    def test_integer_count(self):
        self.assertThat(red_count(16, 0.5), Equals(8))

    def test_non_integer_count_is_refused(self):
        self.assertRaises(ConstructionError, red_count, 10, 0.5)


class TestGenerate(TestCase):
    def test_accepts_family_name_enum(self):
        self.assertThat(
            generate(FamilyName.PATH, 3), Equals(parse_family("path:3"))
        )

    def test_unknown_family(self):
        self.assertRaises(ConstructionError, generate, "moebius", 3)

    def test_wrong_arity(self):
        self.assertRaises(ConstructionError, generate, "complete_bipartite", 3)

    def test_non_integer_parameters(self):
        self.assertRaises(ConstructionError, parse_family, "cycle:x")

    def test_impossible_parameters(self):
        impossible = (
            "cycle:2",
            "dumbbell:5",
            "regularized_dumbbell:4",
            "balanced_bipartite_plus_matching:3",
            "red_clique_bipartite:4:5",
        )
        for spec in impossible:
            self.assertRaises(ConstructionError, parse_family, spec)
