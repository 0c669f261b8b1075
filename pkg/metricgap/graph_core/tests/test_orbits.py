"""Tests for `metricgap.graph_core.orbits`."""

from testtools.matchers import Equals

from ...testing import TestCase
from ..distances import apsp
from ..families import complete, complete_minus_edge, cycle, path, star
from ..graph import Graph
from ..orbits import MAX_ORBIT_ORDER, vertex_orbits


class TestVertexOrbits(TestCase):

    scenarios = (
        ("K4", dict(graph=complete(4), orbits=[{0, 1, 2, 3}])),
        ("C5", dict(graph=cycle(5), orbits=[{0, 1, 2, 3, 4}])),
        ("P4", dict(graph=path(4), orbits=[{0, 3}, {1, 2}])),
        ("P3", dict(graph=path(3), orbits=[{0, 2}, {1}])),
        ("star3", dict(graph=star(3), orbits=[{0}, {1, 2, 3}])),
        ("K4e", dict(graph=complete_minus_edge(4), orbits=[{0, 1}, {2, 3}])),
        (
            "spider",
            dict(
                graph=Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]),
                orbits=[{0, 4}, {1, 3}, {2}, {5}],
            ),
        ),
    )

    def test__orbits(self):
        partition = vertex_orbits(self.graph)
        self.assertTrue(partition.exact)
        self.assertThat(
            [set(orbit) for orbit in partition.orbits()], Equals(self.orbits)
        )

    def test__generators_preserve_distances(self):
        rows = apsp(self.graph).rows()
        for generator in vertex_orbits(self.graph).generators:
            for u in self.graph.vertices:
                for v in self.graph.vertices:
                    self.assertThat(
                        rows[generator[u]][generator[v]], Equals(rows[u][v])
                    )

    def test__representatives_are_smallest(self):
        partition = vertex_orbits(self.graph)
        self.assertThat(
            partition.representatives(),
            Equals(sorted(min(orbit) for orbit in self.orbits)),
        )

    def test__orbits_follow_relabelling(self):
        mapping = list(reversed(self.graph.vertices))
        relabelled = vertex_orbits(self.graph.relabel(mapping))
        expected = {frozenset(mapping[v] for v in orbit) for orbit in self.orbits}
        self.assertThat(set(relabelled.orbits()), Equals(expected))


class TestOrbitLimit(TestCase):
    def test_large_graphs_fall_back_to_singletons(self):
        partition = vertex_orbits(cycle(MAX_ORBIT_ORDER + 1))
        self.assertFalse(partition.exact)
        self.assertThat(len(partition.orbits()), Equals(MAX_ORBIT_ORDER + 1))
        self.assertIn("(singletons)", repr(partition))

    def test_repr(self):
        partition = vertex_orbits(path(3))
        self.assertThat(repr(partition), Equals("<OrbitPartition {0,2} {1}>"))
