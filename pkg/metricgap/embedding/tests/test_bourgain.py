"""Tests for `metricgap.embedding.bourgain`."""

import math

import numpy as np
from testtools.matchers import Equals, GreaterThan, LessThan

from ...errors import DomainError, PreconditionError
from ...graph_core import apsp, disjoint_union, Graph
from ...graph_core.families import complete, cycle, path
from ...testing import make_connected_graph, TestCase
from ..bourgain import (
    bourgain_embed,
    distortion,
    distortion_summary,
    project_line,
    projection_slack,
)


class TestBourgainEmbed(TestCase):
    def test_dimensions(self):
        embedding = bourgain_embed(apsp(cycle(8)), seed=1)
        self.assertThat(
            (embedding.scales, embedding.reps, embedding.K), Equals((3, 3, 9))
        )
        self.assertThat(embedding.points.shape, Equals((8, 9)))

    def test_two_points_use_one_coordinate(self):
        embedding = bourgain_embed(apsp(complete(2)), seed=0)
        self.assertThat(embedding.K, Equals(1))

    def test_same_seed_same_embedding(self):
        dist = apsp(path(8))
        a, b = bourgain_embed(dist, 5), bourgain_embed(dist, 5)
        self.assertTrue(np.array_equal(a.points, b.points))

    def test_coordinates_are_lipschitz(self):
        for seed in range(1000):
            g = make_connected_graph()
            dist = apsp(g)
            points = bourgain_embed(dist, seed).points
            for column in points.T:
                spread = np.abs(column[:, None] - column[None, :])
                self.assertTrue((spread <= dist.dist).all())

    def test_points_are_read_only(self):
        points = bourgain_embed(apsp(path(4)), 0).points
        self.assertRaises(ValueError, points.__setitem__, (0, 0), 7)

    def test_disconnected_metric(self):
        dist = apsp(disjoint_union(complete(2), complete(2)))
        self.assertRaises(DomainError, bourgain_embed, dist, 0)

    def test_single_point(self):
        self.assertRaises(PreconditionError, bourgain_embed, apsp(Graph(1)), 0)


class TestDistortion(TestCase):
    def test_expansion_is_at_most_the_dimension(self):
        dist = apsp(cycle(8))
        embedding = bourgain_embed(dist, 1)
        report = distortion(dist, embedding)
        self.assertTrue(report.expansion <= embedding.K)

    def test_agrees_with_a_direct_scan(self):
        for seed in range(5):
            dist = apsp(make_connected_graph(n=6))
            embedding = bourgain_embed(dist, seed)
            report = distortion(dist, embedding)
            points = embedding.points
            expansion = max(
                np.abs(points[i] - points[j]).sum() / dist.dist[i, j]
                for i in range(dist.k)
                for j in range(i + 1, dist.k)
            )
            difference = abs(float(report.expansion) - expansion)
            self.assertThat(difference, LessThan(1e-12))

    def test_collapsed_pair_has_infinite_contraction(self):
        dist = apsp(complete(3))
        embedding = bourgain_embed(dist, 0)
        points = np.array(embedding.points)
        points[:] = 0
        collapsed = embedding._replace(points=points)
        report = distortion(dist, collapsed)
        self.assertThat(report.contraction, Equals(math.inf))
        self.assertThat(report.distortion, Equals(math.inf))

    def test_line_projection_sums_coordinates(self):
        embedding = bourgain_embed(apsp(path(5)), 2)
        expected = embedding.points.sum(axis=1).tolist()
        self.assertThat(project_line(embedding).tolist(), Equals(expected))

    def test_projection_never_stretches(self):
        for seed in range(1000):
            dist = apsp(make_connected_graph())
            least, greatest = projection_slack(bourgain_embed(dist, seed))
            self.assertTrue(0 <= least <= greatest, (least, greatest))

    def test_one_coordinate_has_no_slack(self):
        embedding = bourgain_embed(apsp(complete(2)), 0)
        self.assertThat(projection_slack(embedding), Equals((0, 0)))

    def test_distortion_is_at_least_one(self):
        dist = apsp(path(8))
        report = distortion(dist, bourgain_embed(dist, 3))
        self.assertThat(float(report.distortion), GreaterThan(1 - 1e-12))

    def test_needs_two_points(self):
        dist = apsp(Graph(1))
        embedding = bourgain_embed(apsp(complete(2)), 0)
        self.assertRaises(PreconditionError, distortion, dist, embedding)


class TestDistortionSummary(TestCase):
    def test_summary_fields(self):
        summary = distortion_summary(apsp(path(8)), range(32))
        self.assertThat(sorted(summary), Equals(["distortion", "line_distortion"]))
        for stats in summary.values():
            self.assertThat(sorted(stats), Equals(["max", "median", "min"]))
            self.assertTrue(stats["min"] <= stats["median"] <= stats["max"])
