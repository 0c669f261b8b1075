"""Tests for `metricgap.exact_gap.rayleigh`."""

from fractions import Fraction

from testtools.matchers import Equals

from ...errors import DomainError, ZeroDenominator
from ...graph_core import apsp, Graph
from ...graph_core.families import (
    complete,
    complete_minus_edge,
    complete_multipartite,
    dumbbell,
    path,
)
from ...testing import make_assignment, make_connected_graph, TestCase
from ..rayleigh import lambda_upper_witness, rayleigh_quotient, rayleigh_terms


def direct_quotient(g, h, f):
    """The quotient summed pair by pair, straight from its definition."""
    rows = apsp(h).rows()
    numerator = sum(rows[f[u]][f[v]] ** 2 for u, v in g.edges)
    denominator = sum(
        rows[f[u]][f[v]] ** 2 * g.degree(u) * g.degree(v)
        for u in g.vertices
        for v in g.vertices
        if u < v
    )
    return Fraction(g.volume * numerator, denominator)


class TestRayleighTerms(TestCase):
    def test_path_into_edge(self):
        self.assertThat(
            rayleigh_terms(path(3), apsp(complete(2)), (0, 0, 1)), Equals((1, 3))
        )

    def test_accepts_numpy_like_images(self):
        self.assertThat(
            rayleigh_terms(path(3), apsp(complete(2)), [0.0, 0.0, 1.0]),
            Equals((1, 3)),
        )


class TestRayleighQuotient(TestCase):

    scenarios = (
        ("P3_cut", dict(g=path(3), h=complete(2), f=(0, 0, 1), value=Fraction(4, 3))),
        ("P3_middle", dict(g=path(3), h=complete(2), f=(0, 1, 0), value=2)),
        ("K3", dict(g=complete(3), h=complete(2), f=(0, 0, 1), value=Fraction(3, 2))),
        (
            "dumbbell6_cut",
            dict(
                g=dumbbell(6),
                h=complete(2),
                f=(0, 0, 0, 1, 1, 1),
                value=Fraction(2, 7),
            ),
        ),
        (
            "K33_K4e",
            dict(
                g=complete_multipartite(3, 2),
                h=complete_minus_edge(4),
                f=(3, 3, 2, 3, 1, 0),
                value=Fraction(14, 15),
            ),
        ),
    )

    def test__value(self):
        self.assertThat(
            rayleigh_quotient(self.g, apsp(self.h), self.f), Equals(self.value)
        )

    def test__witness_is_the_quotient(self):
        witness = lambda_upper_witness(self.g, self.h, self.f)
        self.assertThat(witness, Equals(self.value))

    def test__value_is_exact(self):
        self.assertIsInstance(
            rayleigh_quotient(self.g, apsp(self.h), self.f), Fraction
        )


class TestRayleighOracle(TestCase):
    def test_agrees_with_direct_sum(self):
        targets = [complete(2), complete(3), path(3), path(4)]
        for _ in range(50):
            g = make_connected_graph()
            for h in targets:
                f = make_assignment(g, h)
                self.assertThat(
                    rayleigh_quotient(g, apsp(h), f), Equals(direct_quotient(g, h, f))
                )


class TestRayleighErrors(TestCase):
    def test_constant_assignment(self):
        self.assertRaises(
            DomainError, rayleigh_quotient, path(3), apsp(complete(2)), (1, 1, 1)
        )

    def test_wrong_length(self):
        self.assertRaises(
            DomainError, rayleigh_quotient, path(3), apsp(complete(2)), (0, 1)
        )

    def test_image_out_of_range(self):
        self.assertRaises(
            DomainError, rayleigh_quotient, path(3), apsp(complete(2)), (0, 1, 2)
        )

    def test_disconnected_images(self):
        h = Graph(3, [(0, 1)])
        self.assertRaises(DomainError, rayleigh_quotient, path(3), apsp(h), (0, 1, 2))

    def test_zero_denominator(self):
        g = Graph(3, [(0, 1)])
        error = self.assertRaises(
            ZeroDenominator, rayleigh_quotient, g, apsp(complete(2)), (0, 0, 1)
        )
        self.assertIsInstance(error, DomainError)
