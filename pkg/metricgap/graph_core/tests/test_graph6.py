"""Tests for `metricgap.graph_core.graph6`."""

import networkx as nx
from testtools.matchers import Equals, MatchesStructure

from ...errors import GraphParseError, UnsupportedSize
from ...testing import make_graph, TestCase
from ..families import complete, path
from ..graph import Graph
from ..graph6 import from_json, parse_graph, parse_graph6, to_graph6, to_json


class TestGraph6(TestCase):

    scenarios = (
        ("K2", dict(text="A_", graph=complete(2))),
        ("P3", dict(text="Bg", graph=path(3))),
        ("K3", dict(text="Bw", graph=complete(3))),
        ("empty5", dict(text="D??", graph=Graph(5))),
        ("K1", dict(text="@", graph=Graph(1))),
    )

    def test__parse(self):
        self.assertThat(parse_graph6(self.text), Equals(self.graph))

    def test__encode(self):
        self.assertThat(to_graph6(self.graph), Equals(self.text))

    def test__parse_with_header(self):
        self.assertThat(parse_graph6(">>graph6<<" + self.text), Equals(self.graph))


class TestGraph6Oracle(TestCase):
    def test__decoding_agrees_with_networkx(self):
        for _ in range(30):
            graph = make_graph()
            text = to_graph6(graph)
            oracle = nx.from_graph6_bytes(text.encode("ascii"))
            self.assertThat(oracle.number_of_nodes(), Equals(graph.n))
            self.assertThat(
                {tuple(sorted(edge)) for edge in oracle.edges()},
                Equals(set(graph.edges)),
            )


class TestGraph6Errors(TestCase):
    def test__empty_string(self):
        error = self.assertRaises(GraphParseError, parse_graph6, "")
        self.assertThat(error, MatchesStructure.byEquality(offset=0))

    def test__character_out_of_range_reports_offset(self):
        error = self.assertRaises(GraphParseError, parse_graph6, "B!")
        self.assertThat(error, MatchesStructure.byEquality(offset=1))

    def test__wrong_length(self):
        self.assertRaises(GraphParseError, parse_graph6, "D?")

    def test__nonzero_padding(self):
        # K2 uses one of six bits; "`" also sets the last padding bit.
        self.assertRaises(GraphParseError, parse_graph6, "A`")

    def test__long_form_is_unsupported(self):
        self.assertRaises(GraphParseError, parse_graph6, "~??~")

    def test__encoding_too_large(self):
        self.assertRaises(UnsupportedSize, to_graph6, Graph(63))


class TestJSON(TestCase):
    def test__decode(self):
        graph = from_json('{"n": 3, "edges": [[0, 1], [1, 2]]}')
        self.assertThat(graph, Equals(path(3)))

    def test__encode_sorts_edges(self):
        self.assertThat(
            to_json(Graph(3, [(1, 2), (0, 1)])),
            Equals('{"n": 3, "edges": [[0, 1], [1, 2]]}'),
        )

    def test__missing_n(self):
        self.assertRaises(GraphParseError, from_json, '{"edges": []}')

    def test__bad_edges(self):
        self.assertRaises(GraphParseError, from_json, '{"n": 2, "edges": [[0]]}')

    def test__edge_out_of_range(self):
        self.assertRaises(GraphParseError, from_json, '{"n": 2, "edges": [[0, 2]]}')

    def test__invalid_json(self):
        self.assertRaises(GraphParseError, from_json, "{")

    def test__parse_graph_dispatches(self):
        text = ' {"n": 2, "edges": [[0, 1]]}'
        self.assertThat(parse_graph(text), Equals(complete(2)))
        self.assertThat(parse_graph("A_"), Equals(complete(2)))
