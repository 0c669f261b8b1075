"""Testing framework for `metricgap`."""

__all__ = [
    "make_assignment",
    "make_connected_graph",
    "make_graph",
    "TestCase",
]

from itertools import combinations
from pathlib import Path
import random
from unittest import mock

from fixtures import TempDir
import testscenarios
from testtools import testcase

from ..graph_core import Graph
from ..utils.gap_async import Asynchronous


def make_graph(n=None, edge_prob=0.5):
    """Make a random graph, on 2 to 7 vertices unless `n` is given."""
    n = random.randint(2, 7) if n is None else n
    return Graph(
        n, (pair for pair in combinations(range(n), 2) if random.random() < edge_prob)
    )


def make_connected_graph(n=None, edge_prob=0.5):
    """Make a random connected graph.

    A random spanning tree is laid down first, so every draw is connected.
    """
    n = random.randint(2, 7) if n is None else n
    order = random.sample(range(n), n)
    tree = {
        tuple(sorted((order[i], order[random.randrange(i)]))) for i in range(1, n)
    }
    return Graph(n, tree | make_graph(n, edge_prob).edges)


def make_assignment(g, h):
    """Make a random nonconstant assignment of the vertices of `g` into `h`."""
    if h.n < 2 or g.n < 2:
        raise ValueError("A nonconstant assignment needs two vertices on each side.")
    while True:
        f = tuple(random.randrange(h.n) for _ in g.vertices)
        if len(set(f)) > 1:
            return f


class WithScenarios(testscenarios.WithScenarios):
    """Variant of testscenarios_' that provides ``__call__``."""

    def __call__(self, result=None):
        if self._get_scenarios():
            for test in testscenarios.generate_scenarios(self):
                test.__call__(result)
        else:
            super(WithScenarios, self).__call__(result)


class TestCase(WithScenarios, testcase.TestCase, metaclass=Asynchronous):
    """Base test case class for all of python-metricgap.

    Asynchronous test methods are run to completion on a fresh event loop.
    """

    def makeDir(self):
        """Create a temporary directory.

        This creates a new temporary directory. This will be removed during
        test tear-down.

        :return: The path to the directory, as a `pathlib.Path`.
        """
        tempdir = self.useFixture(TempDir())
        return Path(tempdir.path)

    def makeFile(self, name="metricgap.yaml", contents=None, location=None):
        """Create a file, and write data to it.

        :param name: Name for the file; optional, a config file by default.
        :param contents: Contents for the file, as bytes; optional. If
            omitted, an empty file is written.
        :param location: Path to a directory; optional. If omitted, a new
            temporary directory will be created with `makeDir`.

        :return: The path to the file, as a `pathlib.Path`.
        """
        location = self.makeDir() if location is None else Path(location)
        filepath = location.joinpath(name)
        filepath.write_bytes(b"" if contents is None else contents)
        return filepath

    def patch(self, obj, attribute, value=mock.sentinel.unset):
        """Patch `obj.attribute` with `value`.

        If `value` is unspecified, a new `Mock` will be created and patched-in
        instead. Its ``__name__`` attribute will be set to `attribute`.

        :return: The patched-in object.
        """
        if value is mock.sentinel.unset:
            value = mock.Mock(__name__=attribute)
        super(TestCase, self).patch(obj, attribute, value)
        return value
