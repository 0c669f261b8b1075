"""Shortest-path metrics of graphs."""

__all__ = ["apsp", "DistanceMatrix", "UNREACHABLE"]

from collections import deque
import math
import typing

import numpy as np

from .graph import Graph


#: Stored in place of the distance between vertices in different components.
UNREACHABLE = -1


class DistanceMatrix:
    """All-pairs hop distances of a graph, read-only.

    Entries are non-negative integers; pairs in different components hold
    `UNREACHABLE`, which `distance` reports as ``math.inf``.
    """

    __slots__ = ("_dist", "_squared")

    def __init__(self, dist):
        dist = np.array(dist, dtype=np.int64)
        if dist.ndim != 2 or dist.shape[0] != dist.shape[1]:
            raise ValueError("A distance matrix must be square.")
        dist.flags.writeable = False
        squared = np.where(dist == UNREACHABLE, UNREACHABLE, dist * dist)
        squared.flags.writeable = False
        self._dist = dist
        self._squared = squared

    @property
    def k(self) -> int:
        """The number of points."""
        return self._dist.shape[0]

    @property
    def dist(self) -> np.ndarray:
        return self._dist

    @property
    def squared(self) -> np.ndarray:
        """Squared distances; unreachable pairs still hold `UNREACHABLE`."""
        return self._squared

    @property
    def diameter(self) -> int:
        """The largest finite distance (0 for fewer than two points)."""
        if self.k == 0:
            return 0
        return int(self._dist.max(initial=0))

    def distance(self, i, j):
        value = int(self._dist[i, j])
        return math.inf if value == UNREACHABLE else value

    def is_connected(self) -> bool:
        return not bool((self._dist == UNREACHABLE).any())

    def rows(self) -> typing.List[typing.Tuple[int, ...]]:
        return [tuple(int(x) for x in row) for row in self._dist]

    def __eq__(self, other):
        if not isinstance(other, DistanceMatrix):
            return NotImplemented
        return np.array_equal(self._dist, other._dist)

    def __hash__(self):
        return hash(self._dist.tobytes())

    def __repr__(self):
        return "<%s k=%d diameter=%d>" % (
            self.__class__.__name__,
            self.k,
            self.diameter,
        )


def _bfs(graph: Graph, source: int) -> typing.List[int]:
    distances = [UNREACHABLE] * graph.n
    distances[source] = 0
    queue = deque([source])
    adjacency = graph.adjacency
    while queue:
        u = queue.popleft()
        for v in adjacency[u]:
            if distances[v] == UNREACHABLE:
                distances[v] = distances[u] + 1
                queue.append(v)
    return distances


def apsp(graph: Graph) -> DistanceMatrix:
    """Breadth-first search from every vertex of `graph`."""
    rows = [_bfs(graph, source) for source in graph.vertices]
    return DistanceMatrix(np.array(rows, dtype=np.int64).reshape(graph.n, graph.n))
