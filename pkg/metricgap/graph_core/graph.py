"""Undirected simple graphs on vertices ``0 .. n-1``."""

__all__ = [
    "add_apex",
    "add_edge",
    "components",
    "disjoint_union",
    "Graph",
    "induced_subgraph",
    "remove_edge",
]

from fractions import Fraction
from functools import lru_cache
from math import comb
import typing

from ..errors import EditError


def _normalise_edge(u, v):
    u, v = int(u), int(v)
    return (u, v) if u < v else (v, u)


class Graph(tuple):
    """An immutable undirected simple graph.

    Vertices are the integers ``0 .. n-1``. Edges are stored as a frozenset
    of ``(u, v)`` pairs with ``u < v``; two graphs are equal when they have
    the same order and the same labelled edges.
    """

    __slots__ = ()

    def __new__(cls, n: int, edges: typing.Iterable[typing.Sequence[int]] = ()):
        n = int(n)
        if n < 0:
            raise ValueError("A graph cannot have %d vertices." % n)
        normalised = set()
        for edge in edges:
            u, v = edge
            u, v = _normalise_edge(u, v)
            if u == v:
                raise ValueError("Self-loop at vertex %d." % u)
            if u < 0 or v >= n:
                raise ValueError("Edge (%d, %d) is outside 0..%d." % (u, v, n - 1))
            if (u, v) in normalised:
                raise ValueError("Duplicate edge (%d, %d)." % (u, v))
            normalised.add((u, v))
        return super(Graph, cls).__new__(cls, (n, frozenset(normalised)))

    @property
    def n(self) -> int:
        """The number of vertices."""
        return self[0]

    @property
    def edges(self) -> typing.FrozenSet[typing.Tuple[int, int]]:
        """The edges as ``(u, v)`` pairs with ``u < v``."""
        return self[1]

    @property
    def m(self) -> int:
        """The number of edges."""
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def sorted_edges(self) -> typing.List[typing.Tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, u, v) -> bool:
        return _normalise_edge(u, v) in self.edges

    @property
    def adjacency(self) -> typing.Tuple[typing.FrozenSet[int], ...]:
        return _adjacency(self)

    def neighbours(self, v) -> typing.FrozenSet[int]:
        return self.adjacency[v]

    @property
    def degrees(self) -> typing.Tuple[int, ...]:
        return tuple(len(neighbours) for neighbours in self.adjacency)

    def degree(self, v) -> int:
        return len(self.adjacency[v])

    @property
    def volume(self) -> int:
        """The sum of all degrees, i.e. twice the number of edges."""
        return 2 * self.m

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    @property
    def density(self) -> Fraction:
        """``m / C(n, 2)``; defined for ``n >= 2``."""
        if self.n < 2:
            raise ValueError("Density needs at least two vertices.")
        return Fraction(self.m, comb(self.n, 2))

    @property
    def diameter(self):
        """The largest finite distance; see `DistanceMatrix.diameter`."""
        from .distances import apsp  # Lazy.

        return apsp(self).diameter

    def is_connected(self) -> bool:
        return len(components(self)) <= 1

    def is_complete(self) -> bool:
        return self.m == comb(self.n, 2)

    def is_regular(self) -> bool:
        return len(set(self.degrees)) <= 1

    def regular_degree(self) -> typing.Optional[int]:
        """The common degree, or `None` if the graph is not regular."""
        degrees = set(self.degrees)
        return degrees.pop() if len(degrees) == 1 else None

    def non_edges(self) -> typing.List[typing.Tuple[int, int]]:
        """Missing pairs in lexicographic order."""
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if (u, v) not in self.edges
        ]

    def is_subgraph_of(self, other: "Graph") -> bool:
        """True if every vertex and edge of this graph is also in `other`."""
        return self.n <= other.n and self.edges <= other.edges

    def relabel(self, mapping: typing.Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``mapping[v]``."""
        return Graph(self.n, ((mapping[u], mapping[v]) for u, v in self.edges))

    def __getnewargs__(self):
        return self.n, self.sorted_edges()

    def __repr__(self):
        return "<%s n=%d m=%d>" % (self.__class__.__name__, self.n, self.m)


@lru_cache(maxsize=1024)
def _adjacency(graph):
    adjacency = [set() for _ in range(graph.n)]
    for u, v in graph.edges:
        adjacency[u].add(v)
        adjacency[v].add(u)
    return tuple(frozenset(neighbours) for neighbours in adjacency)


def add_edge(graph: Graph, u, v) -> Graph:
    """Return `graph` with the edge ``{u, v}`` added."""
    u, v = _normalise_edge(u, v)
    if u == v:
        raise EditError("Cannot add a self-loop at %d." % u, graph)
    if u < 0 or v >= graph.n:
        raise EditError("Edge (%d, %d) is outside the graph." % (u, v), graph)
    if (u, v) in graph.edges:
        raise EditError("Edge (%d, %d) is already present." % (u, v), graph)
    return Graph(graph.n, graph.edges | {(u, v)})


def remove_edge(graph: Graph, u, v) -> Graph:
    """Return `graph` with the edge ``{u, v}`` removed."""
    edge = _normalise_edge(u, v)
    if edge not in graph.edges:
        raise EditError("Edge (%d, %d) is not present." % edge, graph)
    return Graph(graph.n, graph.edges - {edge})


def add_apex(graph: Graph) -> Graph:
    """Return `graph` plus a new vertex ``n`` adjacent to every old vertex."""
    apex = graph.n
    return Graph(graph.n + 1, graph.edges | {(v, apex) for v in range(graph.n)})


def disjoint_union(*graphs: Graph) -> Graph:
    """Place `graphs` side by side, relabelling each after the previous."""
    offset, edges = 0, []
    for graph in graphs:
        edges.extend((u + offset, v + offset) for u, v in graph.edges)
        offset += graph.n
    return Graph(offset, edges)


def induced_subgraph(graph: Graph, vertices: typing.Iterable[int]) -> Graph:
    """The subgraph on `vertices`, relabelled ``0 ..`` in ascending order."""
    vertices = sorted(vertices)
    index = {v: i for i, v in enumerate(vertices)}
    return Graph(
        len(vertices),
        (
            (index[u], index[v])
            for u, v in graph.edges
            if u in index and v in index
        ),
    )


def components(graph: Graph) -> typing.List[typing.FrozenSet[int]]:
    """Partition the vertices into maximal connected sets.

    Components are returned ordered by their smallest vertex.
    """
    parent = list(range(graph.n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in graph.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)

    groups = {}
    for v in range(graph.n):
        groups.setdefault(find(v), set()).add(v)
    return [frozenset(groups[root]) for root in sorted(groups)]
