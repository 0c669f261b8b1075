"""Corpora of graphs for verification campaigns and searches.

A corpus is either every labelled graph up to a small order, a named list of
structured families, or a batch of seeded random graphs. Target graphs are
named by short aliases (``K2``, ``C4``, ``K4e``, ...), by family specs
(``family:cycle:5``), by JSON edge lists or by graph6 strings.
"""

__all__ = [
    "CorpusSpec",
    "exhaustive_graphs",
    "family_graphs",
    "graph_label",
    "H_ALIASES",
    "labeled_graphs",
    "MAX_EXHAUSTIVE_ORDER",
    "parse_h_list",
    "random_graphs",
    "read_graph",
]

from itertools import combinations
import logging
import typing

import numpy as np

from ..errors import ConstructionError, PreconditionError
from ..graph_core import Graph, parse_family, parse_graph, to_graph6
from ..graph_core import families


logger = logging.getLogger(__name__)

MAX_EXHAUSTIVE_ORDER = 6

# Redraws allowed per requested graph when only connected graphs are wanted.
MAX_REDRAWS = 1000

H_ALIASES = {
    "K2": lambda: families.complete(2),
    "K3": lambda: families.complete(3),
    "K4": lambda: families.complete(4),
    "K5": lambda: families.complete(5),
    "K6": lambda: families.complete(6),
    "P3": lambda: families.path(3),
    "P4": lambda: families.path(4),
    "C4": lambda: families.cycle(4),
    "K4e": lambda: families.complete_minus_edge(4),
}

FAMILY_LISTS = {
    "worked": (
        ["complete:%d" % n for n in range(2, 9)]
        + [
            "complete_multipartite:%d:%d" % nj
            for nj in ((2, 2), (3, 2), (2, 3), (4, 2), (3, 3))
        ]
        + ["path:%d" % n for n in range(3, 9)]
        + ["cycle:%d" % n for n in range(3, 9)]
        + ["star:%d" % n for n in range(2, 7)]
        + ["complete_minus_edge:%d" % n for n in range(3, 9)]
        + ["dumbbell:%d" % n for n in (6, 8, 10, 12)]
        + ["regularized_dumbbell:%d" % n for n in (6, 8, 10, 12)]
        + ["balanced_bipartite_plus_matching:%d" % n for n in (2, 4)]
    ),
    "small": (
        ["complete:%d" % n for n in range(2, 6)]
        + ["path:%d" % n for n in range(3, 6)]
        + ["cycle:%d" % n for n in range(3, 6)]
        + ["complete_multipartite:2:2", "complete_minus_edge:4", "star:3"]
    ),
}
FAMILY_LISTS["paper"] = FAMILY_LISTS["worked"]


def read_graph(text: str) -> Graph:
    """Decode a graph given as an alias, ``family:...``, JSON or graph6."""
    text = text.strip()
    if text in H_ALIASES:
        return H_ALIASES[text]()
    if text.startswith("family:"):
        return parse_family(text[len("family:") :])
    return parse_graph(text)


def graph_label(graph: Graph) -> str:
    """A stable identifier for `graph`: its graph6 encoding."""
    return to_graph6(graph)


def parse_h_list(text: str) -> typing.List[typing.Tuple[str, Graph]]:
    """Split a comma-separated list of target graphs into ``(label, graph)``."""
    targets = []
    for item in filter(None, (part.strip() for part in text.split(","))):
        targets.append((item, read_graph(item)))
    if not targets:
        raise PreconditionError("At least one target graph is needed.")
    return targets


def labeled_graphs(n: int, *, connected: bool = True) -> typing.Iterator[Graph]:
    """Every labelled graph on ``0 .. n-1``, in edge-mask order."""
    if not 1 <= n <= MAX_EXHAUSTIVE_ORDER:
        raise PreconditionError(
            "Exhaustive enumeration covers 1 <= n <= %d, got %d."
            % (MAX_EXHAUSTIVE_ORDER, n)
        )
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        graph = Graph(n, (pair for bit, pair in enumerate(pairs) if mask >> bit & 1))
        if not connected or graph.is_connected():
            yield graph


def exhaustive_graphs(n_max: int, *, connected: bool = True) -> typing.List[Graph]:
    """`labeled_graphs` for every order from 2 to `n_max`."""
    graphs = []
    for n in range(2, n_max + 1):
        graphs.extend(labeled_graphs(n, connected=connected))
    logger.info("Exhaustive corpus up to n=%d: %d graphs.", n_max, len(graphs))
    return graphs


def family_graphs(names: typing.Sequence[str]) -> typing.List[Graph]:
    """Expand family specs, or the name of a predefined list, into graphs."""
    specs = []
    for name in names:
        specs.extend(FAMILY_LISTS.get(name, [name]))
    return [parse_family(spec) for spec in specs]


def random_graphs(
    n: int, count: int, edge_prob: float, seed: int, *, connected: bool = True
) -> typing.List[Graph]:
    """`count` graphs from ``G(n, edge_prob)`` drawn with a seeded generator.

    With `connected`, disconnected draws are discarded and drawn again.
    """
    if n < 2 or count < 0 or not 0 <= edge_prob <= 1:
        raise PreconditionError(
            "Need n >= 2, count >= 0 and 0 <= p <= 1; got %r."
            % ((n, count, edge_prob),)
        )
    rng = np.random.default_rng(seed)
    pairs = list(combinations(range(n), 2))
    graphs, attempts = [], 0
    while len(graphs) < count:
        attempts += 1
        if attempts > MAX_REDRAWS * max(count, 1):
            raise ConstructionError(
                "No connected graph after %d draws from G(%d, %s)."
                % (attempts - 1, n, edge_prob)
            )
        mask = rng.random(len(pairs)) < edge_prob
        graph = Graph(n, (pair for pair, keep in zip(pairs, mask) if keep))
        if not connected or graph.is_connected():
            graphs.append(graph)
    return graphs


class CorpusSpec(tuple):
    """Which graphs a campaign runs over, and into which targets.

    `mode` is one of ``exhaustive`` (params ``(n_max,)``), ``families``
    (params are family specs or list names) or ``random`` (params
    ``(n, count, edge_prob, seed)``).
    """

    __slots__ = ()

    MODES = ("exhaustive", "families", "random")

    def __new__(cls, mode, params, h_list, connected=True):
        if mode not in cls.MODES:
            raise PreconditionError("Unknown corpus mode %r." % (mode,))
        if mode == "exhaustive":
            (n_max,) = params
            if not 2 <= n_max <= MAX_EXHAUSTIVE_ORDER:
                raise PreconditionError(
                    "Exhaustive corpora need 2 <= n_max <= %d, got %d."
                    % (MAX_EXHAUSTIVE_ORDER, n_max)
                )
        elif mode == "random" and len(params) != 4:
            raise PreconditionError("A random corpus needs (n, count, p, seed).")
        return super(CorpusSpec, cls).__new__(
            cls, (mode, tuple(params), tuple(h_list), bool(connected))
        )

    @property
    def mode(self) -> str:
        return self[0]

    @property
    def params(self) -> tuple:
        return self[1]

    @property
    def h_list(self) -> typing.Tuple[typing.Tuple[str, Graph], ...]:
        return self[2]

    @property
    def connected(self) -> bool:
        return self[3]

    def graphs(self) -> typing.List[Graph]:
        if self.mode == "exhaustive":
            return exhaustive_graphs(self.params[0], connected=self.connected)
        if self.mode == "families":
            return family_graphs(self.params)
        n, count, edge_prob, seed = self.params
        return random_graphs(
            int(n), int(count), float(edge_prob), int(seed), connected=self.connected
        )

    def dump(self) -> dict:
        return {
            "mode": self.mode,
            "params": list(self.params),
            "h": [label for label, _ in self.h_list],
            "connected": self.connected,
        }

    def __getnewargs__(self):
        return self.mode, self.params, self.h_list, self.connected

    def __repr__(self):
        return "<%s %s %r h=%s>" % (
            self.__class__.__name__,
            self.mode,
            self.params,
            ",".join(label for label, _ in self.h_list),
        )
