"""Searches for witnesses that the gap is not monotone in either graph.

Three operations are scanned: adding one edge to `g`, adding a vertex joined
to every vertex of `g`, and enlarging the target graph to one that contains
it as a subgraph (up to relabelling). Every strict change is a witness.
"""

__all__ = [
    "edge_chain",
    "embeds",
    "MonotonicWitness",
    "search_apex",
    "search_edge_addition",
    "search_monotonic",
    "search_target",
]

from collections import namedtuple
from fractions import Fraction
from itertools import permutations
import logging
import typing

from ..bounds import make_gap
from ..errors import BudgetExceeded, PreconditionError, UndefinedGap
from ..graph_core import add_apex, add_edge, Graph
from .corpus import graph_label


logger = logging.getLogger(__name__)

OPERATIONS = ("edge", "apex", "target")


_MonotonicWitnessBase = namedtuple(
    "MonotonicWitness",
    ("operation", "before", "after", "h", "value_before", "value_after"),
)


class MonotonicWitness(_MonotonicWitnessBase):
    """A strict change of the gap under one operation.

    For ``edge`` and ``apex`` the graph changes and `h` is fixed; for
    ``target`` `before` and `after` name the two targets and `h` names the
    source graph.
    """

    __slots__ = ()

    @property
    def direction(self) -> str:
        return "increase" if self.value_after > self.value_before else "decrease"

    @property
    def ratio(self) -> Fraction:
        return self.value_after / self.value_before


def _value(gap, g, h):
    try:
        return gap(g, h)
    except (BudgetExceeded, UndefinedGap) as error:
        logger.debug("Skipping %r into %r: %s", g, h, error)
        return None


def _witness(operation, before, after, h, value_before, value_after):
    if value_before is None or value_after is None or value_before == value_after:
        return None
    return MonotonicWitness(operation, before, after, h, value_before, value_after)


def search_edge_addition(
    graphs: typing.Iterable[Graph], h: Graph, h_label: str, *, gap=None
) -> typing.List[MonotonicWitness]:
    """Compare every graph with each of its one-edge supergraphs."""
    gap = make_gap() if gap is None else gap
    witnesses = []
    for g in graphs:
        before = _value(gap, g, h)
        if before is None:
            continue
        for u, v in g.non_edges():
            g_plus = add_edge(g, u, v)
            found = _witness(
                "edge",
                graph_label(g),
                graph_label(g_plus),
                h_label,
                before,
                _value(gap, g_plus, h),
            )
            if found is not None:
                witnesses.append(found)
    return witnesses


def search_apex(
    graphs: typing.Iterable[Graph], h: Graph, h_label: str, *, gap=None
) -> typing.List[MonotonicWitness]:
    """Compare every graph with the graph plus one vertex adjacent to all."""
    gap = make_gap() if gap is None else gap
    witnesses = []
    for g in graphs:
        g_plus = add_apex(g)
        found = _witness(
            "apex",
            graph_label(g),
            graph_label(g_plus),
            h_label,
            _value(gap, g, h),
            _value(gap, g_plus, h),
        )
        if found is not None:
            witnesses.append(found)
    return witnesses


def embeds(small: Graph, big: Graph) -> typing.Optional[typing.Tuple[int, ...]]:
    """An injective map of `small` into `big` that keeps every edge, or `None`."""
    if small.n > big.n or small.m > big.m:
        return None
    edges = small.sorted_edges()
    for mapping in permutations(range(big.n), small.n):
        if all(big.has_edge(mapping[u], mapping[v]) for u, v in edges):
            return mapping
    return None


def search_target(
    graphs: typing.Iterable[Graph],
    h_list: typing.Sequence[typing.Tuple[str, Graph]],
    *,
    gap=None
) -> typing.List[MonotonicWitness]:
    """Compare targets that contain one another, for every source graph."""
    gap = make_gap() if gap is None else gap
    nested = [
        (small, big)
        for small, big in permutations(h_list, 2)
        if small[1] != big[1] and embeds(small[1], big[1]) is not None
    ]
    witnesses = []
    for g in graphs:
        for (small_label, small), (big_label, big) in nested:
            found = _witness(
                "target",
                small_label,
                big_label,
                graph_label(g),
                _value(gap, g, small),
                _value(gap, g, big),
            )
            if found is not None:
                witnesses.append(found)
    return witnesses


def search_monotonic(
    graphs: typing.Sequence[Graph],
    h_list: typing.Sequence[typing.Tuple[str, Graph]],
    operations: typing.Iterable[str] = OPERATIONS,
    *,
    gap=None
) -> typing.List[MonotonicWitness]:
    """Run the requested searches over every graph and target."""
    gap = make_gap() if gap is None else gap
    operations = set(operations)
    unknown = operations - set(OPERATIONS)
    if unknown:
        raise PreconditionError(
            "Unknown operation(s): %s." % ", ".join(sorted(unknown))
        )
    witnesses = []
    for label, h in h_list:
        if "edge" in operations:
            witnesses.extend(search_edge_addition(graphs, h, label, gap=gap))
        if "apex" in operations:
            witnesses.extend(search_apex(graphs, h, label, gap=gap))
    if "target" in operations:
        witnesses.extend(search_target(graphs, h_list, gap=gap))
    logger.info("Found %d witness(es).", len(witnesses))
    return witnesses


def edge_chain(
    start: Graph, target: Graph, h: Graph, h_label: str, *, gap=None
) -> typing.Tuple[
    typing.List[typing.Tuple[typing.Tuple[int, int], Fraction]],
    typing.Optional[MonotonicWitness],
]:
    """Add the edges of `target` missing from `start` in lexicographic order.

    Returns the value after every step, led by ``(None, lambda(start))``, and
    the first step at which the gap strictly increases.
    """
    if start.n != target.n or not start.edges <= target.edges:
        raise PreconditionError(
            "%r is not a spanning subgraph of %r." % (start, target)
        )
    gap = make_gap() if gap is None else gap
    current = start
    previous = gap(current, h)
    steps = [(None, previous)]
    first_increase = None
    for u, v in sorted(target.edges - start.edges):
        grown = add_edge(current, u, v)
        value = gap(grown, h)
        steps.append(((u, v), value))
        if first_increase is None and value > previous:
            first_increase = MonotonicWitness(
                "edge",
                graph_label(current),
                graph_label(grown),
                h_label,
                previous,
                value,
            )
        current, previous = grown, value
    return steps, first_increase
