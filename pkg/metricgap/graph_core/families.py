"""Named graph families with deterministic labellings.

Every generator documents its labelling so that assignments quoted against
it (e.g. "map the first half to 0") are reproducible.
"""

__all__ = [
    "balanced_bipartite_plus_matching",
    "complete",
    "complete_bipartite",
    "complete_minus_edge",
    "complete_multipartite",
    "cycle",
    "dumbbell",
    "empty",
    "generate",
    "parse_family",
    "path",
    "red_clique_bipartite",
    "red_count",
    "regularized_dumbbell",
    "star",
]

from itertools import combinations
import math

from ..enum import FamilyName
from ..errors import ConstructionError
from .graph import Graph


def _require(condition, message, *args):
    if not condition:
        raise ConstructionError(message % args)


def empty(n: int) -> Graph:
    _require(n >= 0, "empty(n) needs n >= 0, got %d.", n)
    return Graph(n)


def complete(n: int) -> Graph:
    _require(n >= 1, "complete(n) needs n >= 1, got %d.", n)
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """Parts ``0 .. a-1`` and ``a .. a+b-1``."""
    _require(a >= 1 and b >= 1, "complete_bipartite needs both parts >= 1.")
    return Graph(a + b, ((u, v) for u in range(a) for v in range(a, a + b)))


def complete_multipartite(n: int, j: int) -> Graph:
    """`j` parts of `n` vertices each; part ``p`` is ``p*n .. (p+1)*n - 1``."""
    _require(n >= 1 and j >= 1, "complete_multipartite needs n >= 1 and j >= 1.")
    return Graph(
        n * j,
        (
            (u, v)
            for u, v in combinations(range(n * j), 2)
            if u // n != v // n
        ),
    )


def path(n: int) -> Graph:
    """``0 - 1 - ... - n-1``."""
    _require(n >= 1, "path(n) needs n >= 1, got %d.", n)
    return Graph(n, ((v, v + 1) for v in range(n - 1)))


def cycle(n: int) -> Graph:
    """``0 - 1 - ... - n-1 - 0``."""
    _require(n >= 3, "cycle(n) needs n >= 3, got %d.", n)
    return Graph(n, [(v, v + 1) for v in range(n - 1)] + [(0, n - 1)])


def star(leaves: int) -> Graph:
    """Centre 0 joined to ``1 .. leaves``."""
    _require(leaves >= 1, "star needs at least one leaf.")
    return complete_bipartite(1, leaves)


def complete_minus_edge(n: int) -> Graph:
    """``K_n`` without the edge ``{0, 1}``."""
    _require(n >= 2, "complete_minus_edge(n) needs n >= 2, got %d.", n)
    return Graph(n, (edge for edge in combinations(range(n), 2) if edge != (0, 1)))


def dumbbell(n: int) -> Graph:
    """Two copies of ``K_{n/2}`` joined by one edge.

    The halves are ``0 .. n/2-1`` and ``n/2 .. n-1``; the bridge is
    ``{n/2-1, n/2}``.
    """
    _require(n >= 2 and n % 2 == 0, "dumbbell(n) needs an even n >= 2, got %d.", n)
    half = n // 2
    edges = list(combinations(range(half), 2))
    edges += list(combinations(range(half, n), 2))
    edges.append((half - 1, half))
    return Graph(n, edges)


def regularized_dumbbell(n: int) -> Graph:
    """The degree-balanced dumbbell; ``(n/2 - 1)``-regular.

    Starting from two copies of ``K_{n/2}`` (halves as in `dumbbell`), the
    edges ``{0, 1}`` and ``{n/2, n/2+1}`` are deleted and replaced by the
    cross edges ``{0, n/2}`` and ``{1, n/2+1}``.
    """
    _require(
        n >= 6 and n % 2 == 0,
        "regularized_dumbbell(n) needs an even n >= 6, got %d.",
        n,
    )
    half = n // 2
    deleted = {(0, 1), (half, half + 1)}
    edges = [
        edge
        for edge in list(combinations(range(half), 2))
        + list(combinations(range(half, n), 2))
        if edge not in deleted
    ]
    edges += [(0, half), (1, half + 1)]
    return Graph(n, edges)


def balanced_bipartite_plus_matching(n: int) -> Graph:
    """``K_{n,n}`` plus a perfect matching inside each side; ``(n+1)``-regular.

    Sides are ``0 .. n-1`` and ``n .. 2n-1``; the added edges are
    ``{0,1}, {2,3}, ..., {n,n+1}, ..., {2n-2,2n-1}``.
    """
    _require(
        n >= 2 and n % 2 == 0,
        "balanced_bipartite_plus_matching(n) needs an even n >= 2, got %d.",
        n,
    )
    edges = list(complete_bipartite(n, n).edges)
    edges += [(v, v + 1) for v in range(0, 2 * n, 2)]
    return Graph(2 * n, edges)


def red_clique_bipartite(n: int, r: int) -> Graph:
    """``K_{n,n}`` with a clique on the `r` red vertices of each side.

    Sides are ``0 .. n-1`` and ``n .. 2n-1``; the red vertices are the
    first `r` of each side, ``0 .. r-1`` and ``n .. n+r-1``.
    """
    _require(n >= 1, "red_clique_bipartite needs n >= 1, got %d.", n)
    _require(1 <= r <= n, "red_clique_bipartite needs 1 <= r <= n, got r=%d.", r)
    edges = list(complete_bipartite(n, n).edges)
    edges += list(combinations(range(r), 2))
    edges += list(combinations(range(n, n + r), 2))
    return Graph(2 * n, edges)


def red_count(n: int, epsilon: float) -> int:
    """The number of red vertices ``n^(1 - epsilon/2)``, if it is an integer."""
    value = n ** (1 - epsilon / 2)
    nearest = round(value)
    _require(
        math.isclose(value, nearest, rel_tol=0, abs_tol=1e-9),
        "n^(1-epsilon/2) = %r is not an integer for n=%d, epsilon=%r.",
        value,
        n,
        epsilon,
    )
    return int(nearest)


_GENERATORS = {
    FamilyName.EMPTY: (empty, 1),
    FamilyName.COMPLETE: (complete, 1),
    FamilyName.COMPLETE_BIPARTITE: (complete_bipartite, 2),
    FamilyName.COMPLETE_MULTIPARTITE: (complete_multipartite, 2),
    FamilyName.PATH: (path, 1),
    FamilyName.CYCLE: (cycle, 1),
    FamilyName.STAR: (star, 1),
    FamilyName.COMPLETE_MINUS_EDGE: (complete_minus_edge, 1),
    FamilyName.DUMBBELL: (dumbbell, 1),
    FamilyName.REGULARIZED_DUMBBELL: (regularized_dumbbell, 1),
    FamilyName.BALANCED_BIPARTITE_PLUS_MATCHING: (
        balanced_bipartite_plus_matching,
        1,
    ),
    FamilyName.RED_CLIQUE_BIPARTITE: (red_clique_bipartite, 2),
}


def generate(family, *params: int) -> Graph:
    """Build a member of `family` (a `FamilyName` or its value)."""
    try:
        family = FamilyName(str(family))
    except ValueError:
        raise ConstructionError("Unknown graph family %r." % (family,))
    generator, arity = _GENERATORS[family]
    _require(
        len(params) == arity,
        "%s takes %d parameter(s), got %d.",
        family.value,
        arity,
        len(params),
    )
    return generator(*params)


def parse_family(text: str) -> Graph:
    """Build a graph from ``name:param[:param]``, e.g. ``path:3``."""
    name, *params = text.split(":")
    try:
        numbers = [int(param) for param in params]
    except ValueError:
        raise ConstructionError("Family parameters must be integers: %r." % text)
    return generate(name, *numbers)
