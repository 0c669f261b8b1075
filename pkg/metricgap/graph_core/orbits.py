"""Vertex orbits of a graph's automorphism group.

The exact search only needs to try one image per orbit for its first vertex,
so small metric graphs get their orbits computed exactly by backtracking over
distance-preserving vertex permutations. Larger graphs fall back to
singleton orbits, which is always sound.
"""

__all__ = ["MAX_ORBIT_ORDER", "OrbitPartition", "vertex_orbits"]

import logging
import typing

from .distances import apsp
from .graph import Graph


logger = logging.getLogger(__name__)

#: Largest graph whose orbits are computed exactly.
MAX_ORBIT_ORDER = 10


class OrbitPartition(tuple):
    """Orbit ids per vertex; each id is the smallest vertex of its orbit."""

    __slots__ = ()

    def __new__(
        cls,
        representative: typing.Sequence[int],
        *,
        exact: bool = True,
        generators: typing.Iterable[typing.Sequence[int]] = ()
    ):
        return super(OrbitPartition, cls).__new__(
            cls,
            (
                tuple(representative),
                bool(exact),
                tuple(tuple(generator) for generator in generators),
            ),
        )

    @property
    def representative(self) -> typing.Tuple[int, ...]:
        return self[0]

    @property
    def exact(self) -> bool:
        """False when the size limit forced singleton orbits."""
        return self[1]

    @property
    def generators(self) -> typing.Tuple[typing.Tuple[int, ...], ...]:
        """Automorphisms found while merging orbits, as image tuples."""
        return self[2]

    def representatives(self) -> typing.List[int]:
        """One vertex per orbit, ascending."""
        return sorted(set(self.representative))

    def orbits(self) -> typing.List[typing.FrozenSet[int]]:
        groups = {}
        for vertex, orbit in enumerate(self.representative):
            groups.setdefault(orbit, set()).add(vertex)
        return [frozenset(groups[orbit]) for orbit in sorted(groups)]

    def __repr__(self):
        return "<%s %s%s>" % (
            self.__class__.__name__,
            " ".join(
                "{%s}" % ",".join(map(str, sorted(orbit))) for orbit in self.orbits()
            ),
            "" if self.exact else " (singletons)",
        )


def _search_automorphism(dist, keys, order, source, target):
    """Find a distance-preserving permutation sending `source` to `target`."""
    k = len(order)
    mapping = [None] * k
    used = [False] * k
    mapping[source] = target
    used[target] = True

    def extend(position):
        if position == k:
            return True
        x = order[position]
        for y in range(k):
            if used[y] or keys[y] != keys[x]:
                continue
            if all(
                dist[x][z] == dist[y][mapping[z]] for z in order[:position]
            ):
                mapping[x] = y
                used[y] = True
                if extend(position + 1):
                    return True
                mapping[x] = None
                used[y] = False
        return False

    return tuple(mapping) if extend(1) else None


def vertex_orbits(h: Graph) -> OrbitPartition:
    """Compute the orbits of Aut(h) acting on the vertices of `h`."""
    k = h.n
    if k > MAX_ORBIT_ORDER:
        logger.info(
            "Graph has %d vertices (> %d); using singleton orbits.",
            k,
            MAX_ORBIT_ORDER,
        )
        return OrbitPartition(range(k), exact=False)

    dist = apsp(h).rows()
    # Degree and the sorted distance row are both automorphism invariants.
    keys = [(h.degree(v), tuple(sorted(dist[v]))) for v in range(k)]

    parent = list(range(k))

    def find(v):
        while parent[v] != v:
            v = parent[v]
        return v

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    generators = []
    for source in range(k):
        # Visit vertices nearest to the source first so that distance checks
        # prune early.
        order = sorted(
            range(k),
            key=lambda v: (dist[source][v] if dist[source][v] >= 0 else k, v),
        )
        for target in range(source + 1, k):
            if keys[target] != keys[source] or find(target) == find(source):
                continue
            automorphism = _search_automorphism(dist, keys, order, source, target)
            if automorphism is not None:
                generators.append(automorphism)
                for v, image in enumerate(automorphism):
                    union(v, image)

    return OrbitPartition(
        [find(v) for v in range(k)], exact=True, generators=generators
    )
