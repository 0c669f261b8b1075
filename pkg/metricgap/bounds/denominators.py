"""Bounds on the denominator of the quotient, via volume class vectors."""

__all__ = [
    "brute_force_max",
    "denominator_bounds",
    "feasible_vectors",
    "opt_lemma_max",
]

from fractions import Fraction
import typing

from ..enum import BoundDirection
from ..errors import PreconditionError
from ..exact_gap import rayleigh_terms
from ..graph_core import apsp, Graph
from .report import BoundReport, check, not_applicable, VolumeClassVector


def opt_lemma_max(C: int, k: int) -> int:
    """The largest ``||x||^2`` over feasible vectors with total `C`.

    A vector is feasible when its `k` entries are non-negative integers
    summing to `C` with at least two of them positive. The maximum,
    ``C^2 - 2C + 2``, is attained at ``(C - 1, 1, 0, ...)`` for any `k`.
    """
    if k < 2:
        raise PreconditionError("Feasible vectors need k >= 2, got %d." % k)
    if C < 6:
        raise PreconditionError("The bound is stated for C >= 6, got %d." % C)
    return C * C - 2 * C + 2


def feasible_vectors(C: int, k: int) -> typing.Iterator[VolumeClassVector]:
    """Every feasible vector of length `k` with total `C`."""

    def compositions(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    for entries in compositions(C, k):
        vector = VolumeClassVector(entries)
        if vector.is_feasible():
            yield vector


def brute_force_max(C: int, k: int) -> typing.Tuple[int, VolumeClassVector]:
    """The largest ``||x||^2`` found by scanning `feasible_vectors`.

    The first maximiser in scan order is returned alongside the value.
    """
    best = None
    for vector in feasible_vectors(C, k):
        if best is None or vector.norm_squared > best[0]:
            best = (vector.norm_squared, vector)
    if best is None:
        raise PreconditionError("No feasible vector for C=%d, k=%d." % (C, k))
    return best


def denominator_bounds(
    g: Graph, h: Graph, f
) -> typing.Tuple[BoundReport, BoundReport]:
    """Check ``vol(G) - 1 <= denominator <= vol(G)^2 D_H^2 (1 - 1/k) / 2``.

    The lower bound needs ``vol(G) >= 6`` and is otherwise reported as not
    applicable.
    """
    if not g.is_connected() or not h.is_connected():
        raise PreconditionError("Both graphs must be connected.", (g, h))
    dist = apsp(h)
    _, denominator = rayleigh_terms(g, dist, f)
    volume = g.volume
    if volume >= 6:
        lower = check(
            "denominator_lower",
            BoundDirection.LOWER,
            volume - 1,
            denominator,
        )
    else:
        lower = not_applicable(
            "denominator_lower", BoundDirection.LOWER, "vol(G) = %d < 6" % volume
        )
    upper = check(
        "denominator_upper",
        BoundDirection.UPPER,
        Fraction(volume * volume * dist.diameter ** 2, 2) * (1 - Fraction(1, h.n)),
        denominator,
    )
    return lower, upper
