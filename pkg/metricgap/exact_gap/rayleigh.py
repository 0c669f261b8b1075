"""The Rayleigh-type quotient of an assignment ``f: V(G) -> V(H)``.

For an assignment `f` the quotient is::

    vol(G) * sum over edges {u, v} of d(f(u), f(v))^2
    ---------------------------------------------------------------
    sum over unordered pairs {u, v} of d(f(u), f(v))^2 * d_u * d_v

Both sums run over unordered pairs. Every term is an integer when the target
metric is a graph, so values are exact `Fraction` instances.
"""

__all__ = [
    "GapResult",
    "lambda_upper_witness",
    "rayleigh_quotient",
    "rayleigh_terms",
]

from collections import namedtuple
from fractions import Fraction
import typing

from ..errors import DomainError, ZeroDenominator
from ..graph_core import apsp, DistanceMatrix, Graph, UNREACHABLE


GapResult = namedtuple(
    "GapResult",
    (
        "value",
        "witness",
        "assignments_evaluated",
        "assignments_skipped_zero_denominator",
    ),
)
GapResult.__doc__ = """\
The exact minimum of the quotient, an assignment attaining it, and how many
nonconstant assignments were evaluated or skipped for a zero denominator.
"""


def _check_assignment(g: Graph, dist: DistanceMatrix, f):
    f = tuple(int(image) for image in f)
    if len(f) != g.n:
        raise DomainError(
            "Assignment has %d images for a graph with %d vertices." % (len(f), g.n), f
        )
    for image in f:
        if not 0 <= image < dist.k:
            raise DomainError("Image %d is outside 0..%d." % (image, dist.k - 1), f)
    if len(set(f)) < 2:
        raise DomainError("The quotient is undefined for a constant assignment.", f)
    return f


def rayleigh_terms(g: Graph, dist: DistanceMatrix, f) -> typing.Tuple[int, int]:
    """Return the edge sum and the pair sum of the quotient of `f`.

    The edge sum is not yet multiplied by ``vol(G)``.

    :raise DomainError: if `f` is constant, malformed, or maps two vertices
        into different components of the target.
    """
    f = _check_assignment(g, dist, f)
    squared = dist.squared
    degrees = g.degrees

    def sq(u, v):
        value = int(squared[f[u], f[v]])
        if value == UNREACHABLE:
            raise DomainError(
                "Vertices %d and %d map to disconnected points %d and %d."
                % (u, v, f[u], f[v]),
                f,
            )
        return value

    numerator = sum(sq(u, v) for u, v in g.edges)
    denominator = sum(
        sq(u, v) * degrees[u] * degrees[v]
        for u in range(g.n)
        for v in range(u + 1, g.n)
    )
    return numerator, denominator


def rayleigh_quotient(g: Graph, dist: DistanceMatrix, f) -> Fraction:
    """The exact quotient of the assignment `f` of `g` into `dist`.

    :raise ZeroDenominator: if every pair with distinct images involves a
        vertex of degree zero.
    """
    numerator, denominator = rayleigh_terms(g, dist, f)
    if denominator == 0:
        raise ZeroDenominator(
            "Every separated pair of %r involves an isolated vertex." % (f,), f
        )
    return Fraction(g.volume * numerator, denominator)


def lambda_upper_witness(g: Graph, h: Graph, f) -> Fraction:
    """Certify ``lambda(g, h) <= R_f`` without a search by returning ``R_f``."""
    return rayleigh_quotient(g, apsp(h), f)
