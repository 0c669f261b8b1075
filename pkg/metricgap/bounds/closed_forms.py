"""Closed-form quotients for the structured examples.

Each function returns the exact value of the quotient of a specific
assignment, written in terms of the counts that determine it. They serve as
cross-checks against direct evaluation.
"""

__all__ = [
    "dumbbell_cut_value",
    "dumbbell_naive_bound",
    "kn_minus_edge_quotient",
    "multipartite_k2_quotient",
    "red_clique_added_fraction",
    "regularized_dumbbell_cut_bound",
    "same_side_edge_value",
]

from fractions import Fraction
import typing

from ..errors import PreconditionError


def multipartite_k2_quotient(n: int, j: int, x: typing.Sequence[int]) -> Fraction:
    """The quotient on ``K_{n,j}`` when ``x[i]`` vertices of part ``i`` map to 0.

    The rest map to 1. Defined when ``0 < sum(x) < n * j``.
    """
    if len(x) != j or any(not 0 <= xi <= n for xi in x):
        raise PreconditionError("Need j counts in 0..n, got %r." % (x,))
    total = sum(x)
    if not 0 < total < n * j:
        raise PreconditionError("The assignment %r is constant." % (x,))
    cross = (total * total - sum(xi * xi for xi in x)) // 2
    numerator = n * j * total - Fraction(2 * j, j - 1) * cross
    return numerator / (n * j * total - total * total)


def same_side_edge_value(n: int) -> Fraction:
    """``(n^3 - n^2 + n - 1) / (n^3 - n^2 + n)``, below 1 for ``n >= 3``.

    The quotient on ``K_{n,n}`` plus one edge inside a side, for the
    assignment that sends one vertex of each side off the added edge to 0
    and everything else to 1.
    """
    if n < 3:
        raise PreconditionError("The construction needs n >= 3, got %d." % n)
    return Fraction(n ** 3 - n ** 2 + n - 1, n ** 3 - n ** 2 + n)


def kn_minus_edge_quotient(n: int, x: int, y: int, *, together: bool) -> Fraction:
    """The quotient on ``K_n`` minus ``{0, 1}`` into ``K_2``.

    `x` and `y` count the other vertices mapped to 0 and to 1. With
    `together`, vertices 0 and 1 both map to 0; otherwise 0 maps to 0 and 1
    maps to 1.
    """
    if n < 3 or x < 0 or y < 0 or x + y != n - 2:
        raise PreconditionError("Need n >= 3 and x + y = n - 2.")
    scale = n * (n - 1) - 2
    if together:
        if y == 0:
            raise PreconditionError("Every vertex maps to 0.")
        return Fraction(
            scale * (x * y + 2 * y),
            x * y * (n - 1) ** 2 + 2 * y * (n - 1) * (n - 2),
        )
    return Fraction(
        scale * (x * y + x + y),
        x * (n - 1) * (n - 2)
        + (n - 2) ** 2
        + x * y * (n - 1) ** 2
        + y * (n - 1) * (n - 2),
    )


def dumbbell_cut_value(n: int) -> Fraction:
    """The quotient of the dumbbell cut into ``K_2``."""
    half = n // 2
    return Fraction(
        n * (half - 1) + 2,
        (half - 1) ** 4 + n * (half - 1) ** 2 + half ** 2,
    )


def dumbbell_naive_bound(n: int) -> Fraction:
    """The naive lower bound ``4 / vol`` for the dumbbell into ``K_2``."""
    return Fraction(4, n * (n // 2 - 1) + 2)


def regularized_dumbbell_cut_bound(n: int) -> Fraction:
    """``8 / (n d)`` with ``d = n/2 - 1``; bounds the regularised dumbbell cut."""
    return Fraction(8, n * (n // 2 - 1))


def red_clique_added_fraction(n: int, r: int) -> Fraction:
    """The share of missing edges of ``K_{n,n}`` that the red cliques add."""
    return Fraction(r * (r - 1), n * (n - 1))
