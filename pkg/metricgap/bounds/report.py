"""Records for bound checks and the volume class vector of an assignment."""

__all__ = [
    "BoundReport",
    "check",
    "make_gap",
    "not_applicable",
    "recorded",
    "VolumeClassVector",
]

from collections import namedtuple
from fractions import Fraction
from functools import lru_cache
import typing

from ..enum import BoundDirection, CheckStatus
from ..exact_gap import lambda_exact
from ..graph_core import Graph
from ..utils.settings import Settings


_BoundReportBase = namedtuple(
    "BoundReport",
    ("name", "direction", "bound_value", "subject_value", "status", "slack", "note"),
)


class BoundReport(_BoundReportBase):
    """One inequality, its two sides, and whether it held.

    `slack` is ``subject_value - bound_value``; it is non-negative for a
    lower bound that holds and non-positive for an upper bound that holds.
    """

    __slots__ = ()

    @property
    def holds(self) -> typing.Optional[bool]:
        """True or False once checked; `None` if not applicable or recorded."""
        if self.status is CheckStatus.PASSED:
            return True
        if self.status is CheckStatus.FAILED:
            return False
        return None

    def __repr__(self):
        return "<%s %s %s subject=%s bound=%s>" % (
            self.__class__.__name__,
            self.name,
            self.status.value,
            self.subject_value,
            self.bound_value,
        )


def _satisfied(direction, subject, bound, strict):
    if direction is BoundDirection.LOWER:
        return subject > bound if strict else subject >= bound
    if direction is BoundDirection.UPPER:
        return subject < bound if strict else subject <= bound
    return subject == bound


def check(
    name: str,
    direction: BoundDirection,
    bound,
    subject,
    *,
    strict: bool = False,
    note: str = ""
) -> BoundReport:
    """Compare `subject` against `bound` in the given direction.

    Fractions compare exactly; `strict` turns ``<=``/``>=`` into ``<``/``>``.
    """
    status = (
        CheckStatus.PASSED
        if _satisfied(direction, subject, bound, strict)
        else CheckStatus.FAILED
    )
    return BoundReport(name, direction, bound, subject, status, subject - bound, note)


def not_applicable(name: str, direction: BoundDirection, reason: str) -> BoundReport:
    return BoundReport(
        name, direction, None, None, CheckStatus.NOT_APPLICABLE, None, reason
    )


def recorded(
    name: str, direction: BoundDirection, bound, subject, note: str = ""
) -> BoundReport:
    """A comparison that is computed and kept but never asserted."""
    slack = None if bound is None or subject is None else subject - bound
    return BoundReport(
        name, direction, bound, subject, CheckStatus.RECORDED, slack, note
    )


class VolumeClassVector(tuple):
    """``vol(f^-1(i))`` for every vertex ``i`` of the target graph."""

    __slots__ = ()

    @classmethod
    def from_assignment(cls, g: Graph, f, k: int):
        volumes = [0] * k
        for vertex, image in enumerate(f):
            volumes[image] += g.degree(vertex)
        return cls(volumes)

    @property
    def total(self) -> int:
        return sum(self)

    @property
    def norm_squared(self) -> int:
        return sum(x * x for x in self)

    def is_feasible(self) -> bool:
        """Non-negative integers with at least two positive entries."""
        return all(x >= 0 for x in self) and sum(1 for x in self if x > 0) >= 2

    def cross_sum(self) -> int:
        """``sum over i < j of x_i * x_j``."""
        return (self.total ** 2 - self.norm_squared) // 2


def make_gap(settings: Settings = None) -> typing.Callable[[Graph, Graph], Fraction]:
    """A memoised ``(g, h) -> lambda(g, h)`` built on the exact search.

    ``gap.result(g, h)`` returns the whole `GapResult`, witness included,
    from the same cache.
    """

    @lru_cache(maxsize=None)
    def result(g: Graph, h: Graph):
        return lambda_exact(g, h, settings)

    def gap(g: Graph, h: Graph) -> Fraction:
        return result(g, h).value

    gap.result = result
    gap.cache_info = result.cache_info
    return gap
