"""Tables for campaign reports, worked examples and search witnesses."""

__all__ = [
    "CampaignRecordsTable",
    "CampaignSummaryTable",
    "ChainTable",
    "ExamplesTable",
    "WitnessesTable",
]

from fractions import Fraction
import math

from colorclass import Color

from ..enum import CheckStatus
from ..utils import fraction_to_json
from .tabular import Column, DetailTable, RenderTarget, Table


class ValueColumn(Column):
    """Exact rationals as ``{"num", "den"}`` in dumps, ``p/q`` in tables."""

    def render(self, target, datum):
        if isinstance(datum, (int, Fraction)) and not isinstance(datum, bool):
            if target in (RenderTarget.json, RenderTarget.yaml):
                return fraction_to_json(datum)
            return super().render(target, str(datum))
        if isinstance(datum, float) and target in (
            RenderTarget.json,
            RenderTarget.yaml,
        ):
            return datum if math.isfinite(datum) else str(datum)
        return super().render(target, datum)


class CheckStatusColumn(Column):

    colours = {
        CheckStatus.PASSED: "autogreen",
        CheckStatus.FAILED: "autored",
        CheckStatus.NOT_APPLICABLE: "autoyellow",
        CheckStatus.RECORDED: "autoblue",
    }

    def render(self, target, status):
        if target == RenderTarget.pretty:
            colour = self.colours[status]
            return Color("{%s}%s{/%s}" % (colour, status.value, colour))
        else:
            return super().render(target, status.value)


class MatchColumn(Column):
    def render(self, target, match):
        if target == RenderTarget.pretty:
            if match:
                return Color("{autogreen}yes{/autogreen}")
            else:
                return Color("{autored}NO{/autored}")
        elif target == RenderTarget.plain:
            return "yes" if match else "NO"
        else:
            return super().render(target, match)


class CampaignSummaryTable(DetailTable):
    def __init__(self):
        super().__init__(
            Column("mode", "Corpus"),
            Column("h", "Targets"),
            Column("total", "Checks"),
            Column("passed", "Passed"),
            Column("failed", "Failed"),
            Column("not_applicable", "Not applicable"),
            Column("recorded", "Recorded"),
            Column("minimum_ratio", "Minimum ratio"),
        )

    def get_rows(self, target, report):
        summary = report.summary
        minimum = report.minimum_ratio()
        return (
            report.corpus["mode"],
            report.corpus["h"],
            summary["total"],
            summary["passed"],
            summary["failed"],
            summary["not_applicable"],
            summary["recorded"],
            None if minimum is None else minimum.subject,
        )


class CampaignRecordsTable(Table):
    def __init__(self):
        super().__init__(
            Column("check", "Check"),
            Column("g", "G"),
            Column("h", "H"),
            CheckStatusColumn("status", "Status"),
            ValueColumn("bound", "Bound"),
            ValueColumn("subject", "Value"),
            Column("note", "Note"),
        )

    def get_rows(self, target, records):
        return [
            (
                record.check,
                record.g,
                record.h,
                record.status,
                record.bound,
                record.subject,
                record.note,
            )
            for record in records
        ]


class ExamplesTable(Table):
    def __init__(self):
        super().__init__(
            Column("name", "Example"),
            Column("expected", "Expected"),
            ValueColumn("computed", "Computed"),
            MatchColumn("match", "Match"),
        )

    def get_rows(self, target, rows):
        return [tuple(row) for row in rows]


class WitnessesTable(Table):
    def __init__(self):
        super().__init__(
            Column("operation", "Operation"),
            Column("before", "Before"),
            Column("after", "After"),
            Column("h", "Fixed"),
            ValueColumn("value_before", "Gap before"),
            ValueColumn("value_after", "Gap after"),
            Column("direction", "Direction"),
            ValueColumn("ratio", "Ratio"),
        )

    def get_rows(self, target, witnesses):
        return [
            (
                witness.operation,
                witness.before,
                witness.after,
                witness.h,
                witness.value_before,
                witness.value_after,
                witness.direction,
                witness.ratio,
            )
            for witness in witnesses
        ]


class ChainTable(Table):
    def __init__(self):
        super().__init__(Column("edge", "Added edge"), ValueColumn("value", "Gap"))

    def get_rows(self, target, steps):
        return [("-" if edge is None else list(edge), value) for edge, value in steps]
