"""Custom errors for metricgap."""

__all__ = [
    "BudgetExceeded",
    "ConfigurationError",
    "ConstructionError",
    "DomainError",
    "EditError",
    "GraphParseError",
    "MetricGapError",
    "NumericalError",
    "PreconditionError",
    "UndefinedGap",
    "UnsupportedSize",
    "ZeroDenominator",
]


class MetricGapError(Exception):
    def __init__(self, msg, obj=None):
        super().__init__(msg)
        self.obj = obj


class GraphParseError(MetricGapError):
    """The graph text could not be decoded."""

    def __init__(self, msg, offset, obj=None):
        super().__init__("%s (at byte %d)" % (msg, offset), obj)
        self.offset = offset


class UnsupportedSize(MetricGapError):
    """The graph is too large for the requested encoding."""


class ConstructionError(MetricGapError):
    """A named graph family was asked for impossible parameters."""


class EditError(MetricGapError):
    """An edge edit violated its precondition."""


class PreconditionError(MetricGapError):
    """A bound or identity was called outside its hypotheses."""


class DomainError(MetricGapError):
    """The quotient is not defined for this assignment."""


class ZeroDenominator(DomainError):
    """Every pair with distinct images involves a zero-degree vertex."""


class UndefinedGap(MetricGapError):
    """No nonconstant assignment has a positive denominator."""


class BudgetExceeded(MetricGapError):
    """The assignment space is larger than the enumeration budget.

    `partial_upper_bound` and `witness` hold a certified upper bound found
    without the full search, or `None` if none could be produced.
    """

    def __init__(self, msg, partial_upper_bound=None, witness=None, obj=None):
        super().__init__(msg, obj)
        self.partial_upper_bound = partial_upper_bound
        self.witness = witness


class NumericalError(MetricGapError):
    """The eigensolver did not converge."""

    def __init__(self, msg, residual, obj=None):
        super().__init__(msg, obj)
        self.residual = residual


class ConfigurationError(MetricGapError):
    """A setting has an invalid value."""
