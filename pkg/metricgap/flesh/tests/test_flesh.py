"""Tests for `metricgap.flesh`."""

import logging

from testtools.matchers import Contains, Equals, Is

from .testing import TestCaseWithSettings
from ... import flesh
from ...enum import ExitCode
from ...errors import (
    BudgetExceeded,
    ConfigurationError,
    DomainError,
    GraphParseError,
    NumericalError,
    UndefinedGap,
    ZeroDenominator,
)
from ...testing import TestCase


class TestExitCodeFor(TestCase):

    scenarios = (
        ("budget", dict(error=BudgetExceeded("too big"), code=ExitCode.BUDGET)),
        ("undefined", dict(error=UndefinedGap("empty"), code=ExitCode.UNDEFINED)),
        ("domain", dict(error=DomainError("constant"), code=ExitCode.UNDEFINED)),
        ("zero", dict(error=ZeroDenominator("zero"), code=ExitCode.UNDEFINED)),
        ("numerical", dict(error=NumericalError("slow", 1.0), code=ExitCode.UNDEFINED)),
        ("parse", dict(error=GraphParseError("bad", 0), code=ExitCode.INPUT_ERROR)),
        ("config", dict(error=ConfigurationError("bad"), code=ExitCode.INPUT_ERROR)),
    )

    def test__maps_error(self):
        self.assertThat(flesh.exit_code_for(self.error), Is(self.code))


class TestMain(TestCaseWithSettings):
    """Tests for `main` and its exit codes."""

    def test_returns_the_command_exit_code(self):
        code = self.run_main("compute", "--g", "Bg", "--h", "K2")
        self.assertThat(code, Equals(ExitCode.PASS))
        self.assertThat(self.output_json()["witness"], Equals([0, 0, 1]))

    def test_graph_without_edges_is_undefined(self):
        code = self.run_main("compute", "--g", "D??", "--h", "K2")
        self.assertThat(code, Equals(ExitCode.UNDEFINED))
        self.assertThat(self.stderr.getvalue(), Contains("Error:"))

    def test_unparseable_graph(self):
        code = self.run_main("compute", "--g", "not a graph", "--h", "K2")
        self.assertThat(code, Equals(ExitCode.INPUT_ERROR))

    def test_budget_exit_code(self):
        code = self.run_main(
            "compute", "--g", "family:path:4", "--h", "K3", "--budget", "10"
        )
        self.assertThat(code, Equals(ExitCode.BUDGET))

    def test_missing_command(self):
        self.assertThat(self.run_main(), Equals(ExitCode.INPUT_ERROR))

    def test_verbose_logs_progress(self):
        self.addCleanup(logging.getLogger("metricgap").handlers.clear)
        self.run_main("-v", "compute", "--g", "Bg", "--h", "K2")
        self.assertThat(
            logging.getLogger("metricgap").getEffectiveLevel(), Equals(logging.INFO)
        )

    def test_help_lists_commands(self):
        self.run_main("help", "commands", "--no-pager")
        output = self.stdout.getvalue()
        for name in ("compute", "embed", "examples", "search-monotonic", "verify"):
            self.assertThat(output, Contains(name))


class TestReportError(TestCaseWithSettings):
    def test_includes_the_partial_bound(self):
        error = BudgetExceeded("too big")
        error.partial_upper_bound, error.witness = 1, (0, 1)
        flesh.report_error(error)
        self.assertThat(
            self.stderr.getvalue(),
            Equals("Error: too big\nPartial upper bound: 1 (witness [0, 1])\n"),
        )
