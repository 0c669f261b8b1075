"""Test helpers for `metricgap.flesh`."""

__all__ = ["TestCaseWithSettings"]

from io import StringIO
import json
import sys

from fixtures import EnvironmentVariable

from .... import flesh
from ....testing import TestCase
from ....utils.settings import ENV_BUDGET, ENV_CONFIG, ENV_WORKERS


class TestCaseWithSettings(TestCase):
    """Base test case class for all of `flesh` commands.

    Settings come from built-in defaults only, and `stdout` and `stderr`
    are captured.
    """

    def setUp(self):
        super(TestCaseWithSettings, self).setUp()
        missing = self.makeDir() / "metricgap.yaml"
        self.useFixture(EnvironmentVariable(ENV_CONFIG, str(missing)))
        self.useFixture(EnvironmentVariable(ENV_BUDGET))
        self.useFixture(EnvironmentVariable(ENV_WORKERS))
        self.stdout = self.patch(sys, "stdout", StringIO())
        self.stderr = self.patch(sys, "stderr", StringIO())

    def run_command(self, command, *arguments):
        """Register `command` on a fresh parser and execute it."""
        parser = flesh.ArgumentParser()
        subparser = command.register(parser)
        options = subparser.parse_args(list(arguments))
        return options.execute(options)

    def run_main(self, *arguments):
        """Run the whole CLI; return the exit code, raised or returned."""
        try:
            return flesh.main(["metricgap", *arguments])
        except SystemExit as error:
            return error.code

    def output_json(self):
        return json.loads(self.stdout.getvalue())
