"""Tests for `metricgap.flesh.searches`."""

import json

from testtools.matchers import Contains, Equals

from .testing import TestCaseWithSettings
from .. import searches
from ...enum import ExitCode


class TestSearchMonotonic(TestCaseWithSettings):
    """Tests for `cmd_search_monotonic`."""

    def test_apex_witness(self):
        code = self.run_command(
            searches.cmd_search_monotonic,
            "--g",
            "family:complete_multipartite:2:2",
            "--operations",
            "apex",
            "--format",
            "json",
        )
        self.assertThat(code, Equals(ExitCode.PASS))
        (witness,) = self.output_json()["data"]
        self.assertThat(witness["operation"], Equals("apex"))
        self.assertThat(witness["direction"], Equals("increase"))
        self.assertThat(witness["ratio"], Equals({"num": "16", "den": "15"}))

    def test_chain(self):
        self.run_command(
            searches.cmd_search_monotonic,
            "--chain",
            "2",
            "--operations",
            "edge",
            "--format",
            "json",
        )
        lines = self.stdout.getvalue().splitlines()
        self.assertThat(lines[0], Contains("Chain into K2"))
        steps = json.loads(lines[1])["data"]
        self.assertThat(len(steps), Equals(3))
        (witness,) = json.loads(lines[2])["data"]
        self.assertThat(witness["value_after"], Equals({"num": "6", "den": "5"}))

    def test_needs_something_to_search(self):
        code = self.run_main("search-monotonic", "--h", "K2")
        self.assertThat(code, Equals(ExitCode.INPUT_ERROR))
