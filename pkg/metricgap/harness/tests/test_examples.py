"""Tests for `metricgap.harness.examples`."""

from testtools.matchers import Equals

from ...testing import TestCase
from ..examples import example_rows


class TestExampleRows(TestCase):
    def test_every_example_matches(self):
        rows = example_rows()
        mismatched = [row for row in rows if not row.match]
        self.assertThat(mismatched, Equals([]))

    def test_names_are_unique(self):
        names = [row.name for row in example_rows()]
        self.assertThat(len(set(names)), Equals(len(names)))
