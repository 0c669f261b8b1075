"""Pytest collection wiring for `testscenarios`-based test cases.

The suite is written for ``testtools.run``, where `WithScenarios.__call__`
expands each scenario into a cloned test. Under pytest, the test method is
bound to the original (unparameterised) instance before cloning, so clones
never see their scenario attributes. Expand scenarios at collection time
instead: one pytest item per (test method, scenario).
"""

import unittest

from _pytest.unittest import TestCaseFunction, UnitTestCase
import testscenarios


class ScenarioTestCaseFunction(TestCaseFunction):
    def __init__(self, *args, scenario=None, **kwargs):
        self._scenario = scenario
        super().__init__(*args, **kwargs)

    def _getinstance(self):
        instance = self.parent.obj(self.originalname)
        scenario_name, parameters = self._scenario
        for key, value in parameters.items():
            setattr(instance, key, value)
        # Already expanded; stop `WithScenarios.__call__` from re-expanding.
        instance.scenarios = None
        return instance


class ScenarioUnitTestCase(UnitTestCase):
    def collect(self):
        scenarios = getattr(self.obj, "scenarios", None)
        for item in super().collect():
            if not isinstance(item, TestCaseFunction):
                yield item
                continue
            for scenario in scenarios:
                yield ScenarioTestCaseFunction.from_parent(
                    self,
                    name=f"{item.name}[{scenario[0]}]",
                    originalname=item.name,
                    scenario=scenario,
                )


def pytest_pycollect_makeitem(collector, name, obj):
    if (
        isinstance(obj, type)
        and issubclass(obj, unittest.TestCase)
        and issubclass(obj, testscenarios.WithScenarios)
        and getattr(obj, "scenarios", None)
    ):
        return ScenarioUnitTestCase.from_parent(collector, name=name, obj=obj)
    return None
