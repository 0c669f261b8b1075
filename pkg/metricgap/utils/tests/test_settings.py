"""Tests for `metricgap.utils.settings`."""

import pickle

from testtools.matchers import Equals, MatchesStructure

from ...errors import ConfigurationError
from ...testing import TestCase
from ..settings import ENV_BUDGET, ENV_CONFIG, ENV_WORKERS, load_settings, Settings


class TestSettings(TestCase):
    def test_defaults(self):
        self.assertThat(
            Settings(),
            MatchesStructure.byEquality(
                budget=10 ** 8, workers=1, chunk_size=2 ** 16, seed=0, tolerance=1e-9
            ),
        )

    def test_replace_ignores_None(self):
        settings = Settings(budget=50).replace(workers=4, budget=None)
        self.assertThat((settings.budget, settings.workers), Equals((50, 4)))

    def test_rejects_bad_values(self):
        self.assertRaises(ConfigurationError, Settings, budget=0)
        self.assertRaises(ConfigurationError, Settings, workers="many")
        self.assertRaises(ConfigurationError, Settings, seed=-1)
        self.assertRaises(ConfigurationError, Settings, tolerance=0)

    def test_pickles(self):
        settings = Settings(budget=7, seed=3)
        self.assertThat(pickle.loads(pickle.dumps(settings)), Equals(settings))

    def test_repr(self):
        self.assertThat(
            repr(Settings()),
            Equals(
                "<Settings budget=100000000 chunk_size=65536 seed=0 "
                "tolerance=1e-09 workers=1>"
            ),
        )


class TestLoadSettings(TestCase):
    def test_missing_file_gives_defaults(self):
        missing = self.makeDir() / "missing.yaml"
        self.assertThat(load_settings({}, missing), Equals(Settings()))

    def test_file_then_environment(self):
        config = self.makeFile(contents=b"budget: 1000\nworkers: 2\nseed: 9\n")
        settings = load_settings({ENV_WORKERS: "3"}, config)
        self.assertThat(
            (settings.budget, settings.workers, settings.seed), Equals((1000, 3, 9))
        )

    def test_config_path_from_environment(self):
        config = self.makeFile(contents=b"chunk_size: 128\n")
        settings = load_settings({ENV_CONFIG: str(config), ENV_BUDGET: "64"})
        self.assertThat((settings.chunk_size, settings.budget), Equals((128, 64)))

    def test_empty_file(self):
        config = self.makeFile()
        self.assertThat(load_settings({}, config), Equals(Settings()))

    def test_unknown_setting(self):
        config = self.makeFile(contents=b"colour: blue\n")
        error = self.assertRaises(ConfigurationError, load_settings, {}, config)
        self.assertIn("colour", str(error))

    def test_not_a_mapping(self):
        config = self.makeFile(contents=b"- budget\n")
        self.assertRaises(ConfigurationError, load_settings, {}, config)

    def test_unparseable(self):
        config = self.makeFile(contents=b"budget: [1\n")
        self.assertRaises(ConfigurationError, load_settings, {}, config)

    def test_bad_environment(self):
        self.assertRaises(
            ConfigurationError,
            load_settings,
            {ENV_BUDGET: "lots"},
            self.makeDir() / "missing.yaml",
        )
