"""Run-time settings.

Settings come from built-in defaults, then an optional YAML file, then the
environment. The CLI applies its own flags on top with `Settings.replace`.
"""

__all__ = ["load_settings", "Settings"]

import logging
import os
from pathlib import Path

import yaml

from ..errors import ConfigurationError


logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path("~/.config/metricgap.yaml")

ENV_CONFIG = "METRIC_GAP_CONFIG"
ENV_BUDGET = "METRIC_GAP_BUDGET"
ENV_WORKERS = "METRIC_GAP_WORKERS"


def _positive_int(name, value):
    try:
        number = int(value)
    except (TypeError, ValueError):
        raise ConfigurationError("%s must be an integer, got %r." % (name, value))
    if number < 1:
        raise ConfigurationError("%s must be positive, got %d." % (name, number))
    return number


def _nonnegative_int(name, value):
    try:
        number = int(value)
    except (TypeError, ValueError):
        raise ConfigurationError("%s must be an integer, got %r." % (name, value))
    if number < 0:
        raise ConfigurationError("%s must not be negative, got %d." % (name, number))
    return number


def _positive_float(name, value):
    try:
        number = float(value)
    except (TypeError, ValueError):
        raise ConfigurationError("%s must be a number, got %r." % (name, value))
    if not number > 0:
        raise ConfigurationError("%s must be positive, got %r." % (name, number))
    return number


class Settings(tuple):
    """Everything that tunes a computation without changing its answer."""

    __slots__ = ()

    def __new__(
        cls,
        *,
        budget: int = 10 ** 8,
        workers: int = 1,
        chunk_size: int = 2 ** 16,
        seed: int = 0,
        tolerance: float = 1e-9
    ):
        return super(Settings, cls).__new__(
            cls,
            (
                _positive_int("budget", budget),
                _positive_int("workers", workers),
                _positive_int("chunk_size", chunk_size),
                _nonnegative_int("seed", seed),
                _positive_float("tolerance", tolerance),
            ),
        )

    @property
    def budget(self) -> int:
        """Largest assignment space, before pruning, an exact search may scan."""
        return self[0]

    @property
    def workers(self) -> int:
        """Number of worker processes for the exact search."""
        return self[1]

    @property
    def chunk_size(self) -> int:
        """Assignments evaluated per vectorised block."""
        return self[2]

    @property
    def seed(self) -> int:
        """Default seed for randomised corpora and embeddings."""
        return self[3]

    @property
    def tolerance(self) -> float:
        """Acceptance tolerance for floating-point comparisons."""
        return self[4]

    def replace(self, **updates):
        """Return new settings with the given updates; `None` values are ignored."""
        state = self.dump()
        state.update(
            (name, value) for name, value in updates.items() if value is not None
        )
        return self.__class__(**state)

    def dump(self):
        """Return a dict that recreates these settings."""
        return dict(
            budget=self.budget,
            workers=self.workers,
            chunk_size=self.chunk_size,
            seed=self.seed,
            tolerance=self.tolerance,
        )

    def __getnewargs_ex__(self):
        return (), self.dump()

    def __repr__(self):
        return "<%s %s>" % (
            self.__class__.__name__,
            " ".join("%s=%r" % item for item in sorted(self.dump().items())),
        )


def read_config_file(path):
    """Read a YAML mapping of settings from `path`.

    :return: a dict, empty if the file does not exist.
    """
    path = Path(path).expanduser()
    if not path.is_file():
        return {}
    with path.open("r") as fin:
        try:
            data = yaml.safe_load(fin)
        except yaml.YAMLError as error:
            raise ConfigurationError("Cannot parse %s: %s" % (path, error))
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigurationError("%s must contain a mapping of settings." % path)
    known = set(Settings().dump())
    unknown = set(data) - known
    if unknown:
        raise ConfigurationError(
            "Unknown settings in %s: %s" % (path, ", ".join(sorted(unknown)))
        )
    logger.debug("Loaded settings from %s.", path)
    return data


def load_settings(environ=None, config_path=None) -> Settings:
    """Load settings from defaults, the config file, and the environment."""
    environ = os.environ if environ is None else environ
    if config_path is None:
        config_path = environ.get(ENV_CONFIG, DEFAULT_CONFIG_PATH)
    state = read_config_file(config_path)
    if environ.get(ENV_BUDGET):
        state["budget"] = _positive_int(ENV_BUDGET, environ[ENV_BUDGET])
    if environ.get(ENV_WORKERS):
        state["workers"] = _positive_int(ENV_WORKERS, environ[ENV_WORKERS])
    return Settings(**state)
