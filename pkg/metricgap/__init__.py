"""Basic entry points."""

__all__ = [
    "Graph",
    "lambda_exact",
    "lambda_R",
    "load_settings",
    "parse_graph",
    "Settings",
]

from .exact_gap import lambda_exact
from .graph_core import Graph, parse_graph
from .spectral import lambda_R
from .utils.settings import load_settings, Settings
