"""Corpora, verification campaigns, monotonicity searches and worked examples."""

__all__ = [
    "CampaignRecord",
    "CampaignReport",
    "CorpusSpec",
    "edge_chain",
    "example_rows",
    "ExampleRow",
    "MonotonicWitness",
    "parse_h_list",
    "read_graph",
    "run_verify",
    "search_monotonic",
]

from .campaign import CampaignRecord, CampaignReport, run_verify
from .corpus import CorpusSpec, parse_h_list, read_graph
from .examples import example_rows, ExampleRow
from .searches import edge_chain, MonotonicWitness, search_monotonic
