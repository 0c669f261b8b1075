"""Graphs, their shortest-path metrics, codecs, orbits and named families."""

__all__ = [
    "add_apex",
    "add_edge",
    "apsp",
    "components",
    "DistanceMatrix",
    "disjoint_union",
    "generate",
    "Graph",
    "induced_subgraph",
    "OrbitPartition",
    "parse_family",
    "parse_graph",
    "parse_graph6",
    "remove_edge",
    "to_graph6",
    "UNREACHABLE",
    "vertex_orbits",
]

from .distances import apsp, DistanceMatrix, UNREACHABLE
from .families import generate, parse_family
from .graph import (
    add_apex,
    add_edge,
    components,
    disjoint_union,
    Graph,
    induced_subgraph,
    remove_edge,
)
from .graph6 import parse_graph, parse_graph6, to_graph6
from .orbits import OrbitPartition, vertex_orbits
