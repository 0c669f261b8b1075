"""Reading and writing graphs as graph6 strings and JSON edge lists.

Only the short graph6 form is supported: one header byte, hence at most 62
vertices. The upper triangle of the adjacency matrix is packed column by
column, ``x(0,1), x(0,2), x(1,2), x(0,3), ...``, six bits per byte, each
byte offset by 63.
"""

__all__ = [
    "from_json",
    "parse_graph",
    "parse_graph6",
    "to_graph6",
    "to_json",
]

import json
from math import comb

from ..errors import GraphParseError, UnsupportedSize
from .graph import Graph


HEADER = ">>graph6<<"
OFFSET = 63
MAX_SHORT_ORDER = 62


def _pairs(n):
    for v in range(1, n):
        for u in range(v):
            yield u, v


def parse_graph6(text: str) -> Graph:
    """Decode a short-form graph6 string."""
    data = text.strip()
    base = 0
    if data.startswith(HEADER):
        base = len(HEADER)
        data = data[base:]
    if len(data) == 0:
        raise GraphParseError("Empty graph6 string", base, text)
    for index, char in enumerate(data):
        if not OFFSET <= ord(char) <= 126:
            raise GraphParseError(
                "Character %r is outside the graph6 range" % char, base + index, text
            )
    n = ord(data[0]) - OFFSET
    if n > MAX_SHORT_ORDER:
        raise GraphParseError(
            "Long-form graph6 headers (n > %d) are not supported" % MAX_SHORT_ORDER,
            base,
            text,
        )
    nbits = comb(n, 2)
    nbytes = -(-nbits // 6)
    if len(data) != 1 + nbytes:
        raise GraphParseError(
            "Expected %d bytes for n=%d, got %d" % (1 + nbytes, n, len(data)),
            base + min(len(data), 1 + nbytes),
            text,
        )
    bits = []
    for char in data[1:]:
        value = ord(char) - OFFSET
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    for position in range(nbits, len(bits)):
        if bits[position]:
            raise GraphParseError(
                "Padding bits must be zero", base + 1 + position // 6, text
            )
    edges = [pair for pair, bit in zip(_pairs(n), bits) if bit]
    return Graph(n, edges)


def to_graph6(graph: Graph) -> str:
    """Encode `graph` as a short-form graph6 string (no header)."""
    if graph.n > MAX_SHORT_ORDER:
        raise UnsupportedSize(
            "graph6 short form holds at most %d vertices, not %d."
            % (MAX_SHORT_ORDER, graph.n),
            graph,
        )
    bits = [1 if pair in graph.edges else 0 for pair in _pairs(graph.n)]
    bits.extend([0] * (-len(bits) % 6))
    chars = [chr(graph.n + OFFSET)]
    for start in range(0, len(bits), 6):
        value = 0
        for bit in bits[start : start + 6]:
            value = (value << 1) | bit
        chars.append(chr(value + OFFSET))
    return "".join(chars)


def from_json(text: str) -> Graph:
    """Decode ``{"n": int, "edges": [[u, v], ...]}``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as error:
        raise GraphParseError("Invalid JSON: %s" % error.msg, error.pos, text)
    if not isinstance(data, dict) or "n" not in data:
        raise GraphParseError('A JSON graph needs an "n" member', 0, text)
    n, edges = data["n"], data.get("edges", [])
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise GraphParseError('"n" must be a non-negative integer', 0, text)
    if not isinstance(edges, list) or not all(
        isinstance(edge, list) and len(edge) == 2 for edge in edges
    ):
        raise GraphParseError('"edges" must be a list of pairs', 0, text)
    try:
        return Graph(n, edges)
    except (TypeError, ValueError) as error:
        raise GraphParseError(str(error), 0, text)


def to_json(graph: Graph) -> str:
    return json.dumps(
        {"n": graph.n, "edges": [list(edge) for edge in graph.sorted_edges()]}
    )


def parse_graph(text: str) -> Graph:
    """Decode either a JSON edge list or a graph6 string."""
    if text.lstrip().startswith("{"):
        return from_json(text)
    return parse_graph6(text)
