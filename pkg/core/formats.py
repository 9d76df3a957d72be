"""
Graph interchange formats: graph6 and the plain edge list.

graph6 bytes are validated here (header, byte range, length) so errors can
name an offset; the bit decoding itself is done by networkx.
"""
import logging
from typing import Optional

import networkx as nx

from core.config import GraphConfig
from core.errors import GraphParseError, OrderCapError
from core.graph import Graph

logger = logging.getLogger(__name__)

_BIAS = 63
_MAX_BYTE = 126


def _check_order(order: int, cap: Optional[int]) -> None:
    limit = GraphConfig.MAX_ORDER if cap is None else cap
    if order > limit:
        raise OrderCapError(order, limit)


def _decode_order(data: bytes, base: int):
    """Return (order, offset of first adjacency byte) for the N(n) prefix"""
    if not data:
        raise GraphParseError("empty graph6 string", offset=base)
    if data[0] != _MAX_BYTE:
        return data[0] - _BIAS, 1
    if len(data) >= 2 and data[1] == _MAX_BYTE:
        if len(data) < 8:
            raise GraphParseError("truncated 36-bit order field", offset=base + len(data))
        groups, start = data[2:8], 8
    else:
        if len(data) < 4:
            raise GraphParseError("truncated 18-bit order field", offset=base + len(data))
        groups, start = data[1:4], 4
    order = 0
    for byte in groups:
        order = (order << 6) | (byte - _BIAS)
    return order, start


def parse_graph6(text, max_order: Optional[int] = None) -> Graph:
    """
    Parse one graph6 string (optionally with the >>graph6<< header).

    Raises GraphParseError naming the byte offset of the first problem.
    """
    if isinstance(text, str):
        try:
            raw = text.encode("ascii")
        except UnicodeEncodeError as e:
            raise GraphParseError(f"non-ASCII character {text[e.start]!r}", offset=e.start) from None
    else:
        raw = bytes(text)
    raw = raw.rstrip(b"\r\n")
    base = 0
    header = GraphConfig.GRAPH6_HEADER.encode()
    if raw.startswith(b">>"):
        if not raw.startswith(header):
            raise GraphParseError("malformed header", offset=0)
        base = len(header)
    data = raw[base:]

    for i, byte in enumerate(data):
        if not _BIAS <= byte <= _MAX_BYTE:
            raise GraphParseError(f"byte {byte!r} outside 63..126", offset=base + i)

    order, start = _decode_order(data, base)
    _check_order(order, max_order)

    expected = (order * (order - 1) // 2 + 5) // 6
    body = data[start:]
    if len(body) > expected:
        raise GraphParseError("trailing garbage", offset=base + start + expected)
    if len(body) < expected:
        raise GraphParseError(
            f"truncated adjacency data ({len(body)} of {expected} bytes)",
            offset=base + len(data),
        )
    return Graph.from_networkx(nx.from_graph6_bytes(data))


def to_graph6(g: Graph) -> str:
    """Canonical graph6 encoding without header or newline"""
    return nx.to_graph6_bytes(g.nx_view, header=False).decode("ascii").strip()


def parse_edge_list(text: str, max_order: Optional[int] = None) -> Graph:
    """
    Parse the edge-list format: a first line "n <order>" followed by one
    "u v" pair per line. Blank lines and lines starting with # are skipped.
    """
    order = None
    edges = set()
    for number, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens or tokens[0].startswith("#"):
            continue
        if order is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise GraphParseError('expected header "n <order>"', line=number)
            order = _parse_int(tokens[1], number)
            if order < 0:
                raise GraphParseError("negative order", line=number)
            _check_order(order, max_order)
            continue
        if len(tokens) != 2:
            raise GraphParseError(f"expected two vertex ids, got {len(tokens)} tokens", line=number)
        u, v = (_parse_int(tok, number) for tok in tokens)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", line=number)
        for w in (u, v):
            if not 0 <= w < order:
                raise GraphParseError(f"vertex {w} out of range for order {order}", line=number)
        edges.add((min(u, v), max(u, v)))
    if order is None:
        raise GraphParseError('missing header "n <order>"', line=1)
    return Graph.from_edges(order, sorted(edges))


def _parse_int(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphParseError(f"non-numeric token {token!r}", line=line) from None


def to_edge_list(g: Graph) -> str:
    lines = [f"n {g.order}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_graph(text: str, fmt: str = "graph6", max_order: Optional[int] = None) -> Graph:
    """Dispatch on the --format flag value"""
    if fmt == "graph6":
        lines = [line for line in text.splitlines() if line.strip()]
        if len(lines) != 1:
            raise GraphParseError(f"expected exactly one graph6 line, got {len(lines)}")
        return parse_graph6(lines[0].strip(), max_order)
    if fmt == "edgelist":
        return parse_edge_list(text, max_order)
    raise GraphParseError(f"unknown format {fmt!r}")
