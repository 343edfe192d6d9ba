"""
graph6 encoder and decoder on top of networkx

networkx does the bit packing; the checks here reject what it would accept
silently (bytes below 63, non-zero padding) and report the byte offset of
every problem.
"""

from typing import Tuple, Union

import networkx as nx

from .core import Graph

HEADER = b">>graph6<<"


class Graph6FormatError(ValueError):
    """Malformed graph6 input; offset is the byte position of the problem"""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def encode_graph6(g: Graph) -> bytes:
    """graph6 bytes without header or trailing newline"""
    return nx.to_graph6_bytes(g.to_networkx(), header=False).rstrip(b"\n")


def _check_char(data: bytes, index: int, base: int) -> int:
    value = data[index]
    if not 63 <= value <= 126:
        raise Graph6FormatError(f"byte {value} outside the graph6 range 63..126", base + index)
    return value - 63


def _decode_order(data: bytes, base: int) -> Tuple[int, int]:
    if not data:
        raise Graph6FormatError("missing vertex count", base)
    if data[0] != 126:
        return _check_char(data, 0, base), 1
    width, pos = (6, 2) if data[1:2] == b"~" else (3, 1)
    if pos + width > len(data):
        raise Graph6FormatError("truncated vertex count", base + len(data))
    n = 0
    for k in range(pos, pos + width):
        n = n << 6 | _check_char(data, k, base)
    return n, pos + width


def _validate(data: bytes, base: int) -> int:
    """Order encoded in data; base is the offset of data inside the raw record"""
    n, pos = _decode_order(data, base)
    for index in range(pos, len(data)):
        _check_char(data, index, base)

    bit_count = n * (n - 1) // 2
    expected = (bit_count + 5) // 6
    if len(data) - pos != expected:
        raise Graph6FormatError(
            f"expected {expected} adjacency bytes for {n} vertices, found {len(data) - pos}",
            base + min(len(data), pos + expected),
        )
    spare = 6 * expected - bit_count
    if spare and (data[-1] - 63) & ((1 << spare) - 1):
        raise Graph6FormatError("non-zero padding bit", base + len(data) - 1)
    return n


def decode_graph6(data: Union[bytes, str]) -> Graph:
    """Parse one graph6 record; the header and one trailing newline are optional"""
    if isinstance(data, str):
        data = data.encode("utf-8")
    base = len(HEADER) if data.startswith(HEADER) else 0
    body = data[base:]
    if body.endswith(b"\n"):
        body = body[:-1]
    if _validate(body, base) == 0:
        return Graph(0, [])
    return Graph.from_networkx(nx.from_graph6_bytes(body))
