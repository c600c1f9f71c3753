"""graph6 encoding and decoding.

Bit ``k`` of the body is the adjacency bit of the ``k``-th pair in the order
``(0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...`` (column-major upper
triangle), packed six bits per byte, most significant first, each byte offset
by 63.  Orders up to 62 use a one-byte size header; orders 63..258047 use
``~`` followed by three 6-bit groups.
"""

from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np

from .errors import (
    BadParameterError,
    Graph6Error,
    MalformedHeaderError,
    NonCanonicalPaddingError,
    TrailingGarbageError,
)
from .graph import Graph

MAX_ORDER = 258047
_PREFIX = ">>graph6<<"


def _pair_index(n: int) -> tuple[np.ndarray, np.ndarray]:
    # tril rows/cols are (j, i) with i < j, enumerated row by row, which is
    # exactly the graph6 column-major order of the upper triangle.
    j, i = np.tril_indices(n, -1)
    return i, j


def encode_graph6(G: Graph) -> str:
    n = G.n
    if n > MAX_ORDER:
        raise BadParameterError(f"graph6 encoding supports n <= {MAX_ORDER}, got {n}")
    if n <= 62:
        header = bytes([n + 63])
    else:
        header = bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    npairs = n * (n - 1) // 2
    if npairs == 0:
        return header.decode("ascii")
    # column-major position of pair (u, v), u < v
    indptr, indices = G.csr
    src = np.repeat(np.arange(n), np.diff(indptr))
    mask = src < indices
    u, v = src[mask].astype(np.int64), indices[mask].astype(np.int64)
    bits = np.zeros(-(-npairs // 6) * 6, dtype=np.uint8)
    bits[v * (v - 1) // 2 + u] = 1
    groups = bits.reshape(-1, 6)
    values = groups @ np.array([32, 16, 8, 4, 2, 1], dtype=np.uint8)
    return header.decode("ascii") + (values + 63).astype(np.uint8).tobytes().decode("ascii")


def _parse_header(data: bytes) -> tuple[int, int]:
    if not data:
        raise MalformedHeaderError("empty graph6 record")
    if data[0] != 126:
        if not 63 <= data[0] <= 125:
            raise MalformedHeaderError(f"invalid size byte {data[0]}")
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        raise MalformedHeaderError(f"8-byte size headers (n > {MAX_ORDER}) are not supported")
    if len(data) < 4 or any(not 63 <= b <= 126 for b in data[1:4]):
        raise MalformedHeaderError("truncated 4-byte size header")
    n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
    if n <= 62:
        raise MalformedHeaderError(f"order {n} must use the one-byte header")
    return n, 4


def decode_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 record (an optional ``>>graph6<<`` prefix and line
    terminator are accepted)."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.rstrip(b"\r\n")
    if data.startswith(_PREFIX.encode()):
        data = data[len(_PREFIX):]
    n, offset = _parse_header(data)
    npairs = n * (n - 1) // 2
    nbytes = -(-npairs // 6)
    body = data[offset:]
    if len(body) < nbytes:
        raise Graph6Error(f"body has {len(body)} bytes, order {n} needs {nbytes}")
    if len(body) > nbytes:
        raise TrailingGarbageError(f"{len(body) - nbytes} unexpected bytes after the body")
    raw = np.frombuffer(body, dtype=np.uint8)
    if raw.size and (raw.min() < 63 or raw.max() > 126):
        raise Graph6Error("body byte outside 63..126")
    bits = np.unpackbits((raw - 63).reshape(-1, 1), axis=1)[:, 2:].ravel()
    if bits[npairs:].any():
        raise NonCanonicalPaddingError("padding bits must be zero")
    i, j = _pair_index(n)
    on = np.flatnonzero(bits[:npairs])
    u, v = i[on], j[on]
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in zip(u.tolist(), v.tolist()):
        adj[a].append(b)
        adj[b].append(a)
    return Graph(adj)


def iter_graph6(lines: Iterable[str | bytes]) -> Iterator[Graph]:
    for line in lines:
        if line.strip():
            yield decode_graph6(line.strip())
