"""Immutable simple undirected graphs on dense vertex ids ``0..n-1``.

The adjacency is stored twice: as sorted neighbour tuples for Python-level
code, and as a read-only CSR pair (``indptr``, ``indices``) handed to the
compiled distance kernels.
"""

from __future__ import annotations

from bisect import bisect_left
from collections import deque
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    DuplicateEdgeError,
    EdgeListError,
    EdgeNotFoundError,
    SelfLoopError,
    VertexOutOfRangeError,
)


class Graph:
    """A simple undirected graph; never mutated after construction.

    Build one with :func:`from_edge_list` (validating) rather than calling the
    constructor directly.
    """

    __slots__ = ("_adj", "_m", "_indptr", "_indices", "_hash")

    def __init__(self, adjacency: Sequence[Sequence[int]]):
        self._adj = tuple(tuple(sorted(nb)) for nb in adjacency)
        self._m = sum(len(nb) for nb in self._adj) // 2
        counts = np.fromiter((len(nb) for nb in self._adj), dtype=np.int64, count=len(self._adj))
        indptr = np.zeros(len(self._adj) + 1, dtype=np.int32)
        np.cumsum(counts, out=indptr[1:])
        indices = np.fromiter(
            (w for nb in self._adj for w in nb), dtype=np.int32, count=int(indptr[-1])
        )
        indptr.flags.writeable = False
        indices.flags.writeable = False
        self._indptr = indptr
        self._indices = indices
        self._hash = None

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    @property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """``(indptr, indices)`` int32 arrays; neighbours of ``v`` are
        ``indices[indptr[v]:indptr[v+1]]``."""
        return self._indptr, self._indices

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nb) for nb in self._adj)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def is_regular(self) -> bool:
        return self.min_degree == self.max_degree

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        nb = self._adj[u]
        i = bisect_left(nb, v)
        return i < len(nb) and nb[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, nb in enumerate(self._adj):
            for v in nb:
                if u < v:
                    yield (u, v)

    def edge_list(self) -> list[tuple[int, int]]:
        return list(self.edges())

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < len(self._adj):
            raise VertexOutOfRangeError(f"vertex {v} not in 0..{len(self._adj) - 1}")

    def check_edge(self, u: int, v: int) -> tuple[int, int]:
        """Return the edge as ``(min, max)``; raise if it is absent."""
        if not (0 <= u < self.n and 0 <= v < self.n) or not self.has_edge(u, v):
            raise EdgeNotFoundError(f"edge ({u}, {v}) not in graph")
        return (u, v) if u < v else (v, u)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._adj)
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices, rejecting loops and repeated pairs."""
    if n < 0:
        raise VertexOutOfRangeError(f"vertex count must be non-negative, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRangeError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if v in adj[u]:
            raise DuplicateEdgeError(f"edge {{{u}, {v}}} listed twice")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(adj)


def delete_vertex(G: Graph, v: int) -> tuple[Graph, tuple[int, ...]]:
    """Remove ``v`` and its edges.

    Returns ``(H, old_ids)`` where vertex ``i`` of ``H`` is vertex ``old_ids[i]``
    of ``G``; ids above ``v`` shift down by one.
    """
    G._check_vertex(v)
    old_ids = tuple(u for u in range(G.n) if u != v)
    adj = [
        [w if w < v else w - 1 for w in G.adjacency[u] if w != v]
        for u in old_ids
    ]
    return Graph(adj), old_ids


def is_connected(G: Graph) -> bool:
    if G.n <= 1:
        return True
    seen = bytearray(G.n)
    seen[0] = 1
    queue = deque([0])
    reached = 1
    adj = G.adjacency
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = 1
                reached += 1
                queue.append(w)
    return reached == G.n


def induced_subgraph(G: Graph, keep: Sequence[int]) -> Graph:
    """Subgraph on ``keep`` relabelled to ``0..len(keep)-1`` in the given order."""
    pos = {u: i for i, u in enumerate(keep)}
    return Graph([[pos[w] for w in G.neighbors(u) if w in pos] for u in keep])


# -- edge-list text format ---------------------------------------------------
#
#   n m
#   u v        (m lines, 0-based)
#
# '#' starts a comment; several graphs may be concatenated in one stream.


def _data_lines(lines: Iterable[str]) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(lines, 1):
        body = raw.split("#", 1)[0].split()
        if body:
            yield lineno, body


def iter_edgelist(lines: Iterable[str]) -> Iterator[Graph]:
    """Yield every graph of a (possibly concatenated) edge-list stream."""
    it = _data_lines(lines)
    for lineno, header in it:
        try:
            n, m = (int(t) for t in header)
        except ValueError:
            raise EdgeListError(f"line {lineno}: expected header 'n m', got {' '.join(header)!r}")
        edges = []
        for _ in range(m):
            try:
                lineno, tok = next(it)
                u, v = (int(t) for t in tok)
            except StopIteration:
                raise EdgeListError(f"stream ended before {m} edges were read")
            except ValueError:
                raise EdgeListError(f"line {lineno}: expected 'u v'")
            edges.append((u, v))
        yield from_edge_list(n, edges)


def read_edgelist(text: str) -> Graph:
    graphs = list(iter_edgelist(text.splitlines()))
    if len(graphs) != 1:
        raise EdgeListError(f"expected exactly one graph, found {len(graphs)}")
    return graphs[0]


def write_edgelist(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"
