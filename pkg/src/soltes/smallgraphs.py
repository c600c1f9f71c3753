"""Test corpora: every graph of small order up to isomorphism, and seeded
random connected graphs.

Exhaustive enumeration grows graphs one vertex at a time and removes
isomorphic copies with nauty canonical certificates, so it needs the optional
``pynauty`` package.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator

import numpy as np

from .graph import Graph, is_connected


def _certificate(adj: list[list[int]]) -> bytes:
    try:
        import pynauty
    except ImportError as exc:  # pragma: no cover - depends on environment
        raise ImportError("exhaustive enumeration needs the 'pynauty' package") from exc
    g = pynauty.Graph(len(adj), adjacency_dict={v: nb for v, nb in enumerate(adj) if nb})
    return pynauty.certificate(g)


def _extend(parents, n: int, degrees) -> list[Graph]:
    """Add vertex ``n - 1`` to each parent with every neighbour set whose size
    is in ``degrees``; keep one graph per isomorphism class."""
    seen: dict[bytes, Graph] = {}
    for P in parents:
        base = [list(nb) for nb in P.adjacency]
        for d in degrees:
            for nbrs in combinations(range(n - 1), d):
                adj = [list(nb) for nb in base]
                for u in nbrs:
                    adj[u].append(n - 1)
                adj.append(list(nbrs))
                cert = _certificate(adj)
                if cert not in seen:
                    seen[cert] = Graph(adj)
    return list(seen.values())


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on ``n`` vertices up to isomorphism (1, 2, 4, 11, 34, 156,
    1044, 12346, ... of them)."""
    if n == 0:
        return (Graph([]),)
    if n == 1:
        return (Graph([[]]),)
    return tuple(_extend(all_graphs(n - 1), n, range(n)))


def connected_graphs(n: int) -> list[Graph]:
    return [G for G in all_graphs(n) if is_connected(G)]


def min_degree_two_graphs(n: int) -> list[Graph]:
    """Graphs on ``n`` vertices with minimum degree exactly 2.

    Deleting a degree-2 vertex leaves a graph on ``n - 1`` vertices, so every
    such graph is a parent plus one vertex of degree 2.
    """
    if n < 3:
        return []
    return [G for G in _extend(all_graphs(n - 1), n, (2,)) if G.min_degree == 2]


def random_connected_graphs(count: int, max_n: int, seed: int = 0, min_n: int = 2) -> Iterator[Graph]:
    """``count`` connected ``G(n, p)`` samples, ``n`` uniform in
    ``[min_n, max_n]`` and ``p`` uniform in ``(0, 1)``, by rejection."""
    rng = np.random.default_rng(seed)
    produced = 0
    while produced < count:
        n = int(rng.integers(min_n, max_n + 1))
        p = float(rng.uniform(0.02, 0.98))
        upper = np.triu(rng.random((n, n)) < p, 1)
        u, v = np.nonzero(upper)
        adj: list[list[int]] = [[] for _ in range(n)]
        for a, b in zip(u.tolist(), v.tolist()):
            adj[a].append(b)
            adj[b].append(a)
        G = Graph(adj)
        if is_connected(G):
            produced += 1
            yield G
