"""Deterministic generators for the explicit graphs of the Šoltés study.

Each generator documents its vertex labelling so tests and reports can refer
to specific vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import BadParameterError
from .graph import Graph, from_edge_list
from .transforms import matching_apex


def cycle(n: int) -> Graph:
    """``C_n`` on ``0..n-1`` in cyclic order."""
    if n < 3:
        raise BadParameterError(f"cycle needs n >= 3, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """``P_n`` (``n`` vertices) on ``0..n-1`` in path order."""
    if n < 1:
        raise BadParameterError(f"path needs n >= 1, got {n}")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise BadParameterError(f"complete graph needs n >= 1, got {n}")
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def circular_ladder_k4(k: int) -> Graph:
    """Prism ``CL_{2k+4}`` with two opposite squares completed to ``K_4``.

    With ``N = 2k + 4``: outer cycle ``u_i = i``, inner cycle ``w_i = N + i``,
    spokes ``u_i w_i``; the squares starting at ``i = 0`` and ``i = k + 2``
    get both diagonals ``u_i w_{i+1}`` and ``u_{i+1} w_i``.
    """
    if k < 1:
        raise BadParameterError(f"k must be >= 1, got {k}")
    N = 2 * k + 4
    edges = []
    for i in range(N):
        j = (i + 1) % N
        edges += [(i, j), (N + i, N + j), (i, N + i)]
    for i in (0, k + 2):
        j = (i + 1) % N
        edges += [(i, N + j), (j, N + i)]
    return from_edge_list(2 * N, edges)


def triangle_bipartite(k: int) -> Graph:
    """Non-regular family with ``Delta - delta = k``.

    With ``n = 2k + 2``: ``A0 = 0..k-1``; ``B1`` holds ``n`` triangles, the
    ``t``-th being ``k + 3t + (0, 1, 2)``; ``B2`` likewise starting at
    ``k + 3n``; ``A3`` is the last ``k`` vertices.  ``A0`` is complete to
    ``B1`` and ``A3`` to ``B2``; every pair of triangles ``x0x1x2`` in ``B1``
    and ``y0y1y2`` in ``B2`` spans the 6-cycle ``x0 y0 x1 y1 x2 y2``.
    """
    if k < 1:
        raise BadParameterError(f"k must be >= 1, got {k}")
    n = 2 * k + 2
    b1 = k
    b2 = k + 3 * n
    a3 = k + 6 * n
    order = 2 * k + 6 * n
    edges = []
    for base in (b1, b2):
        for t in range(n):
            x = base + 3 * t
            edges += [(x, x + 1), (x + 1, x + 2), (x, x + 2)]
    for a in range(k):
        edges += [(a, b1 + j) for j in range(3 * n)]
        edges += [(a3 + a, b2 + j) for j in range(3 * n)]
    for t1 in range(n):
        x = [b1 + 3 * t1 + j for j in range(3)]
        for t2 in range(n):
            y = [b2 + 3 * t2 + j for j in range(3)]
            ring = [x[0], y[0], x[1], y[1], x[2], y[2]]
            edges += [(ring[i], ring[(i + 1) % 6]) for i in range(6)]
    return from_edge_list(order, edges)


def fig4_left() -> Graph:
    """``C_8`` plus an apex on each edge of the matching ``01, 23, 45, 67``
    (apexes ``8..11``): 8 of its 12 vertices are Šoltés vertices."""
    return matching_apex(cycle(8), [(0, 1), (2, 3), (4, 5), (6, 7)])


def fig4_right() -> Graph:
    """``C_9`` with pendants ``9, 10, 11`` on ``0, 3, 6``; 6 Šoltés vertices."""
    edges = [(i, (i + 1) % 9) for i in range(9)] + [(0, 9), (3, 10), (6, 11)]
    return from_edge_list(12, edges)


def fig5_60() -> Graph:
    """Order-60 graph with 40 Šoltés vertices.

    Cycle label ``i in 1..40`` is vertex ``i - 1``.  Chords ``i ~ i+11`` for
    ``i = 1 mod 4`` and ``i ~ i+9`` for ``i = 2 mod 4`` (labels mod 40).  For
    even ``i`` an apex adjacent to ``i`` and ``i+1`` is added; the apex of
    label ``2j`` is vertex ``40 + j - 1``.
    """
    def vid(label: int) -> int:
        return (label - 1) % 40

    edges = [(vid(i), vid(i + 1)) for i in range(1, 41)]
    for i in range(1, 41):
        if i % 4 == 1:
            edges.append((vid(i), vid(i + 11)))
        elif i % 4 == 2:
            edges.append((vid(i), vid(i + 9)))
    G = from_edge_list(40, edges)
    return matching_apex(G, [(vid(i), vid(i + 1)) for i in range(2, 41, 2)])


def fig6_69() -> Graph:
    """Order-69 graph with 46 Šoltés vertices.

    For ``i`` in ``Z_23``: ``o_i = i``, ``n_i = 23 + i``, ``m_i = 46 + i``;
    edges ``o_i n_{i+1}``, ``n_i o_{i+1}`` and the subdivided spoke
    ``o_i m_i n_i``.  Removing the ``m_i`` and joining ``o_i n_i`` gives a
    cubic graph on 46 vertices.
    """
    edges = []
    for i in range(23):
        j = (i + 1) % 23
        edges += [(i, 23 + j), (23 + i, j), (i, 46 + i), (46 + i, 23 + i)]
    return from_edge_list(69, edges)


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    build: Callable[..., Graph]
    params: tuple[str, ...] = field(default=())


FAMILIES: dict[str, FamilySpec] = {
    "cycle": FamilySpec("cycle", cycle, ("n",)),
    "path": FamilySpec("path", path, ("n",)),
    "complete": FamilySpec("complete", complete, ("n",)),
    "ladder-k4": FamilySpec("ladder-k4", circular_ladder_k4, ("k",)),
    "triangle-bipartite": FamilySpec("triangle-bipartite", triangle_bipartite, ("k",)),
    "fig4-left": FamilySpec("fig4-left", fig4_left),
    "fig4-right": FamilySpec("fig4-right", fig4_right),
    "fig5-60": FamilySpec("fig5-60", fig5_60),
    "fig6-69": FamilySpec("fig6-69", fig6_69),
}


def generate(name: str, **params: int) -> Graph:
    """Build a family member by its registry tag, e.g.
    ``generate("ladder-k4", k=3)``."""
    try:
        spec = FAMILIES[name]
    except KeyError:
        raise BadParameterError(f"unknown family {name!r}; known: {', '.join(FAMILIES)}")
    missing = [p for p in spec.params if params.get(p) is None]
    if missing:
        raise BadParameterError(f"family {name!r} needs --{' --'.join(missing)}")
    return spec.build(**{p: params[p] for p in spec.params})
