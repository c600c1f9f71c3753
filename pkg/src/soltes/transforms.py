"""Graph-to-graph constructions.

New vertices are always appended after the existing ids, in the order the
construction lists them, so callers can address them predictably.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from .errors import (
    BadParameterError,
    DuplicateEdgeError,
    EmptyGraphError,
    NotAMatchingError,
    XTooSmallError,
)
from .graph import Graph


@dataclass(frozen=True)
class ArcIndex:
    """Vertex ``i`` of an arc-graph is the arc ``arcs[i] = (tail, head)``."""

    arcs: tuple[tuple[int, int], ...]
    _ids: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_ids", {a: i for i, a in enumerate(self.arcs)})

    def __len__(self) -> int:
        return len(self.arcs)

    def arc_id(self, tail: int, head: int) -> int:
        return self._ids[(tail, head)]

    def to_list(self) -> list[dict]:
        return [{"arc_id": i, "tail": t, "head": h} for i, (t, h) in enumerate(self.arcs)]

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_list(), **kwargs)


def arc_graph(G: Graph) -> tuple[Graph, ArcIndex]:
    """Arc-graph: vertices are the ordered pairs ``(u, v)`` of adjacent
    vertices (sorted lexicographically); ``(u, v) ~ (v, u)`` and
    ``(u, v) ~ (u, w)`` for ``w != v``.

    Each vertex ``u`` of degree ``d`` becomes a clique ``K_d`` of its
    outgoing arcs, and the two arcs of an edge are joined.
    """
    if G.m == 0:
        raise EmptyGraphError("arc-graph needs at least one edge")
    arcs = tuple((u, v) for u in range(G.n) for v in G.adjacency[u])
    index = ArcIndex(arcs)
    # arcs with tail u occupy the contiguous block start[u]..start[u+1]-1
    start = [0] * (G.n + 1)
    for u in range(G.n):
        start[u + 1] = start[u] + G.degree(u)
    adj = []
    for i, (u, v) in enumerate(arcs):
        nb = [j for j in range(start[u], start[u + 1]) if j != i]
        nb.append(index.arc_id(v, u))
        adj.append(nb)
    return Graph(adj), index


def subdivide(G: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    """Replace each listed edge ``uv`` by a path ``u - m - v``; the ``i``-th
    listed edge gets the new vertex ``n + i``."""
    chosen = []
    seen = set()
    for u, v in edges:
        e = G.check_edge(u, v)
        if e in seen:
            raise DuplicateEdgeError(f"edge {e} listed twice")
        seen.add(e)
        chosen.append(e)
    adj = [set(nb) for nb in G.adjacency]
    for i, (u, v) in enumerate(chosen):
        mid = G.n + i
        adj[u].discard(v)
        adj[v].discard(u)
        adj[u].add(mid)
        adj[v].add(mid)
        adj.append({u, v})
    return Graph(adj)


def line_graph(G: Graph) -> Graph:
    """Vertices are the edges of ``G`` in :meth:`Graph.edges` order."""
    if G.m == 0:
        raise EmptyGraphError("line graph needs at least one edge")
    edges = G.edge_list()
    incident: list[list[int]] = [[] for _ in range(G.n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    adj = []
    for i, (u, v) in enumerate(edges):
        adj.append({j for j in incident[u] + incident[v] if j != i})
    return Graph(adj)


def arc_to_subdivision_edge(G: Graph) -> list[int]:
    """For each arc id of ``arc_graph(G)``, the vertex of
    ``line_graph(subdivide(G, G.edges()))`` it corresponds to: arc ``(u, v)``
    is the half-edge ``(u, midpoint of uv)``."""
    edge_pos = {e: i for i, e in enumerate(G.edges())}
    S = subdivide(G, G.edges())
    s_pos = {e: i for i, e in enumerate(S.edges())}
    _, index = arc_graph(G)
    out = []
    for u, v in index.arcs:
        mid = G.n + edge_pos[(min(u, v), max(u, v))]
        out.append(s_pos[(u, mid)])
    return out


def matching_apex(G: Graph, matching: Sequence[tuple[int, int]]) -> Graph:
    """For the ``i``-th matching edge ``uv`` add vertex ``n + i`` adjacent to
    exactly ``u`` and ``v``."""
    used = set()
    edges = []
    for u, v in matching:
        e = G.check_edge(u, v)
        if e[0] in used or e[1] in used:
            raise NotAMatchingError(f"edge {e} shares an endpoint with an earlier edge")
        used.update(e)
        edges.append(e)
    adj = [list(nb) for nb in G.adjacency]
    for i, (u, v) in enumerate(edges):
        a = G.n + i
        adj[u].append(a)
        adj[v].append(a)
        adj.append([u, v])
    return Graph(adj)


# -- compensating trees --------------------------------------------------------


@dataclass(frozen=True)
class TreeVertex:
    """A vertex added to the host.  ``attach`` lists its neighbours (host
    vertices for the root, otherwise one earlier tree vertex, given by its
    position in the recipe); ``distance`` is its intended distance from every
    target vertex."""

    attach: tuple
    distance: int


@dataclass(frozen=True)
class BalancerPlan:
    x: int
    k: int
    ell: int
    y: int
    recipe: tuple[TreeVertex, ...]

    @property
    def order(self) -> int:
        return len(self.recipe)

    @property
    def target_distance(self) -> int:
        """Targets are the host vertices at this distance from the edge."""
        return 2 * self.k - 1

    @property
    def distance_sum(self) -> int:
        return sum(t.distance for t in self.recipe)

    def to_dict(self) -> dict:
        return {
            "x": self.x,
            "k": self.k,
            "ell": self.ell,
            "y": self.y,
            "order": self.order,
            "recipe": [
                {"vertex": i, "attach": list(t.attach), "distance": t.distance}
                for i, t in enumerate(self.recipe)
            ],
        }


_EDGE = "edge"  # attach marker: adjacent to both endpoints of the host edge


def _path(first: int, last: int) -> list[TreeVertex]:
    if last < first:
        return []
    rec = [TreeVertex((_EDGE,), first)]
    for d in range(first + 1, last + 1):
        rec.append(TreeVertex((len(rec) - 1,), d))
    return rec


def _hang(rec: list[TreeVertex], distance: int, first: int) -> None:
    """Append a vertex at ``distance`` from the targets: adjacent to the host
    edge when ``distance == first``, else pendant to path vertex at
    ``distance - 1``."""
    if distance == first:
        rec.append(TreeVertex((_EDGE,), distance))
        return
    parent = distance - 1 - first
    if not 0 <= parent < len(rec) or rec[parent].distance != distance - 1:
        raise BadParameterError(f"no path vertex at distance {distance - 1}")
    rec.append(TreeVertex((parent,), distance))


def balancer_plan(x: int, k: int, enforce_bound: bool = True) -> BalancerPlan:
    """Tree whose distance sum from every vertex at distance ``2k - 1`` of the
    host edge is exactly ``x``.

    ``ell`` is the largest integer with ``C(ell, 2) - C(2k, 2) <= x`` and
    ``y = x + C(2k, 2) - C(ell, 2)`` (so ``0 <= y < ell``).  A path carries the
    distances ``2k, ..., ell - 1``; the remainder ``y`` is one extra pendant
    (``y >= 2k + 1``), or, for ``0 < y < 2k + 1``, the path is shortened by
    its last vertex and two extra vertices carry ``ell - 1 + y``.

    ``x > 16k^2`` guarantees the construction fits; ``enforce_bound=False``
    also accepts smaller ``x`` and raises BadParameterError if it does not.
    """
    if k < 1:
        raise BadParameterError(f"k must be positive, got {k}")
    if x <= 0:
        raise XTooSmallError(f"x must be positive, got {x}")
    if enforce_bound and x <= 16 * k * k:
        raise XTooSmallError(f"need x > 16k^2 = {16 * k * k}, got {x}")
    first = 2 * k
    base = comb(first, 2)
    ell = first
    while comb(ell + 1, 2) - base <= x:
        ell += 1
    y = x + base - comb(ell, 2)
    if y == 0:
        rec = _path(first, ell - 1)
    elif y >= first + 1:
        rec = _path(first, ell - 1)
        _hang(rec, y, first)
    else:
        rec = _path(first, ell - 2)
        need = ell - 1 + y
        # smallest first distance such that both fit in [first, ell - 1],
        # preferring pendants (first + 1) over extra roots (first)
        lo = max(first + 1, need - (ell - 1))
        if need - lo < first + 1:
            lo = max(first, need - (ell - 1))
        a, b = lo, need - lo
        if not first <= a <= b <= ell - 1:
            raise BadParameterError(f"x={x} too small to balance at k={k}")
        _hang(rec, a, first)
        _hang(rec, b, first)
    plan = BalancerPlan(x, k, ell, y, tuple(rec))
    if plan.distance_sum != x:
        raise BadParameterError(f"x={x} too small to balance at k={k}")
    return plan


def append_balancer(
    G: Graph, u: int, v: int, x: int, k: int, enforce_bound: bool = True
) -> tuple[Graph, BalancerPlan]:
    """Attach :func:`balancer_plan` ``(x, k)`` to the edge ``uv``.

    Recipe entry ``i`` becomes vertex ``G.n + i``.  Every host vertex ``w``
    with ``min(d(w, u), d(w, v)) = 2k - 1`` then has distance sum exactly
    ``x`` to the added vertices.
    """
    u, v = G.check_edge(u, v)
    plan = balancer_plan(x, k, enforce_bound)
    adj = [list(nb) for nb in G.adjacency]
    for i, t in enumerate(plan.recipe):
        me = G.n + i
        if t.attach == (_EDGE,):
            nbrs = [u, v]
        else:
            nbrs = [G.n + t.attach[0]]
        adj.append(nbrs)
        for z in nbrs:
            adj[z].append(me)
    return Graph(adj), plan


Q_PATH_FIRST = 12
Q_PATH_LAST = 122
Q_PENDANT_AT = 22


def construct_q(G: Graph, e: tuple[int, int]) -> Graph:
    """Hang a 111-vertex path ``p12 .. p122`` off edge ``e`` (``p12``
    adjacent to both endpoints) plus a pendant on ``p22``.

    ``p_j`` is vertex ``G.n + j - 12``; the pendant is ``G.n + 111``.  A host
    vertex at distance 11 from ``e`` sees the added vertices at distances
    12..122 and 23, i.e. a total of 7460.
    """
    u, v = G.check_edge(*e)
    n = G.n
    adj = [list(nb) for nb in G.adjacency]
    npath = Q_PATH_LAST - Q_PATH_FIRST + 1
    for j in range(npath):
        adj.append([])
    adj[u].append(n)
    adj[v].append(n)
    adj[n] += [u, v]
    for j in range(npath - 1):
        adj[n + j].append(n + j + 1)
        adj[n + j + 1].append(n + j)
    pend = n + npath
    anchor = n + Q_PENDANT_AT - Q_PATH_FIRST
    adj.append([anchor])
    adj[anchor].append(pend)
    return Graph(adj)
