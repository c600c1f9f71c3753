"""Exact distance statistics and the vertex-deletion analysis.

Conventions: the Wiener index ``W(G)`` sums ``d(u, v)`` over *unordered*
pairs; the transmission ``sigma(v)`` sums distances from ``v``; the detour
``diff(G, v)`` sums, over unordered pairs of ``G - v``, the increase
``d_{G-v} - d_G``.  Whenever ``G - v`` is connected,

    W(G) - W(G - v) = sigma(v) - diff(G, v).
"""

from __future__ import annotations

import csv
import enum
import io
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from . import _kernels
from .errors import BadParameterError, CutVertexError, DisconnectedGraphError
from .graph import Graph, delete_vertex, is_connected
from .symmetry import orbit_representatives

UNREACHABLE = -1
SCHEMA_VERSION = 1

# below this order the thread pool costs more than it saves
_PARALLEL_MIN_ORDER = 64


@dataclass(frozen=True)
class LayerProfile:
    root: int
    dist: np.ndarray
    layer_sizes: tuple[int, ...]
    eccentricity: int

    @property
    def reached(self) -> int:
        return sum(self.layer_sizes)


def bfs_layers(G: Graph, root: int) -> LayerProfile:
    """Distances from ``root``; unreachable vertices get :data:`UNREACHABLE`."""
    G._check_vertex(root)
    indptr, indices = G.csr
    dist = np.empty(G.n, np.int64)
    order = np.empty(G.n, np.int64)
    reached = _kernels.bfs(indptr, indices, root, -1, dist, order)
    ecc = int(dist[order[reached - 1]])
    sizes = np.bincount(dist[dist >= 0], minlength=ecc + 1)
    dist.flags.writeable = False
    return LayerProfile(root, dist, tuple(int(c) for c in sizes), ecc)


def _require_connected(G: Graph) -> None:
    if not is_connected(G):
        raise DisconnectedGraphError(f"{G!r} is not connected")


def _sources(G: Graph, skip: int = -1) -> tuple[np.ndarray, np.ndarray] | None:
    indptr, indices = G.csr
    sigma = np.zeros(G.n, np.int64)
    ecc = np.zeros(G.n, np.int64)
    if not _kernels.all_sources(indptr, indices, skip, sigma, ecc):
        return None
    return sigma, ecc


def wiener(G: Graph) -> int:
    if G.n <= 1:
        return 0
    res = _sources(G)
    if res is None:
        raise DisconnectedGraphError(f"{G!r} is not connected")
    return int(res[0].sum()) // 2


def transmission(G: Graph, v: int) -> int:
    G._check_vertex(v)
    prof = bfs_layers(G, v)
    if prof.reached != G.n:
        raise DisconnectedGraphError(f"{G!r} is not connected")
    return int(prof.dist.sum())


def transmissions(G: Graph) -> np.ndarray:
    if G.n == 0:
        return np.zeros(0, np.int64)
    res = _sources(G)
    if res is None:
        raise DisconnectedGraphError(f"{G!r} is not connected")
    return res[0]


# -- deletion analysis -------------------------------------------------------


@dataclass(frozen=True)
class _Deletion:
    sigma: np.ndarray
    detour: np.ndarray  # unordered-pair sums; meaningless where cut
    cut: np.ndarray


def _run_detours(G: Graph, targets: np.ndarray, workers: int) -> _Deletion:
    n = G.n
    indptr, indices = G.csr

    def chunk(lo: int, hi: int):
        detour = np.zeros(n, np.int64)
        cut = np.zeros(n, np.bool_)
        sigma = np.zeros(n, np.int64)
        _kernels.deletion_detours(indptr, indices, lo, hi, targets, detour, cut, sigma)
        return detour, cut, sigma

    if workers <= 1 or n < _PARALLEL_MIN_ORDER:
        parts = [chunk(0, n)]
    else:
        bounds = np.linspace(0, n, min(n, 4 * workers) + 1).astype(int)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(chunk, bounds[:-1], bounds[1:]))
    detour = np.zeros(n, np.int64)
    cut = np.zeros(n, np.bool_)
    sigma = np.zeros(n, np.int64)
    for d, c, s in parts:
        detour += d
        cut |= c
        sigma += s
    return _Deletion(sigma, detour // 2, cut)


def _deletion(G: Graph, targets=None, workers: int = 1) -> _Deletion:
    _require_connected(G)
    n = G.n
    if targets is None:
        mask = np.ones(n, np.bool_)
    else:
        mask = np.zeros(n, np.bool_)
        mask[list(targets)] = True
    if n == 0:
        return _Deletion(np.zeros(0, np.int64), np.zeros(0, np.int64), np.zeros(0, np.bool_))
    return _run_detours(G, mask, workers)


def diff(G: Graph, v: int) -> int:
    """Total detour created by deleting ``v``; always non-negative."""
    G._check_vertex(v)
    res = _deletion(G, [v])
    if res.cut[v]:
        raise CutVertexError(f"deleting vertex {v} disconnects the graph")
    return int(res.detour[v])


def wiener_after_deletion(G: Graph, v: int) -> int | None:
    """``W(G - v)`` by recomputing every distance, or None if it is disconnected."""
    H, _ = delete_vertex(G, v)
    if H.n <= 1:
        return 0
    res = _sources(H)
    return None if res is None else int(res[0].sum()) // 2


def delta_w(G: Graph, v: int) -> int | None:
    """``W(G) - W(G - v)``, or None when ``v`` is a cut vertex.

    Evaluated twice, by full recomputation and as ``sigma(v) - diff(G, v)``;
    a disagreement raises AssertionError.
    """
    G._check_vertex(v)
    res = _deletion(G, [v])
    after = wiener_after_deletion(G, v)
    if res.cut[v] or after is None:
        assert res.cut[v] and after is None, f"cut-vertex routes disagree at {v}"
        return None
    recomputed = wiener(G) - after
    via_detour = int(res.sigma[v]) - int(res.detour[v])
    assert recomputed == via_detour, f"delta_w routes disagree at {v}: {recomputed} != {via_detour}"
    return recomputed


class Status(str, enum.Enum):
    SOLTES = "soltes"
    POSITIVE = "positive"
    NEGATIVE = "negative"
    CUT_VERTEX = "cut"


@dataclass(frozen=True)
class VertexRecord:
    v: int
    sigma: int
    diff: int | None
    delta_w: int | None
    status: Status


@dataclass(frozen=True)
class VertexClassification:
    n: int
    m: int
    wiener: int
    vertices: tuple[VertexRecord, ...]

    def count(self, status: Status) -> int:
        return sum(1 for r in self.vertices if r.status is status)

    @property
    def soltes_count(self) -> int:
        return self.count(Status.SOLTES)

    @property
    def alpha(self) -> Fraction:
        return Fraction(self.soltes_count, self.n) if self.n else Fraction(0)

    @property
    def soltes_vertices(self) -> list[int]:
        return [r.v for r in self.vertices if r.status is Status.SOLTES]

    @property
    def constant_delta(self) -> int | None:
        """The common value of ``W(G) - W(G - v)`` if it is the same for every
        vertex (and no vertex is a cut vertex), else None."""
        values = {r.delta_w for r in self.vertices}
        if len(values) == 1 and None not in values:
            return values.pop()
        return None

    @property
    def is_soltes_graph(self) -> bool:
        return self.n > 1 and self.soltes_count == self.n

    @property
    def is_negative_soltes(self) -> bool:
        return all(r.delta_w is not None and r.delta_w <= 0 for r in self.vertices)

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "n": self.n,
            "m": self.m,
            "wiener": self.wiener,
            "alpha": float(self.alpha),
            "soltes": self.soltes_count,
            "vertices": [
                {
                    "v": r.v,
                    "sigma": r.sigma,
                    "diff": r.diff,
                    "delta_w": "cut" if r.delta_w is None else r.delta_w,
                    "status": r.status.value,
                }
                for r in self.vertices
            ],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["v", "sigma", "diff", "delta_w", "status"])
        for r in self.vertices:
            writer.writerow([
                r.v,
                r.sigma,
                "" if r.diff is None else r.diff,
                "cut" if r.delta_w is None else r.delta_w,
                r.status.value,
            ])
        return buf.getvalue()


def _status(dw: int | None) -> Status:
    if dw is None:
        return Status.CUT_VERTEX
    if dw == 0:
        return Status.SOLTES
    return Status.POSITIVE if dw > 0 else Status.NEGATIVE


def classify_vertices(
    G: Graph, workers: int | None = 1, verify: bool = False, symmetry: bool = True
) -> VertexClassification:
    """Per-vertex ``sigma``, ``diff`` and ``W(G) - W(G - v)``.

    ``workers`` threads share the BFS sources (None = all cores); the result
    does not depend on it.  With ``symmetry`` (and pynauty installed) the
    deletion is analysed once per automorphism orbit.  With ``verify`` every
    vertex is also recomputed from scratch on ``G - v`` and checked against
    ``sigma - diff``.
    """
    if workers is None:
        workers = os.cpu_count() or 1
    if symmetry and G.n:
        _require_connected(G)
        rep = orbit_representatives(G)
        res = _deletion(G, np.flatnonzero(rep == np.arange(G.n)), workers)
        res = _Deletion(res.sigma, res.detour[rep], res.cut[rep])
    else:
        res = _deletion(G, workers=workers)
    w = int(res.sigma.sum()) // 2
    records = []
    for v in range(G.n):
        if res.cut[v]:
            d = dw = None
        else:
            d = int(res.detour[v])
            dw = int(res.sigma[v]) - d
        if verify:
            after = wiener_after_deletion(G, v)
            expected = None if after is None else w - after
            assert expected == dw, f"vertex {v}: recomputation gives {expected}, detours give {dw}"
        records.append(VertexRecord(v, int(res.sigma[v]), d, dw, _status(dw)))
    return VertexClassification(G.n, G.m, w, tuple(records))


# -- structure ----------------------------------------------------------------


@dataclass(frozen=True)
class StructuralPredicates:
    has_dominated_pair: bool
    has_open_dominated_pair: bool
    has_closed_dominated_pair: bool
    min_degree: int
    diameter: int
    radius: int

    @property
    def is_self_centered(self) -> bool:
        return self.diameter == self.radius


def dominated_pairs(G: Graph, kind: str = "either") -> list[tuple[int, int]]:
    """Ordered pairs ``(v, v2)``, ``v != v2``, whose neighbourhoods nest.

    ``kind="open"``: ``N(v) <= N(v2)`` (forces ``v``, ``v2`` non-adjacent);
    ``kind="closed"``: ``N[v] <= N[v2]``; ``kind="either"``:
    ``N(v) - {v2} <= N(v2)``, the union of the two.
    """
    if kind not in ("open", "closed", "either"):
        raise BadParameterError(f"kind must be 'open', 'closed' or 'either', not {kind!r}")
    nbrs = [frozenset(nb) for nb in G.adjacency]
    out = []
    for v, v2 in combinations(range(G.n), 2):
        for a, b in ((v, v2), (v2, v)):
            op = nbrs[a] <= nbrs[b]
            cl = b in nbrs[a] and nbrs[a] - {b} <= nbrs[b]
            if {"open": op, "closed": cl, "either": op or cl}[kind]:
                out.append((a, b))
    out.sort()
    return out


def structural_predicates(G: Graph) -> StructuralPredicates:
    _require_connected(G)
    if G.n == 0:
        return StructuralPredicates(False, False, False, 0, 0, 0)
    _, ecc = _sources(G)
    return StructuralPredicates(
        has_dominated_pair=bool(dominated_pairs(G, "either")),
        has_open_dominated_pair=bool(dominated_pairs(G, "open")),
        has_closed_dominated_pair=bool(dominated_pairs(G, "closed")),
        min_degree=G.min_degree,
        diameter=int(ecc.max()),
        radius=int(ecc.min()),
    )


def eccentricities(G: Graph) -> np.ndarray:
    _require_connected(G)
    return _sources(G)[1] if G.n else np.zeros(0, np.int64)


def wiener_cycle(n: int) -> int:
    return n**3 // 8 if n % 2 == 0 else n * (n * n - 1) // 8


def wiener_path(n: int) -> int:
    return (n + 1) * n * (n - 1) // 6
