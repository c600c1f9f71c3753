"""Streaming classification of graph collections.

Records are read and decoded on the calling thread, pass cheap structural
prefilters, and the survivors are classified on a thread pool (per graph for
small graphs, per BFS source for large ones).  Reports list records in input
order and do not depend on the number of workers.
"""

from __future__ import annotations

import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import islice
from typing import Iterable, Iterator, TextIO

from .errors import BadParameterError, EmptyStreamError, GraphError, Graph6Error
from .graph import Graph, is_connected, iter_edgelist
from .graph6 import decode_graph6
from .metrics import classify_vertices, eccentricities

log = logging.getLogger(__name__)

LARGE_GRAPH_ORDER = 512
REASONS = ("decode_error", "trivial", "disconnected", "min_degree", "vt_diameter_bound", "diameter")


def vt_diameter_prefilter(n: int, d: int) -> bool:
    """True when a connected ``d``-regular vertex-transitive graph of order
    ``n`` must have diameter at most 3.

    Diameter >= 4 forces two disjoint closed neighbourhoods plus a separating
    layer, whose size is at least the connectivity, itself at least
    ``2(d+1)/3`` for vertex-transitive graphs.
    """
    return n < 2 * (d + 1) + -(-2 * (d + 1) // 3)


@dataclass(frozen=True)
class ScanFilter:
    min_degree_at_least: int | None = None
    require_diameter_at_least: int | None = None
    classify_fully: bool = True
    # the source promises every record is vertex-transitive
    vertex_transitive: bool = False

    def __post_init__(self):
        if (
            self.min_degree_at_least is None
            and self.require_diameter_at_least is None
            and not self.classify_fully
        ):
            raise BadParameterError("scan filter has no active criterion")


@dataclass(frozen=True)
class ScanRecord:
    index: int
    n: int
    m: int
    wiener: int | None = None
    z: int | str | None = None
    soltes: int | None = None
    cut_vertices: int | None = None
    negative_soltes: bool | None = None
    soltes_graph: bool | None = None


@dataclass
class ScanReport:
    total: int = 0
    prefiltered: dict = field(default_factory=lambda: dict.fromkeys(REASONS, 0))
    decode_errors: list = field(default_factory=list)
    classified: list = field(default_factory=list)

    @property
    def soltes_graphs(self) -> list[ScanRecord]:
        return [r for r in self.classified if r.soltes_graph]

    @property
    def constant_z(self) -> list[ScanRecord]:
        return [r for r in self.classified if isinstance(r.z, int)]

    @property
    def negative_soltes(self) -> list[ScanRecord]:
        return [r for r in self.classified if r.negative_soltes]

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "total": self.total,
            "prefiltered": dict(self.prefiltered),
            "decode_errors": list(self.decode_errors),
            "classified": [asdict(r) for r in self.classified],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1) + "\n"


def negative_soltes_check(G: Graph) -> bool:
    """True iff no vertex is a cut vertex and ``W(G) <= W(G - v)`` for all ``v``."""
    return classify_vertices(G).is_negative_soltes


# -- reading -------------------------------------------------------------------


def graph6_records(stream: Iterable[str]) -> Iterator[str]:
    for line in stream:
        line = line.strip()
        if line:
            yield line


def edgelist_records(stream: Iterable[str]) -> Iterator[list[str]]:
    """Split a concatenated edge-list stream into one block of lines per graph.

    An unparsable header becomes its own (failing) block so the reader can
    resynchronise on the next line.
    """
    pending: list[str] = []
    need = None
    for line in stream:
        if not line.split("#", 1)[0].split():
            continue
        if need is None:
            tok = line.split("#", 1)[0].split()
            try:
                _, m = (int(t) for t in tok)
            except ValueError:
                yield [line]
                continue
            pending, need = [line], m
        else:
            pending.append(line)
            need -= 1
        if need == 0:
            yield pending
            pending, need = [], None
    if pending:
        yield pending


def _decode(record, fmt: str) -> Graph:
    if isinstance(record, Graph):
        return record
    if fmt == "graph6":
        return decode_graph6(record)
    if fmt == "edgelist":
        graphs = list(iter_edgelist(record))
        if len(graphs) != 1:
            raise GraphError("edge-list block does not hold exactly one graph")
        return graphs[0]
    raise BadParameterError(f"unknown format {fmt!r}")


def open_records(fh: TextIO, fmt: str) -> Iterator:
    if fmt == "graph6":
        return graph6_records(fh)
    if fmt == "edgelist":
        return edgelist_records(fh)
    raise BadParameterError(f"unknown format {fmt!r}")


# -- scanning ------------------------------------------------------------------


def _prefilter(G: Graph, flt: ScanFilter) -> str | None:
    if G.n < 2:
        return "trivial"
    if not is_connected(G):
        return "disconnected"
    if flt.min_degree_at_least is not None and G.min_degree < flt.min_degree_at_least:
        return "min_degree"
    if flt.require_diameter_at_least is not None:
        if (
            flt.vertex_transitive
            and flt.require_diameter_at_least >= 4
            and G.is_regular
            and vt_diameter_prefilter(G.n, G.min_degree)
        ):
            return "vt_diameter_bound"
        if int(eccentricities(G).max()) < flt.require_diameter_at_least:
            return "diameter"
    return None


def _classify(index: int, G: Graph, flt: ScanFilter, workers: int) -> ScanRecord:
    if not flt.classify_fully:
        return ScanRecord(index, G.n, G.m)
    c = classify_vertices(G, workers=workers)
    z = c.constant_delta
    return ScanRecord(
        index=index,
        n=G.n,
        m=G.m,
        wiener=c.wiener,
        z="non-constant" if z is None else z,
        soltes=c.soltes_count,
        cut_vertices=sum(1 for r in c.vertices if r.delta_w is None),
        negative_soltes=c.is_negative_soltes,
        soltes_graph=c.is_soltes_graph,
    )


def scan(
    source: Iterable,
    filter: ScanFilter | None = None,
    workers: int = 1,
    fmt: str = "graph6",
    batch_size: int | None = None,
) -> ScanReport:
    """Classify every record of ``source`` that survives ``filter``.

    ``source`` yields graph6 lines, edge-list blocks (``fmt="edgelist"``) or
    :class:`Graph` objects.  Undecodable records are counted, logged with
    their index, and skipped.
    """
    flt = filter or ScanFilter()
    workers = max(1, int(workers))
    batch_size = batch_size or 64 * workers
    report = ScanReport()
    it = iter(source)
    index = 0
    pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while True:
            batch = list(islice(it, batch_size))
            if not batch:
                break
            small, large = [], []
            for record in batch:
                i = index
                index += 1
                report.total += 1
                try:
                    G = _decode(record, fmt)
                except (Graph6Error, GraphError) as exc:
                    log.warning("record %d: %s", i, exc)
                    report.decode_errors.append(i)
                    report.prefiltered["decode_error"] += 1
                    continue
                reason = _prefilter(G, flt)
                if reason is not None:
                    report.prefiltered[reason] += 1
                    continue
                (large if G.n >= LARGE_GRAPH_ORDER else small).append((i, G))
            done = [_classify(i, G, flt, workers) for i, G in large]
            if pool is None:
                done += [_classify(i, G, flt, 1) for i, G in small]
            else:
                done += pool.map(lambda item: _classify(item[0], item[1], flt, 1), small)
            report.classified.extend(sorted(done, key=lambda r: r.index))
    finally:
        if pool is not None:
            pool.shutdown()
    if report.total == 0:
        raise EmptyStreamError("no records in input")
    return report
