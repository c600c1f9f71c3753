"""Executable forms of the structural results on vertex deletion.

Each checker returns True when the graph is a counterexample.  Graphs that
do not meet a statement's hypotheses are never counterexamples; the suite
reports how many graphs each statement actually applied to.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .graph import Graph, is_connected
from .graph6 import encode_graph6
from .metrics import VertexClassification, classify_vertices, dominated_pairs, eccentricities


def is_cycle(G: Graph) -> bool:
    return G.n >= 3 and G.m == G.n and G.min_degree == G.max_degree == 2 and is_connected(G)


def min_degree_two_constant(G: Graph, c: VertexClassification) -> bool | None:
    """Minimum degree 2 and constant ``W(G - v)`` force a cycle."""
    if G.min_degree != 2 or c.constant_delta is None:
        return None
    return not is_cycle(G)


def diameter_two(G: Graph, c: VertexClassification) -> bool | None:
    """Diameter <= 2, ``n > 1``: some vertex is a cut vertex or lowers ``W``."""
    if G.n < 2 or int(eccentricities(G).max()) > 2:
        return None
    return not any(r.delta_w is None or r.delta_w > 0 for r in c.vertices)


def self_centered_three(G: Graph, c: VertexClassification) -> bool | None:
    """2-connected with diameter = radius = 3: some vertex lowers ``W``."""
    if G.n < 3 or any(r.delta_w is None for r in c.vertices):
        return None
    ecc = eccentricities(G)
    if ecc.max() != 3 or ecc.min() != 3:
        return None
    return not any(r.delta_w > 0 for r in c.vertices)


def dominated_vertex(G: Graph, c: VertexClassification) -> bool | None:
    """If ``N(v) - {v2} <= N(v2)`` for some ``v2 != v`` then deleting ``v``
    changes no distance, so ``diff = 0`` and ``W`` drops by ``sigma(v)``."""
    pairs = dominated_pairs(G, "either")
    if not pairs:
        return None
    for v, _ in pairs:
        r = c.vertices[v]
        if r.delta_w is None:
            continue
        if r.diff != 0 or r.delta_w != r.sigma or r.delta_w <= 0:
            return True
    return False


PROPOSITIONS: dict[str, Callable[[Graph, VertexClassification], bool | None]] = {
    "min-degree-two": min_degree_two_constant,
    "diameter-two": diameter_two,
    "self-centered-three": self_centered_three,
    "dominated-vertex": dominated_vertex,
}


@dataclass
class PropTally:
    applied: int = 0
    counterexamples: list = field(default_factory=list)


def run_suite(graphs: Iterable[Graph], names: Iterable[str] | None = None) -> dict[str, PropTally]:
    """Check the named statements (default: all) on connected graphs of the
    corpus; counterexamples are recorded as graph6 strings."""
    names = list(names or PROPOSITIONS)
    tallies = {name: PropTally() for name in names}
    for G in graphs:
        if G.n < 1 or not is_connected(G):
            continue
        c = classify_vertices(G)
        for name in names:
            verdict = PROPOSITIONS[name](G, c)
            if verdict is None:
                continue
            tallies[name].applied += 1
            if verdict:
                tallies[name].counterexamples.append(encode_graph6(G))
    return tallies
