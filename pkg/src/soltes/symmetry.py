"""Automorphism orbits, used to analyse one vertex per orbit.

``W(G) - W(G - v)``, ``sigma(v)`` and ``diff(G, v)`` are invariant under
automorphisms, so the deletion analysis only needs one representative of
each orbit.  Orbits come from nauty through the optional ``pynauty``
package; without it, or above :data:`MAX_ORDER`, every vertex is its own
representative.
"""

from __future__ import annotations

import importlib.util

import numpy as np

from .graph import Graph

HAVE_NAUTY = importlib.util.find_spec("pynauty") is not None

# nauty's search cost on large regular graphs with few automorphisms
# overtakes the deletion analysis it would save
MAX_ORDER = 256


def orbit_representatives(G: Graph) -> np.ndarray:
    """``rep[v]`` is the smallest vertex in the orbit of ``v`` (identity when
    orbits are not computed)."""
    if not HAVE_NAUTY or G.n < 3 or G.m == 0 or G.n > MAX_ORDER:
        return np.arange(G.n, dtype=np.int64)
    import pynauty

    g = pynauty.Graph(G.n, adjacency_dict={v: list(nb) for v, nb in enumerate(G.adjacency) if nb})
    orbits = pynauty.autgrp(g)[3]
    return np.asarray(orbits, dtype=np.int64)
