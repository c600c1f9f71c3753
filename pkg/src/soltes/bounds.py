"""Moore-bound arithmetic and the counting estimates for arc-graphs of
7-regular graphs of girth ``g = 2k`` near the Moore bound.

Everything is exact: Python integers and :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import BadParameterError


@dataclass(frozen=True)
class MooreParams:
    d: int
    g: int
    N: int

    @property
    def k(self) -> int:
        return self.g // 2


def _check_dg(d: int, g: int) -> None:
    if d < 3:
        raise BadParameterError(f"degree must be >= 3, got {d}")
    if g < 4 or g % 2:
        raise BadParameterError(f"girth must be even and >= 4, got {g}")


def moore_bound(d: int, g: int) -> int:
    """Minimum order of a ``d``-regular graph of even girth ``g``:
    ``2 * sum_{i < g/2} (d-1)^i``."""
    _check_dg(d, g)
    return 2 * sum((d - 1) ** i for i in range(g // 2))


def moore_params(d: int, g: int) -> MooreParams:
    return MooreParams(d, g, moore_bound(d, g))


def layer_count(d: int, j: int) -> int:
    """Vertices at distance ``j`` on one side of an arc-graph edge in the
    tree-like region: ``(d-1)^ceil(j/2)``."""
    if d < 3 or j < 0:
        raise BadParameterError(f"need d >= 3 and j >= 0, got d={d}, j={j}")
    return (d - 1) ** (-(-j // 2))


def pair_counts(d: int, i: int) -> tuple[int, int]:
    """Pairs whose unique shortest path crosses a fixed arc-graph edge, at
    distance ``2i + 2`` (``even``) and ``2i + 1`` (``odd``), by convolving the
    two sides' layer sizes."""
    if i < 0:
        raise BadParameterError(f"i must be >= 0, got {i}")
    even = sum(layer_count(d, j) * layer_count(d, 2 * i + 1 - j) for j in range(2 * i + 1))
    odd = sum(layer_count(d, j) * layer_count(d, 2 * i - j) for j in range(2 * i))
    return even, odd


def pair_counts_closed_7(i: int) -> tuple[int, int]:
    """Closed forms for ``d = 7``: ``(2i+1) 6^(i+1)`` and ``7i 6^i``."""
    return (2 * i + 1) * 6 ** (i + 1), 7 * i * 6**i


def diff_lower_bound_sum_7(k: int) -> int:
    g = 2 * k
    even = sum((2 * i + 1) * 6 ** (i + 1) * (g - (2 * i + 2)) for i in range(k - 1))
    odd = sum(7 * i * 6**i * (g - (2 * i + 1)) for i in range(1, k))
    return 2 * even + 2 * odd


def diff_lower_bound_closed_7(k: int) -> Fraction:
    return Fraction(2 * (6**k * (365 * k - 606) + 840 * k + 606), 125)


@dataclass(frozen=True)
class DiffBound:
    k: int
    value: int
    closed_form: Fraction

    @property
    def routes_agree(self) -> bool:
        return self.closed_form == self.value


def diff_lower_bound_7(k: int) -> DiffBound:
    """Lower bound on the detour sum at a vertex of the arc-graph, evaluated
    as a double sum and as its closed form."""
    if k < 1:
        raise BadParameterError(f"k must be >= 1, got {k}")
    return DiffBound(k, diff_lower_bound_sum_7(k), diff_lower_bound_closed_7(k))


def sigma_upper_bound_7(k: int) -> Fraction:
    """Upper bound ``(6^k (700.7k - 365) + 365) / 125`` on the transmission,
    with 700.7 taken as exactly 7007/10."""
    if k < 1:
        raise BadParameterError(f"k must be >= 1, got {k}")
    return (6**k * (Fraction(7007, 10) * k - 365) + 365) / 125


def gap_check(k: int, threshold: int = 1000) -> bool:
    """True iff ``diff_lb(k) - sigma_ub(k) > threshold * k^2``."""
    gap = diff_lower_bound_7(k).value - sigma_upper_bound_7(k)
    return gap > threshold * k * k


@dataclass(frozen=True)
class Decomposition7460:
    path_sum: int
    pendant: int
    total: int
    added_vertices: int

    @property
    def ok(self) -> bool:
        return self.total == 7460 and self.path_sum == comb(123, 2) - comb(12, 2)


def decomposition_7460() -> Decomposition7460:
    """``7460 = 23 + sum_{j=12}^{122} j``, read off the distances that
    :func:`soltes.transforms.construct_q` actually realises."""
    # imported lazily: bounds stays free of graph machinery otherwise
    from .families import cycle
    from .metrics import bfs_layers
    from .transforms import construct_q

    host = cycle(46)
    Q = construct_q(host, (0, 1))
    # vertex 12 of C_46 is at distance 11 from the edge 01
    dist = bfs_layers(Q, 12).dist
    added = list(range(host.n, Q.n))
    path_sum = int(sum(dist[v] for v in added[:-1]))
    pendant = int(dist[added[-1]])
    return Decomposition7460(path_sum, pendant, path_sum + pendant, len(added))


def bounds_record(d: int, g: int, threshold: int = 1000) -> dict:
    """Summary used by the ``bounds`` command.  The detour and transmission
    estimates exist only for ``d = 7``; other degrees report null."""
    rec = {"schema": 1, "d": d, "g": g, "moore": moore_bound(d, g)}
    k = g // 2
    if d == 7:
        ub = sigma_upper_bound_7(k)
        rec.update(
            diff_lb=diff_lower_bound_7(k).value,
            sigma_ub=f"{ub.numerator}/{ub.denominator}",
            gap_ok=gap_check(k, threshold),
        )
    else:
        rec.update(diff_lb=None, sigma_ub=None, gap_ok=None)
    return rec
