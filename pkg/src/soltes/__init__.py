"""Exact Wiener-index analysis of vertex deletion (the Šoltés problem).

The main entry points are re-exported here::

    >>> from soltes import cycle, classify_vertices
    >>> classify_vertices(cycle(11)).soltes_count
    11
"""

from .errors import (
    BadParameterError,
    CutVertexError,
    DisconnectedGraphError,
    DuplicateEdgeError,
    EdgeNotFoundError,
    EmptyGraphError,
    EmptyStreamError,
    Graph6Error,
    GraphError,
    MalformedHeaderError,
    NonCanonicalPaddingError,
    NotAMatchingError,
    SelfLoopError,
    TrailingGarbageError,
    VertexOutOfRangeError,
    XTooSmallError,
)
from .graph import Graph, delete_vertex, from_edge_list, is_connected, read_edgelist, write_edgelist
from .graph6 import decode_graph6, encode_graph6
from .metrics import (
    LayerProfile,
    Status,
    VertexClassification,
    bfs_layers,
    classify_vertices,
    delta_w,
    diff,
    structural_predicates,
    transmission,
    wiener,
    wiener_cycle,
    wiener_path,
)
from .transforms import (
    ArcIndex,
    BalancerPlan,
    append_balancer,
    arc_graph,
    balancer_plan,
    construct_q,
    line_graph,
    matching_apex,
    subdivide,
)
from .families import (
    circular_ladder_k4,
    complete,
    cycle,
    fig4_left,
    fig4_right,
    fig5_60,
    fig6_69,
    generate,
    path,
    triangle_bipartite,
)
from .bounds import (
    decomposition_7460,
    diff_lower_bound_7,
    gap_check,
    layer_count,
    moore_bound,
    pair_counts,
    sigma_upper_bound_7,
)
from .census import ScanFilter, ScanReport, negative_soltes_check, scan, vt_diameter_prefilter

__version__ = "0.1.0"
