import csv
import io
import json
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from soltes import (
    BadParameterError,
    CutVertexError,
    DisconnectedGraphError,
    Status,
    VertexOutOfRangeError,
    arc_graph,
    bfs_layers,
    circular_ladder_k4,
    classify_vertices,
    complete,
    cycle,
    delta_w,
    diff,
    fig4_right,
    fig5_60,
    from_edge_list,
    path,
    structural_predicates,
    transmission,
    triangle_bipartite,
    wiener,
    wiener_cycle,
    wiener_path,
)
from soltes.metrics import dominated_pairs, eccentricities, transmissions, wiener_after_deletion
from soltes.symmetry import orbit_representatives

from .oracles import brute_delta, brute_diff, brute_sigma, from_nx, nx_wiener, to_nx

# -- distances -----------------------------------------------------------------


@pytest.mark.parametrize("root", range(6))
def test_bfs_cycle6(root):
    prof = bfs_layers(cycle(6), root)
    assert prof.layer_sizes == (1, 2, 2, 1) and prof.eccentricity == 3


def test_bfs_k4_and_p4():
    assert bfs_layers(complete(4), 2).layer_sizes == (1, 3)
    prof = bfs_layers(path(4), 0)
    assert prof.layer_sizes == (1, 1, 1, 1) and prof.eccentricity == 3
    assert prof.dist.tolist() == [0, 1, 2, 3]


def test_bfs_unreachable_and_range():
    prof = bfs_layers(from_edge_list(4, [(0, 1), (2, 3)]), 0)
    assert prof.dist.tolist() == [0, 1, -1, -1]
    with pytest.raises(VertexOutOfRangeError):
        bfs_layers(cycle(4), 4)


def test_wiener_examples():
    assert wiener(cycle(11)) == 165 == 11 * (11**2 - 1) // 8
    assert wiener(complete(4)) == 6
    assert wiener(path(10)) == 165
    assert wiener(from_edge_list(1, [])) == 0


def test_wiener_disconnected():
    with pytest.raises(DisconnectedGraphError):
        wiener(from_edge_list(3, [(0, 1)]))


def test_closed_forms():
    assert wiener_cycle(11) == wiener_path(10) == 165
    assert wiener_path(4) == 10
    for n in range(3, 301):
        assert wiener_cycle(n) == wiener(cycle(n))
    for n in range(1, 301):
        assert wiener_path(n) == wiener(path(n))


def test_cycle_path_coincidence_only_at_11():
    assert [n for n in range(3, 501) if wiener_cycle(n) == wiener_path(n - 1)] == [11]


def test_transmission_examples():
    assert {transmission(cycle(11), v) for v in range(11)} == {30}
    assert {transmission(triangle_bipartite(1), v) for v in range(26)} == {39}


def test_transmission_ladder_matches_bfs_oracle():
    # the measured value is 2*floor(N^2/4) + (k+2) with N = 2k+4
    for k in (1, 2, 3):
        G = circular_ladder_k4(k)
        N = 2 * k + 4
        assert {transmission(G, v) for v in range(G.n)} == {brute_sigma(G, 0)}
        assert brute_sigma(G, 0) == 2 * (N * N // 4) + k + 2


# -- deletion ------------------------------------------------------------------


def test_diff_examples():
    tree = from_edge_list(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)])
    for leaf in (0, 2, 4, 5):
        assert diff(tree, leaf) == 0
    assert {diff(cycle(11), v) for v in range(11)} == {30}
    G = circular_ladder_k4(3)
    assert {diff(G, v) for v in range(G.n)} == {12}


def test_diff_cut_vertex():
    with pytest.raises(CutVertexError):
        diff(path(5), 2)


def test_delta_w_examples():
    assert {delta_w(complete(6), v) for v in range(6)} == {5}
    assert {delta_w(cycle(11), v) for v in range(11)} == {0}
    assert delta_w(path(5), 2) is None
    G = circular_ladder_k4(1)
    # sigma 21, diff 2
    assert {delta_w(G, v) for v in range(G.n)} == {19}
    assert brute_delta(G) == [19] * 12


def test_delta_w_complete_range():
    for z in range(1, 30):
        K = complete(z + 1)
        assert all(delta_w(K, v) == z for v in range(z + 1))


def test_wiener_after_deletion():
    assert wiener_after_deletion(cycle(11), 4) == 165
    assert wiener_after_deletion(path(4), 1) is None


# -- classification ------------------------------------------------------------


def test_classify_examples():
    c = classify_vertices(fig5_60())
    assert c.soltes_count == 40 and c.alpha == Fraction(2, 3)
    assert classify_vertices(fig4_right()).soltes_count == 6
    k4 = classify_vertices(complete(4))
    assert k4.soltes_count == 0
    assert [r.delta_w for r in k4.vertices] == [3] * 4
    assert k4.constant_delta == 3


def test_classify_statuses_and_cuts():
    star = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
    c = classify_vertices(star)
    assert c.vertices[0].status is Status.CUT_VERTEX and c.vertices[0].delta_w is None
    assert [r.delta_w for r in c.vertices[1:]] == [5, 5, 5]
    assert c.constant_delta is None
    assert not c.is_negative_soltes
    c11 = classify_vertices(cycle(11))
    assert c11.is_soltes_graph and c11.is_negative_soltes
    assert c11.soltes_vertices == list(range(11))


def test_classify_disconnected():
    with pytest.raises(DisconnectedGraphError):
        classify_vertices(from_edge_list(4, [(0, 1), (2, 3)]))


def test_classify_single_vertex_and_edge():
    c = classify_vertices(path(2))
    assert [r.delta_w for r in c.vertices] == [1, 1]
    c1 = classify_vertices(from_edge_list(1, []))
    assert c1.wiener == 0


def test_report_serialisation():
    c = classify_vertices(from_edge_list(4, [(0, 1), (0, 2), (0, 3)]))
    data = json.loads(c.to_json())
    assert data["schema"] == 1 and data["n"] == 4 and data["m"] == 3 and data["wiener"] == 9
    assert data["vertices"][0]["delta_w"] == "cut"
    assert data["vertices"][1] == {"v": 1, "sigma": 5, "diff": 0, "delta_w": 5, "status": "positive"}
    rows = list(csv.DictReader(io.StringIO(c.to_csv())))
    assert rows[0]["delta_w"] == "cut" and rows[2]["sigma"] == "5"
    assert set(rows[0]) >= {"v", "sigma", "diff", "delta_w"}


def test_parallel_matches_serial():
    G = from_nx(nx.connected_watts_strogatz_graph(150, 4, 0.3, seed=5))
    serial = classify_vertices(G, workers=1)
    for w in (2, 8):
        assert classify_vertices(G, workers=w).to_json() == serial.to_json()


@st.composite
def connected_graphs(draw, max_n=16):
    n = draw(st.integers(1, max_n))
    # a random spanning tree plus extra edges keeps the graph connected
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    if n > 1:
        extra = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=3 * n))
        edges |= {(min(a, b), max(a, b)) for a, b in extra if a != b}
    return from_edge_list(n, sorted(edges))


@given(connected_graphs())
@settings(max_examples=300, deadline=None)
def test_identity_and_handshake(G):
    c = classify_vertices(G, verify=True)
    assert 2 * c.wiener == sum(r.sigma for r in c.vertices) == int(transmissions(G).sum())
    for r in c.vertices:
        if r.delta_w is not None:
            assert r.delta_w == r.sigma - r.diff
            assert r.diff >= 0
        assert (r.status is Status.SOLTES) == (r.delta_w == 0)
        assert (r.status is Status.POSITIVE) == (r.delta_w is not None and r.delta_w > 0)
        assert (r.status is Status.NEGATIVE) == (r.delta_w is not None and r.delta_w < 0)


@given(connected_graphs(max_n=12))
@settings(max_examples=150, deadline=None)
def test_against_networkx(G):
    c = classify_vertices(G)
    assert c.wiener == nx_wiener(to_nx(G))
    assert [r.delta_w for r in c.vertices] == brute_delta(G)
    for r in c.vertices:
        assert r.sigma == brute_sigma(G, r.v)
        if r.delta_w is not None:
            assert r.diff == brute_diff(G, r.v)


# -- structural predicates -----------------------------------------------------


def test_predicates_examples():
    k4 = structural_predicates(complete(4))
    assert k4.has_dominated_pair and k4.diameter == 1
    assert k4.has_closed_dominated_pair and not k4.has_open_dominated_pair
    c6 = structural_predicates(cycle(6))
    assert not c6.has_dominated_pair
    assert c6.diameter == c6.radius == 3 and c6.is_self_centered
    p5 = structural_predicates(path(5))
    assert (p5.diameter, p5.radius, p5.is_self_centered) == (4, 2, False)
    assert p5.min_degree == 1


def test_dominated_pairs_kinds():
    c4 = cycle(4)
    assert (0, 2) in dominated_pairs(c4, "open")
    assert dominated_pairs(c4, "closed") == []
    assert dominated_pairs(complete(3), "open") == []
    with pytest.raises(BadParameterError):
        dominated_pairs(c4, "loose")


def test_eccentricities_path():
    assert eccentricities(path(5)).tolist() == [4, 3, 2, 3, 4]


# -- orbit reduction -----------------------------------------------------------


def test_orbit_representatives():
    assert orbit_representatives(cycle(9)).tolist() == [0] * 9
    assert orbit_representatives(path(5)).tolist() == [0, 1, 2, 1, 0]
    star = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
    assert orbit_representatives(star).tolist() == [0, 1, 1, 1]


@given(connected_graphs())
@settings(max_examples=200, deadline=None)
def test_symmetry_reduction_is_exact(G):
    assert classify_vertices(G) == classify_vertices(G, symmetry=False)


def test_symmetry_reduction_on_large_arc_graph():
    A, _ = arc_graph(from_nx(nx.circulant_graph(40, [1, 5, 12])))
    assert classify_vertices(A, workers=2) == classify_vertices(A, symmetry=False)
