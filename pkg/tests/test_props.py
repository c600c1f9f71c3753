from soltes import classify_vertices, complete, cycle, from_edge_list, path
from soltes.families import fig4_right, triangle_bipartite
from soltes.props import (
    PROPOSITIONS,
    diameter_two,
    dominated_vertex,
    is_cycle,
    min_degree_two_constant,
    run_suite,
    self_centered_three,
)
from soltes.smallgraphs import all_graphs, connected_graphs, min_degree_two_graphs, random_connected_graphs


def check(fn, G):
    return fn(G, classify_vertices(G))


def test_is_cycle():
    assert is_cycle(cycle(3)) and is_cycle(cycle(9))
    assert not is_cycle(path(4))
    two_triangles = from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not is_cycle(two_triangles)


def test_applicability():
    assert check(min_degree_two_constant, cycle(7)) is False
    assert check(min_degree_two_constant, complete(4)) is None
    assert check(diameter_two, complete(5)) is False
    assert check(diameter_two, cycle(8)) is None
    assert check(self_centered_three, cycle(6)) is False
    assert check(self_centered_three, cycle(7)) is False
    assert check(self_centered_three, cycle(8)) is None
    assert check(dominated_vertex, cycle(4)) is False
    assert check(dominated_vertex, cycle(5)) is None


def test_checkers_flag_a_rigged_classification():
    # feed a report that contradicts the statements: all deltas zero on K4
    G = complete(4)
    c = classify_vertices(cycle(11))
    fake = type(c)(4, 6, 6, c.vertices[:4])
    assert diameter_two(G, fake) is True
    assert dominated_vertex(G, fake) is True


def test_suite_tallies():
    tallies = run_suite([cycle(5), complete(4), fig4_right(), triangle_bipartite(1)])
    assert set(tallies) == set(PROPOSITIONS)
    assert tallies["min-degree-two"].applied == 1
    assert all(not t.counterexamples for t in tallies.values())


def test_enumeration_counts():
    assert [len(all_graphs(n)) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]
    assert [len(connected_graphs(n)) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]


def test_min_degree_two_graphs():
    # graphs with minimum degree exactly 2: 0, 1, 2, 8, 43 on 3..7 vertices
    counts = [len(min_degree_two_graphs(n)) for n in range(3, 8)]
    brute = [sum(1 for G in all_graphs(n) if G.min_degree == 2) for n in range(3, 8)]
    assert counts == brute
    assert all(G.min_degree == 2 for G in min_degree_two_graphs(7))


def test_random_graphs_deterministic():
    a = [G.edge_list() for G in random_connected_graphs(20, 15, seed=4)]
    b = [G.edge_list() for G in random_connected_graphs(20, 15, seed=4)]
    assert a == b and len(a) == 20
