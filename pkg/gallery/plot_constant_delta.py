"""
Constant change of the Wiener index
===================================

In a complete graph every deletion lowers ``W`` by the same amount.  A
circular ladder with attached ``K4``'s and a triangle-bipartite family do
the same without being regular.
"""

from soltes import circular_ladder_k4, classify_vertices, complete, triangle_bipartite

for z in (1, 2, 5, 10):
    c = classify_vertices(complete(z + 1))
    print(f"K_{z + 1}: constant delta_w = {c.constant_delta}")

for k in range(1, 6):
    G = circular_ladder_k4(k)
    c = classify_vertices(G)
    r = c.vertices[0]
    print(f"ladder k={k}: n={G.n} degrees={sorted(set(G.degrees))} "
          f"sigma={r.sigma} diff={r.diff} delta_w={c.constant_delta}")

for k in range(1, 4):
    G = triangle_bipartite(k)
    c = classify_vertices(G)
    print(f"triangle-bipartite k={k}: n={G.n} max-min degree={G.max_degree - G.min_degree} "
          f"delta_w={c.constant_delta}")
