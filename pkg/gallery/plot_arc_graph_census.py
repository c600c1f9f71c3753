"""
A census over arc-graphs
========================

The arc-graph of ``G`` has one vertex per directed edge; it equals the
line graph of the full subdivision.  Here every connected graph on up to
six vertices is turned into its arc-graph and the results are scanned
for Šoltés and negative-Šoltés graphs.
"""

from soltes import arc_graph, line_graph, scan, subdivide
from soltes.smallgraphs import connected_graphs

K4 = connected_graphs(4)[-1]
A, index = arc_graph(K4)
L = line_graph(subdivide(K4, K4.edges()))
print("arc-graph of K4:", A.n, "vertices,", A.m, "edges, cubic:", A.is_regular)
print("first arcs:", index.arcs[:4], " line graph of subdivision has", L.n, "vertices")

arcs = [arc_graph(G)[0] for n in range(2, 7) for G in connected_graphs(n)]
report = scan(arcs, workers=2)
print("scanned", report.total, "arc-graphs")
print("Soltes:", len(report.soltes_graphs), " negative Soltes:", len(report.negative_soltes))
print("constant z:", sorted({r.z for r in report.constant_z}))
