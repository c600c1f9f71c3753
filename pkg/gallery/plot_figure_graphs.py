"""
Graphs with a large share of Šoltés vertices
============================================

The hand-built figure graphs are not Šoltés graphs, but many of their
vertices already preserve the Wiener index.  ``alpha`` is that share.
"""

from collections import Counter

from soltes import classify_vertices, fig4_left, fig4_right, fig5_60, fig6_69

for name, build in [("fig4-left", fig4_left), ("fig4-right", fig4_right),
                    ("fig5-60", fig5_60), ("fig6-69", fig6_69)]:
    G = build()
    c = classify_vertices(G)
    print(f"{name:10s} n={G.n:3d} m={G.m:3d} W={c.wiener:6d} "
          f"soltes={c.soltes_count:3d} alpha={c.alpha}")

# where do the remaining vertices land?
c = classify_vertices(fig5_60())
print(Counter(r.status.value for r in c.vertices))
print("distinct delta_w:", sorted({r.delta_w for r in c.vertices}))
