"""
Cycles and the coincidence at eleven
====================================

Deleting a vertex of ``C_n`` leaves the path ``P_{n-1}``.  The Wiener
index is preserved exactly when ``W(C_n) == W(P_{n-1})``, which happens
for one cycle only.
"""

from soltes import classify_vertices, cycle, scan, wiener_cycle, wiener_path

# closed forms first: cubic in n on both sides, they cross once
for n in range(3, 16):
    mark = "  <-" if wiener_cycle(n) == wiener_path(n - 1) else ""
    print(f"n={n:3d}  W(C_n)={wiener_cycle(n):5d}  W(P_n-1)={wiener_path(n - 1):5d}{mark}")

# the same thing through the deletion kernel, vertex by vertex
c = classify_vertices(cycle(11))
print("C11:", c.soltes_count, "of", c.n, "vertices keep W, z =", c.constant_delta)

# and as a census over C3..C200
report = scan(cycle(n) for n in range(3, 201))
print("Soltes cycles up to 200:", [r.n for r in report.soltes_graphs])
