"""
Counting bounds and the distance balancer
=========================================

For a 7-regular graph of girth ``2k+1`` the total detour at a vertex is
eventually much larger than its transmission, so such a graph cannot be
Šoltés.  The balancer is the other half of the toolkit: a small tree
hung on an edge that adds an exact distance sum ``x`` at a chosen target.
"""

from soltes import (
    append_balancer,
    bfs_layers,
    construct_q,
    cycle,
    decomposition_7460,
    diff_lower_bound_7,
    gap_check,
    moore_bound,
    sigma_upper_bound_7,
)

print("Moore bound d=4 g=12:", moore_bound(4, 12))
for k in (2, 10, 28, 29, 30):
    lb, ub = diff_lower_bound_7(k).value, sigma_upper_bound_7(k)
    print(f"k={k:2d} diff >= {lb:.3e}  sigma <= {float(ub):.3e}  gap ok: {gap_check(k)}")

# balancer on a long cycle; the target is 2k-1 steps from the edge 01
k, x = 2, 200
L = 20 * k + 20
H, plan = append_balancer(cycle(L), 0, 1, x, k)
dist = bfs_layers(H, L - (2 * k - 1)).dist
print(f"balancer x={x} k={k}: {plan.order} new vertices, distance sum {int(dist[L:].sum())}")

Q = construct_q(cycle(46), (0, 1))
d = decomposition_7460()
print(f"Q on C46: order {Q.n}, added distances {d.path_sum} + {d.pendant} = {d.total}")
