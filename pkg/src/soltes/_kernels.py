"""Compiled BFS kernels over CSR adjacency.

All kernels release the GIL so a thread pool gets real parallelism.
"""

import numba
import numpy as np

_INF = np.iinfo(np.int64).max // 4


@numba.njit(cache=True, nogil=True)
def bfs(indptr, indices, root, skip, dist, order):
    """Fill ``dist`` (-1 = unreachable) and ``order``; return vertices reached.

    ``skip`` is treated as deleted (-1 for none).
    """
    dist[:] = -1
    dist[root] = 0
    order[0] = root
    head = 0
    tail = 1
    while head < tail:
        u = order[head]
        head += 1
        du = dist[u] + 1
        for p in range(indptr[u], indptr[u + 1]):
            w = indices[p]
            if w != skip and dist[w] < 0:
                dist[w] = du
                order[tail] = w
                tail += 1
    return tail


@numba.njit(cache=True, nogil=True)
def all_sources(indptr, indices, skip, sigma, ecc):
    """Transmission and eccentricity of every vertex except ``skip``.

    Returns False if some source does not reach every other live vertex.
    """
    n = indptr.shape[0] - 1
    live = n - (1 if skip >= 0 else 0)
    dist = np.empty(n, np.int64)
    order = np.empty(n, np.int64)
    for x in range(n):
        if x == skip:
            sigma[x] = 0
            ecc[x] = 0
            continue
        reached = bfs(indptr, indices, x, skip, dist, order)
        if reached != live:
            return False
        s = 0
        for i in range(reached):
            s += dist[order[i]]
        sigma[x] = s
        ecc[x] = dist[order[reached - 1]]
    return True


@numba.njit(cache=True, nogil=True)
def _lca(a, b, idom, depth):
    while a != b:
        while depth[a] > depth[b]:
            a = idom[a]
        while depth[b] > depth[a]:
            b = idom[b]
        if a != b:
            a = idom[a]
            b = idom[b]
    return a


@numba.njit(cache=True, nogil=True)
def deletion_detours(indptr, indices, lo, hi, targets, detour, cut, sigma):
    """Accumulate, for sources ``lo <= x < hi``, the distance increases caused
    by deleting each target vertex.

    For source ``x`` the vertices whose distance to ``x`` grows when ``v`` is
    deleted are exactly the proper descendants of ``v`` in the dominator tree
    of the BFS shortest-path DAG rooted at ``x``.  Only those are recomputed,
    by a BFS seeded from the unaffected boundary.  ``detour[v]`` receives the
    sum over ordered pairs (each unordered pair twice); ``cut[v]`` is set when
    some descendant becomes unreachable.  The graph must be connected.
    """
    n = indptr.shape[0] - 1
    nnz = indices.shape[0]
    dist = np.empty(n, np.int64)
    order = np.empty(n, np.int64)
    idom = np.empty(n, np.int64)
    depth = np.empty(n, np.int64)
    cptr = np.empty(n + 1, np.int64)
    cfill = np.empty(n, np.int64)
    child = np.empty(n, np.int64)
    tin = np.empty(n, np.int64)
    tout = np.empty(n, np.int64)
    pre = np.empty(n, np.int64)
    stack = np.empty(n, np.int64)
    spos = np.empty(n, np.int64)
    # graph relabelled by dominator preorder: a subtree is an id range
    pptr = np.empty(n + 1, np.int64)
    pidx = np.empty(nnz, np.int64)
    pdist = np.empty(n, np.int64)
    # extreme preorder ids among same-level / next-level neighbours
    lo1 = np.empty(n, np.int64)
    hi1 = np.empty(n, np.int64)
    lo2 = np.empty(n, np.int64)
    hi2 = np.empty(n, np.int64)
    tent = np.empty(n, np.int64)
    keys = np.empty(n, np.int64)
    qv = np.empty(n, np.int64)
    seeds = np.empty(n, np.int64)
    seed_keys = np.empty(n, np.int64)
    bucket = np.empty(n + 2, np.int64)

    for x in range(lo, hi):
        bfs(indptr, indices, x, -1, dist, order)
        s = 0
        for i in range(n):
            s += dist[i]
        sigma[x] = s

        # dominator tree of the shortest-path DAG, built in BFS order
        idom[x] = x
        depth[x] = 0
        for i in range(1, n):
            y = order[i]
            dy = dist[y] - 1
            cur = -1
            for p in range(indptr[y], indptr[y + 1]):
                z = indices[p]
                if dist[z] == dy:
                    if cur < 0:
                        cur = z
                    else:
                        cur = _lca(cur, z, idom, depth)
            idom[y] = cur
            depth[y] = depth[cur] + 1

        # children lists, then preorder numbering (subtree = contiguous range)
        cptr[:] = 0
        for i in range(1, n):
            cptr[idom[order[i]] + 1] += 1
        for i in range(n):
            cptr[i + 1] += cptr[i]
        for i in range(n):
            cfill[i] = cptr[i]
        for i in range(1, n):
            y = order[i]
            par = idom[y]
            child[cfill[par]] = y
            cfill[par] += 1
        top = 0
        stack[0] = x
        spos[0] = cptr[x]
        counter = 1
        tin[x] = 0
        pre[0] = x
        while top >= 0:
            u = stack[top]
            if spos[top] < cptr[u + 1]:
                c = child[spos[top]]
                spos[top] += 1
                tin[c] = counter
                pre[counter] = c
                counter += 1
                top += 1
                stack[top] = c
                spos[top] = cptr[c]
            else:
                tout[u] = counter
                top -= 1

        pptr[0] = 0
        for r in range(n):
            u = pre[r]
            pdist[r] = dist[u]
            q = pptr[r]
            for p in range(indptr[u], indptr[u + 1]):
                pidx[q] = tin[indices[p]]
                q += 1
            pptr[r + 1] = q
        for r in range(n):
            d = pdist[r]
            lo1[r] = n
            hi1[r] = -1
            lo2[r] = n
            hi2[r] = -1
            for p in range(pptr[r], pptr[r + 1]):
                z = pidx[p]
                dz = pdist[z]
                if dz == d:
                    lo1[r] = min(lo1[r], z)
                    hi1[r] = max(hi1[r], z)
                elif dz > d:
                    lo2[r] = min(lo2[r], z)
                    hi2[r] = max(hi2[r], z)

        for v in range(n):
            if v == x or not targets[v]:
                continue
            a = tin[v]
            b = tout[v]
            size = b - a - 1
            if size <= 0:
                continue
            # seeds: best distance through a neighbour outside the subtree.
            # Predecessors of a dominated vertex are dominated too (or are
            # v), so the key is dist + 1 via a same-level neighbour or
            # dist + 2 via a next-level one, and key - (dist[v] + 2) lies in
            # [0, size]
            base = pdist[a] + 2
            bucket[: size + 2] = 0
            nseed = 0
            for r in range(a + 1, b):
                if lo1[r] < a or hi1[r] >= b:
                    best = pdist[r] + 1
                elif lo2[r] < a or hi2[r] >= b:
                    best = pdist[r] + 2
                else:
                    best = _INF
                tent[r] = best
                if best < _INF:
                    qv[nseed] = r
                    keys[nseed] = best
                    bucket[best - base + 1] += 1
                    nseed += 1
            # stable counting sort of the seeds by key
            for i in range(size + 1):
                bucket[i + 1] += bucket[i]
            for i in range(nseed):
                slot = bucket[keys[i] - base]
                bucket[keys[i] - base] += 1
                seeds[slot] = qv[i]
                seed_keys[slot] = keys[i]
            # merge the sorted seeds with a FIFO.  Keys pop in nondecreasing
            # order; a FIFO entry is final when pushed (every seed key is in
            # tent already), a seed entry is stale once tent[y] != its key.
            # Finished vertices get tent = -1.
            si = 0
            qh = 0
            qt = 0
            reached = 0
            total = 0
            while True:
                if qh < qt and (si >= nseed or tent[qv[qh]] <= seed_keys[si]):
                    y = qv[qh]
                    qh += 1
                    k = tent[y]
                elif si < nseed:
                    y = seeds[si]
                    k = seed_keys[si]
                    si += 1
                    if k != tent[y]:
                        continue
                else:
                    break
                tent[y] = -1
                reached += 1
                total += k - pdist[y]
                k1 = k + 1
                for p in range(pptr[y], pptr[y + 1]):
                    w = pidx[p]
                    if a < w < b and tent[w] > k1:
                        tent[w] = k1
                        qv[qt] = w
                        qt += 1
            if reached < size:
                cut[v] = True
            else:
                detour[v] += total
