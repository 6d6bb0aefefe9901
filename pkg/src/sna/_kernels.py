"""Compiled inner loops over CSR arrays.

Every kernel works on plain ``indptr``/``indices`` int64 arrays and releases
the GIL, so :func:`sna._parallel.chunked_map` can spread sources over threads.
Kernels never reduce across sources; callers merge per-chunk results in chunk
order, which keeps floating-point output independent of the thread count.
"""

import numpy as np
from numba import njit

UNREACHABLE = -1


@njit(cache=True, nogil=True)
def bfs_levels(indptr, indices, source, dist, queue):
    """Fill ``dist`` (pre-set to -1) with hop counts; return number visited."""
    dist[source] = 0
    queue[0] = source
    head = 0
    tail = 1
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u] + 1
        for j in range(indptr[u], indptr[u + 1]):
            v = indices[j]
            if dist[v] < 0:
                dist[v] = du
                queue[tail] = v
                tail += 1
    return tail


@njit(cache=True, nogil=True)
def bfs_parents(indptr, indices, source, dist, parent):
    n = indptr.shape[0] - 1
    queue = np.empty(n, dtype=np.int64)
    dist[source] = 0
    parent[source] = source
    queue[0] = source
    head = 0
    tail = 1
    while head < tail:
        u = queue[head]
        head += 1
        for j in range(indptr[u], indptr[u + 1]):
            v = indices[j]
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                parent[v] = u
                queue[tail] = v
                tail += 1
    return tail


@njit(cache=True, nogil=True)
def distance_profile(indptr, indices, sources):
    """Per source: (eccentricity, first farthest target, distance sum, reached).

    Eccentricity is over finite distances only; the farthest target is the
    smallest node index at that distance. A source that reaches nothing gets
    eccentricity 0 and target -1.
    """
    n = indptr.shape[0] - 1
    k = sources.shape[0]
    out = np.zeros((k, 4), dtype=np.int64)
    dist = np.empty(n, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    for i in range(k):
        s = sources[i]
        dist[:] = -1
        visited = bfs_levels(indptr, indices, s, dist, queue)
        ecc = 0
        far = -1
        total = 0
        for t in range(n):
            d = dist[t]
            if d > 0:
                total += d
                if d > ecc:
                    ecc = d
                    far = t
        out[i, 0] = ecc
        out[i, 1] = far
        out[i, 2] = total
        out[i, 3] = visited - 1
    return out


@njit(cache=True, nogil=True)
def closeness_scores(indptr, indices, sources, harmonic):
    n = indptr.shape[0] - 1
    k = sources.shape[0]
    out = np.zeros(k, dtype=np.float64)
    dist = np.empty(n, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    if n < 2:
        return out
    for i in range(k):
        s = sources[i]
        dist[:] = -1
        visited = bfs_levels(indptr, indices, s, dist, queue)
        reached = visited - 1
        if reached == 0:
            continue
        if harmonic:
            acc = 0.0
            # queue order is nondecreasing distance
            for q in range(1, visited):
                acc += 1.0 / dist[queue[q]]
            out[i] = acc / (n - 1)
        else:
            total = 0
            for q in range(1, visited):
                total += dist[queue[q]]
            out[i] = (reached / (n - 1)) * (reached / total)
    return out


@njit(cache=True, nogil=True)
def brandes_partial(indptr, indices, sources):
    """Sum of single-source dependencies over ``sources`` (directed, unweighted)."""
    n = indptr.shape[0] - 1
    bc = np.zeros(n, dtype=np.float64)
    dist = np.empty(n, dtype=np.int64)
    sigma = np.empty(n, dtype=np.float64)
    delta = np.empty(n, dtype=np.float64)
    order = np.empty(n, dtype=np.int64)
    for i in range(sources.shape[0]):
        s = sources[i]
        dist[:] = -1
        sigma[:] = 0.0
        dist[s] = 0
        sigma[s] = 1.0
        order[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = order[head]
            head += 1
            for j in range(indptr[u], indptr[u + 1]):
                v = indices[j]
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    order[tail] = v
                    tail += 1
                if dist[v] == dist[u] + 1:
                    sigma[v] += sigma[u]
        for q in range(tail):
            delta[order[q]] = 0.0
        for q in range(tail - 1, 0, -1):
            w = order[q]
            # successors of w on geodesics from s: arcs w->x with dist[x] = dist[w]+1
            acc = 0.0
            for j in range(indptr[w], indptr[w + 1]):
                x = indices[j]
                if dist[x] == dist[w] + 1:
                    acc += sigma[w] / sigma[x] * (1.0 + delta[x])
            delta[w] = acc
            bc[w] += acc
    return bc


@njit(cache=True, nogil=True)
def core_numbers(indptr, indices):
    """Bucket peeling (Batagelj-Zaversnik) on the given adjacency."""
    n = indptr.shape[0] - 1
    deg = np.empty(n, dtype=np.int64)
    md = 0
    for v in range(n):
        deg[v] = indptr[v + 1] - indptr[v]
        if deg[v] > md:
            md = deg[v]
    bin_ = np.zeros(md + 1, dtype=np.int64)
    for v in range(n):
        bin_[deg[v]] += 1
    start = 0
    for d in range(md + 1):
        num = bin_[d]
        bin_[d] = start
        start += num
    pos = np.empty(n, dtype=np.int64)
    vert = np.empty(n, dtype=np.int64)
    for v in range(n):
        pos[v] = bin_[deg[v]]
        vert[pos[v]] = v
        bin_[deg[v]] += 1
    for d in range(md, 0, -1):
        bin_[d] = bin_[d - 1]
    bin_[0] = 0
    for i in range(n):
        v = vert[i]
        for j in range(indptr[v], indptr[v + 1]):
            u = indices[j]
            if deg[u] > deg[v]:
                du = deg[u]
                pu = pos[u]
                pw = bin_[du]
                w = vert[pw]
                if u != w:
                    pos[u] = pw
                    vert[pu] = w
                    pos[w] = pu
                    vert[pw] = u
                bin_[du] += 1
                deg[u] -= 1
    return deg


@njit(cache=True, nogil=True)
def _has_arc(indptr, indices, a, b):
    lo = indptr[a]
    hi = indptr[a + 1]
    while lo < hi:
        mid = (lo + hi) // 2
        x = indices[mid]
        if x == b:
            return True
        if x < b:
            lo = mid + 1
        else:
            hi = mid
    return False


@njit(cache=True, nogil=True)
def brokerage_counts(in_ptr, in_idx, out_ptr, out_idx, labels, exclude_closed, brokers):
    """Columns: coordinator, gatekeeper, representative, itinerant, liaison."""
    k = brokers.shape[0]
    out = np.zeros((k, 5), dtype=np.int64)
    for i in range(k):
        v = brokers[i]
        gv = labels[v]
        for ja in range(in_ptr[v], in_ptr[v + 1]):
            a = in_idx[ja]
            ga = labels[a]
            for jb in range(out_ptr[v], out_ptr[v + 1]):
                b = out_idx[jb]
                if b == a:
                    continue
                if exclude_closed and _has_arc(out_ptr, out_idx, a, b):
                    continue
                gb = labels[b]
                if ga == gv:
                    if gv == gb:
                        out[i, 0] += 1
                    else:
                        out[i, 2] += 1
                elif gv == gb:
                    out[i, 1] += 1
                elif ga == gb:
                    out[i, 3] += 1
                else:
                    out[i, 4] += 1
    return out
