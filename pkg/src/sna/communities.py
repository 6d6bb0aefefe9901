"""Louvain community detection on the symmetrized graph."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph

# Minimum scaled gain (k_iC - res * tot_C * k_i / 2m') for a move to count.
_EPS = 1e-9


@dataclass(frozen=True)
class CommunityPartition:
    labels: np.ndarray
    modularity: float
    seed: int
    resolution: float

    @property
    def community_count(self) -> int:
        return int(self.labels.max()) + 1 if len(self.labels) else 0

    @property
    def sizes(self) -> np.ndarray:
        return np.bincount(self.labels, minlength=self.community_count)

    def summary(self) -> dict:
        return {
            "community_count": self.community_count,
            "modularity": self.modularity,
            "sizes": self.sizes.tolist(),
            "seed": self.seed,
            "resolution": self.resolution,
        }


def undirected_edges(graph: Graph) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Edges ``u < v`` weighted by how many of ``u->v``, ``v->u`` exist."""
    src, dst = graph.arc_sources, graph.out_indices
    lo, hi = np.minimum(src, dst), np.maximum(src, dst)
    keys, weight = np.unique(lo * graph.n + hi, return_counts=True)
    return keys // graph.n, keys % graph.n, weight.astype(np.float64)


def modularity(graph: Graph, labels, resolution: float = 1.0) -> float:
    labels = np.asarray(labels)
    if labels.shape != (graph.n,):
        raise ValueError(f"expected {graph.n} labels, got {labels.shape}")
    u, v, w = undirected_edges(graph)
    total = w.sum()
    if total == 0:
        raise ValueError("modularity undefined on a graph without edges")
    _, lab = np.unique(labels, return_inverse=True)
    same = lab[u] == lab[v]
    internal = w[same].sum()
    deg = np.bincount(u, weights=w, minlength=graph.n) + np.bincount(v, weights=w, minlength=graph.n)
    tot = np.bincount(lab, weights=deg)
    return float(internal / total - resolution * np.sum((tot / (2.0 * total)) ** 2))


class _Level:
    """Weighted undirected graph with self-loop weights, as Python lists."""

    def __init__(self, n, u, v, w, loops):
        self.n = n
        self.u, self.v, self.w = u, v, w
        self.loops = loops
        rows = np.concatenate([u, v])
        cols = np.concatenate([v, u])
        ww = np.concatenate([w, w])
        order = np.lexsort((cols, rows))
        rows, cols, ww = rows[order], cols[order], ww[order]
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(rows, minlength=n), out=indptr[1:])
        self.k = (np.bincount(rows, weights=ww, minlength=n) + 2.0 * loops).tolist()
        c, wl, p = cols.tolist(), ww.tolist(), indptr.tolist()
        self.nbrs = [c[p[i]:p[i + 1]] for i in range(n)]
        self.wts = [wl[p[i]:p[i + 1]] for i in range(n)]

    def aggregate(self, comm: np.ndarray) -> "_Level":
        nc = int(comm.max()) + 1
        cu, cv = comm[self.u], comm[self.v]
        inside = cu == cv
        loops = np.bincount(comm, weights=self.loops, minlength=nc)
        loops += np.bincount(cu[inside], weights=self.w[inside], minlength=nc)
        a, b = np.minimum(cu[~inside], cv[~inside]), np.maximum(cu[~inside], cv[~inside])
        keys, inv = np.unique(a * nc + b, return_inverse=True)
        w = np.bincount(inv, weights=self.w[~inside], minlength=len(keys))
        return _Level(nc, keys // nc, keys % nc, w, loops)


def _dense(labels: np.ndarray) -> np.ndarray:
    """Relabel to 0.. in order of first appearance."""
    _, first, inv = np.unique(labels, return_index=True, return_inverse=True)
    rank = np.empty(len(first), dtype=np.int64)
    rank[np.argsort(first, kind="stable")] = np.arange(len(first))
    return rank[inv]


def _move_nodes(level: _Level, comm: list[int], order, m2: float, resolution: float) -> bool:
    """Greedy local moving until a full pass moves nothing. Mutates ``comm``."""
    n = level.n
    k = level.k
    tot = [0.0] * n
    size = [0] * n
    for i in range(n):
        tot[comm[i]] += k[i]
        size[comm[i]] += 1
    free = [c for c in range(n - 1, -1, -1) if size[c] == 0]
    scale = resolution / m2
    moved_any = False
    while True:
        moved = False
        for i in order:
            ci = comm[i]
            ki = k[i]
            links: dict[int, float] = {}
            for j, w in zip(level.nbrs[i], level.wts[i]):
                cj = comm[j]
                links[cj] = links.get(cj, 0.0) + w
            tot[ci] -= ki
            size[ci] -= 1
            best = ci
            best_gain = links.get(ci, 0.0) - tot[ci] * ki * scale
            for c, kic in links.items():
                if c == ci:
                    continue
                gain = kic - tot[c] * ki * scale
                if gain > best_gain + _EPS:
                    best, best_gain = c, gain
            if size[ci] > 0 and best_gain < -_EPS:
                best = free.pop()
            elif size[ci] == 0 and best != ci:
                free.append(ci)
            tot[best] += ki
            size[best] += 1
            comm[i] = best
            if best != ci:
                moved = True
        if not moved:
            return moved_any
        moved_any = True


def louvain(graph: Graph, seed: int = 0, resolution: float = 1.0) -> CommunityPartition:
    """Multi-level Louvain modularity optimization.

    Arcs are merged into undirected edges of weight 1 or 2 (mutual). Each
    level visits nodes in a permutation drawn from ``seed``. After the
    levels converge the projected partition is polished by one more round
    of single-node moves on the original graph; if that moves anything the
    levels are rebuilt from it. So the result admits no improving
    single-node move.
    """
    rng = np.random.default_rng(seed)
    u, v, w = undirected_edges(graph)
    m2 = 2.0 * w.sum()
    base = _Level(graph.n, u, v, w, np.zeros(graph.n))
    labels = np.arange(graph.n, dtype=np.int64)
    if m2 > 0:
        while True:
            level = base.aggregate(_dense(labels))
            labels = _dense(labels)
            while True:
                comm = list(range(level.n))
                if not _move_nodes(level, comm, rng.permutation(level.n).tolist(), m2, resolution):
                    break
                comm = _dense(np.asarray(comm))
                labels = comm[labels]
                level = level.aggregate(comm)
            comm = labels.tolist()
            if not _move_nodes(base, comm, rng.permutation(base.n).tolist(), m2, resolution):
                break
            labels = np.asarray(comm, dtype=np.int64)
    labels = _dense(labels)
    labels.flags.writeable = False
    q = modularity(graph, labels, resolution) if m2 > 0 else 0.0
    return CommunityPartition(labels, q, seed, resolution)


__all__ = ["CommunityPartition", "louvain", "modularity", "undirected_edges"]
