"""k-core decomposition and max-core extraction."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from . import _kernels
from .graph import Graph, _check_direction


class EmptyCoreError(ValueError):
    pass


@dataclass(frozen=True)
class CorePartition:
    mode: str
    coreness: np.ndarray

    @property
    def max_k(self) -> int:
        return int(self.coreness.max()) if len(self.coreness) else 0

    @property
    def max_core_members(self) -> np.ndarray:
        return np.flatnonzero(self.coreness == self.max_k)

    def members(self, k: int) -> np.ndarray:
        return np.flatnonzero(self.coreness >= k)


def core_decomposition(graph: Graph, mode: str = "all") -> CorePartition:
    """Coreness per node by minimum-degree peeling.

    Degree counts in-neighbors, out-neighbors or distinct neighbors of
    either orientation (``all``). For ``in``/``out`` modes, removing a node
    lowers the counted degree only of nodes that counted it.
    """
    _check_direction(mode)
    if mode == "all":
        core = _kernels.core_numbers(*graph.und_indptr_indices)
    elif mode == "in":
        # deleting v lowers the in-degree of v's out-neighbors
        core = _directed_core(graph.out_indptr, graph.out_indices, graph.in_degree())
    else:
        core = _directed_core(graph.in_indptr, graph.in_indices, graph.out_degree())
    core.flags.writeable = False
    return CorePartition(mode, core)


def _directed_core(notify_ptr: np.ndarray, notify_idx: np.ndarray, degree: np.ndarray) -> np.ndarray:
    """Peeling where the counted degree and the update lists differ.

    ``notify`` lists, for each node, the nodes whose counted degree drops
    when it is removed.
    """
    n = len(degree)
    deg = degree.astype(np.int64).copy()
    core = np.zeros(n, dtype=np.int64)
    removed = np.zeros(n, dtype=bool)
    maxd = int(deg.max()) if n else 0
    buckets: list[list[int]] = [[] for _ in range(maxd + 1)]
    for v in range(n):
        buckets[deg[v]].append(v)
    k = 0
    d = 0
    done = 0
    while done < n:
        while d <= maxd and not buckets[d]:
            d += 1
        v = buckets[d].pop()
        if removed[v] or deg[v] != d:
            continue
        k = max(k, d)
        core[v] = k
        removed[v] = True
        done += 1
        for u in notify_idx[notify_ptr[v]:notify_ptr[v + 1]]:
            if not removed[u] and deg[u] > 0:
                deg[u] -= 1
                buckets[deg[u]].append(u)
                if deg[u] < d:
                    d = deg[u]
    return core


def extract_core(graph: Graph, cores: CorePartition, k: int | None = None) -> Graph:
    """Induced subgraph on nodes with coreness >= k (default: the max core)."""
    if k is None:
        k = cores.max_k
    if k < 0:
        raise ValueError("k must be non-negative")
    if k > cores.max_k:
        raise EmptyCoreError(f"{k}-core is empty (max coreness is {cores.max_k})")
    return graph.subgraph(cores.members(k))


def component_count(graph: Graph, connection: str = "weak") -> int:
    if graph.n == 0:
        return 0
    adj = csr_matrix((np.ones(graph.m), graph.out_indices, graph.out_indptr),
                     shape=(graph.n, graph.n))
    return int(connected_components(adj, directed=True, connection=connection)[0])


__all__ = ["CorePartition", "EmptyCoreError", "component_count", "core_decomposition",
           "extract_core"]
