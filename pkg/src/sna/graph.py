"""Immutable directed graph stored as out- and in-CSR arrays."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

import numpy as np

from . import _kernels
from .ingest import EdgeList, IngestError, NodeIdMap, build_id_map, parse_edge_list

UNREACHABLE = _kernels.UNREACHABLE
DIRECTIONS = ("out", "in", "all")


def _check_direction(direction: str) -> None:
    if direction not in DIRECTIONS:
        raise ValueError(f"direction must be one of {DIRECTIONS}, got {direction!r}")


def _csr(n: int, rows: np.ndarray, cols: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    order = np.lexsort((cols, rows))
    indices = cols[order].astype(np.int64)
    counts = np.bincount(rows, minlength=n)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    return indptr, indices


class Graph:
    """Simple directed graph with sorted neighbor lists in both directions.

    Node ``i`` is the ``i``-th smallest external id; ``id_map`` translates.
    """

    def __init__(self, n: int, sources: np.ndarray, targets: np.ndarray, id_map: NodeIdMap):
        sources = np.asarray(sources, dtype=np.int64)
        targets = np.asarray(targets, dtype=np.int64)
        if len(sources) and (sources.min() < 0 or max(sources.max(), targets.max()) >= n):
            raise ValueError("arc endpoint outside node range")
        if np.any(sources == targets):
            raise ValueError("self-loops are not allowed")
        self.n = int(n)
        self.id_map = id_map
        self.out_indptr, self.out_indices = _csr(n, sources, targets)
        self.in_indptr, self.in_indices = _csr(n, targets, sources)
        self.m = int(len(self.out_indices))
        if self.m:
            key = sources * n + targets
            if len(np.unique(key)) != self.m:
                raise ValueError("duplicate arcs are not allowed")
        for arr in (self.out_indptr, self.out_indices, self.in_indptr, self.in_indices):
            arr.flags.writeable = False

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    @cached_property
    def und_indptr_indices(self) -> tuple[np.ndarray, np.ndarray]:
        """Orientation-free adjacency: distinct in- and out-neighbors, sorted."""
        rows = np.concatenate([self.arc_sources, self.out_indices])
        cols = np.concatenate([self.out_indices, self.arc_sources])
        if len(rows):
            key = np.unique(rows * self.n + cols)
            rows, cols = key // self.n, key % self.n
        indptr, indices = _csr(self.n, rows, cols)
        indptr.flags.writeable = False
        indices.flags.writeable = False
        return indptr, indices

    @cached_property
    def arc_sources(self) -> np.ndarray:
        src = np.repeat(np.arange(self.n, dtype=np.int64), np.diff(self.out_indptr))
        src.flags.writeable = False
        return src

    def adjacency(self, direction: str = "out") -> tuple[np.ndarray, np.ndarray]:
        _check_direction(direction)
        if direction == "out":
            return self.out_indptr, self.out_indices
        if direction == "in":
            return self.in_indptr, self.in_indices
        return self.und_indptr_indices

    def out_neighbors(self, v: int) -> np.ndarray:
        return self.out_indices[self.out_indptr[v]:self.out_indptr[v + 1]]

    def in_neighbors(self, v: int) -> np.ndarray:
        return self.in_indices[self.in_indptr[v]:self.in_indptr[v + 1]]

    def neighbors(self, v: int, direction: str = "out") -> np.ndarray:
        indptr, indices = self.adjacency(direction)
        return indices[indptr[v]:indptr[v + 1]]

    def out_degree(self) -> np.ndarray:
        return np.diff(self.out_indptr)

    def in_degree(self) -> np.ndarray:
        return np.diff(self.in_indptr)

    def degree(self, direction: str = "out") -> np.ndarray:
        return np.diff(self.adjacency(direction)[0])

    def has_arc(self, u: int, v: int) -> bool:
        nb = self.out_neighbors(u)
        i = np.searchsorted(nb, v)
        return bool(i < len(nb) and nb[i] == v)

    def arcs(self) -> Iterator[tuple[int, int]]:
        """Internal-id arcs in (source, target) ascending order."""
        return zip(self.arc_sources.tolist(), self.out_indices.tolist())

    def external_arcs(self) -> Iterator[tuple[int, int]]:
        ext = self.id_map.internal_to_external
        return zip(ext[self.arc_sources].tolist(), ext[self.out_indices].tolist())

    def external(self, v: int) -> int:
        return self.id_map.external(v)

    def internal(self, external_id: int) -> int:
        return self.id_map.internal(external_id)

    def transpose(self) -> "Graph":
        return Graph(self.n, self.out_indices, self.arc_sources, self.id_map)

    def subgraph(self, nodes) -> "Graph":
        """Induced subgraph; external ids are preserved."""
        keep = np.zeros(self.n, dtype=bool)
        keep[np.asarray(nodes, dtype=np.int64)] = True
        new_id = np.cumsum(keep) - 1
        mask = keep[self.arc_sources] & keep[self.out_indices]
        ext = self.id_map.internal_to_external[keep]
        id_map = NodeIdMap(ext, {int(x): i for i, x in enumerate(ext)})
        return Graph(int(keep.sum()), new_id[self.arc_sources[mask]],
                     new_id[self.out_indices[mask]], id_map)

    @classmethod
    def from_arcs(cls, arcs, n: int | None = None) -> "Graph":
        """Graph on internal ids ``0..n-1`` where external id equals internal id."""
        arr = np.asarray(list(arcs), dtype=np.int64).reshape(-1, 2)
        if n is None:
            n = int(arr.max()) + 1 if len(arr) else 0
        ids = np.arange(n, dtype=np.int64)
        return cls(n, arr[:, 0], arr[:, 1], NodeIdMap(ids, {i: i for i in range(n)}))


def build_graph(edges: EdgeList, id_map: NodeIdMap) -> Graph:
    ids = id_map.internal_to_external
    pos = np.searchsorted(ids, edges.arcs)
    found = (pos < len(ids)) & (ids[np.minimum(pos, len(ids) - 1)] == edges.arcs)
    if not found.all():
        missing = int(edges.arcs[~found][0])
        raise ValueError(f"arc endpoint {missing} missing from id map")
    return Graph(len(id_map), pos[:, 0], pos[:, 1], id_map)


def load_graph(source, lenient: bool = False) -> Graph:
    edges = parse_edge_list(source, lenient=lenient)
    return build_graph(edges, build_id_map(edges))


@dataclass(frozen=True)
class NetworkStats:
    n: int
    m: int
    average_degree: float
    density: float
    loop_count: int = 0
    is_simple: bool = True

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "average_degree": self.average_degree,
            "density": self.density,
            "loop_count": self.loop_count,
            "is_simple": self.is_simple,
        }


def network_stats(graph: Graph) -> NetworkStats:
    """Node/arc counts, mean total degree ``2m/n`` and density ``m/(n(n-1))``."""
    if graph.n < 2:
        raise ValueError("density is undefined for fewer than 2 nodes")
    n, m = graph.n, graph.m
    return NetworkStats(n, m, 2.0 * m / n, m / (n * (n - 1.0)))


@dataclass(frozen=True)
class DistanceArray:
    source: int
    direction: str
    dist: np.ndarray  # int64, UNREACHABLE where no path

    def reachable(self) -> np.ndarray:
        return self.dist != UNREACHABLE


def bfs(graph: Graph, source: int, direction: str = "out") -> DistanceArray:
    indptr, indices = graph.adjacency(direction)
    if not 0 <= source < graph.n:
        raise IndexError(f"source {source} out of range")
    dist = np.full(graph.n, UNREACHABLE, dtype=np.int64)
    queue = np.empty(graph.n, dtype=np.int64)
    _kernels.bfs_levels(indptr, indices, source, dist, queue)
    dist.flags.writeable = False
    return DistanceArray(source, direction, dist)


__all__ = [
    "DIRECTIONS", "DistanceArray", "Graph", "IngestError", "NetworkStats", "UNREACHABLE",
    "bfs", "build_graph", "load_graph", "network_stats",
]
