"""Distance layers, influence domains and exact diameter with a witness path."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from ._parallel import chunked_map, source_chunks
from .graph import UNREACHABLE, Graph, bfs

INTERPRETATIONS = {"directed": "out", "undirected": "all"}


@dataclass(frozen=True)
class DistancePartition:
    source: int
    direction: str
    layers: dict[int, np.ndarray]  # hop distance -> internal node ids
    n: int

    @property
    def reachable_count(self) -> int:
        return int(sum(len(v) for v in self.layers.values()))

    @property
    def reachable_fraction(self) -> float:
        return self.reachable_count / self.n

    @property
    def max_finite_distance(self) -> int:
        return max(self.layers, default=0)

    def counts(self) -> dict[int, int]:
        return {d: len(nodes) for d, nodes in self.layers.items()}


def k_neighbors(graph: Graph, source: int, direction: str = "out") -> DistancePartition:
    dist = bfs(graph, source, direction).dist
    order = np.argsort(dist, kind="stable")
    d_sorted = dist[order]
    layers = {}
    for d in np.unique(d_sorted[d_sorted > 0]):
        layers[int(d)] = order[d_sorted == d]
    return DistancePartition(source, direction, layers, graph.n)


def influence_domain(graph: Graph, node: int) -> tuple[int, float | None]:
    """Nodes that reach ``node`` along arcs: count and mean distance.

    The mean is ``None`` when nothing reaches the node.
    """
    dist = bfs(graph, node, "in").dist
    reached = dist[dist > 0]
    if len(reached) == 0:
        return 0, None
    return int(len(reached)), float(reached.sum() / len(reached))


def influence_domains(graph: Graph, threads: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Domain size and mean distance for every node (mean NaN when empty)."""
    prof = _profile(graph, "in", threads)
    size = prof[:, 3]
    with np.errstate(invalid="ignore", divide="ignore"):
        mean = np.where(size > 0, prof[:, 2] / np.maximum(size, 1), np.nan)
    return size, mean


def _profile(graph: Graph, direction: str, threads: int | None) -> np.ndarray:
    indptr, indices = graph.adjacency(direction)
    parts = chunked_map(lambda c: _kernels.distance_profile(indptr, indices, c),
                        source_chunks(graph.n), threads)
    return np.concatenate(parts) if parts else np.zeros((0, 4), dtype=np.int64)


@dataclass(frozen=True)
class DiameterResult:
    interpretation: str
    length: int
    source: int
    target: int
    path: tuple[int, ...]
    mean_geodesic: float
    finite_pairs: int


def shortest_path(graph: Graph, source: int, target: int, direction: str = "out") -> list[int] | None:
    dist = np.full(graph.n, UNREACHABLE, dtype=np.int64)
    parent = np.full(graph.n, -1, dtype=np.int64)
    indptr, indices = graph.adjacency(direction)
    _kernels.bfs_parents(indptr, indices, source, dist, parent)
    if dist[target] == UNREACHABLE:
        return None
    path = [target]
    while path[-1] != source:
        path.append(int(parent[path[-1]]))
    return path[::-1]


def diameter(graph: Graph, interpretation: str = "directed",
             threads: int | None = None) -> DiameterResult:
    """Longest finite shortest path, by BFS from every node.

    Among witnesses of equal length the smallest source, then smallest
    target, wins; internal order equals external-id order so this is also
    the external-id lexicographic minimum.
    """
    if interpretation not in INTERPRETATIONS:
        raise ValueError(f"interpretation must be one of {tuple(INTERPRETATIONS)}")
    if graph.m == 0:
        raise ValueError("diameter undefined: no finite pair")
    direction = INTERPRETATIONS[interpretation]
    prof = _profile(graph, direction, threads)
    ecc = prof[:, 0]
    length = int(ecc.max())
    source = int(np.flatnonzero(ecc == length)[0])
    target = int(prof[source, 1])
    path = shortest_path(graph, source, target, direction)
    pairs = int(prof[:, 3].sum())
    mean = float(prof[:, 2].sum() / pairs)
    return DiameterResult(interpretation, length, source, target, tuple(path), mean, pairs)


__all__ = ["DiameterResult", "DistancePartition", "diameter", "influence_domain",
           "influence_domains", "k_neighbors", "shortest_path"]
