"""Degree, closeness and betweenness centrality, and Freeman centralization."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from ._parallel import chunked_map, source_chunks
from .graph import Graph, _check_direction

VARIANTS = ("reachable-corrected", "harmonic")


@dataclass(frozen=True)
class CentralityVector:
    """Per-node scores for one measure.

    ``raw`` holds the unnormalized values and ``scale`` the factor that maps
    them onto the normalized scale; ``scores`` returns whichever of the two
    ``normalized`` selects. Closeness is normalized by construction, so its
    scale is 1.
    """

    measure: str
    direction: str
    raw: np.ndarray
    scale: float = 1.0
    normalized: bool = False
    variant: str | None = None

    @property
    def scores(self) -> np.ndarray:
        return self.normalized_scores if self.normalized else self.raw

    @property
    def normalized_scores(self) -> np.ndarray:
        return self.raw * self.scale

    def __len__(self) -> int:
        return len(self.raw)

    def ranking(self, graph: Graph) -> np.ndarray:
        """Node order by score descending, ties by ascending external id."""
        return rank_order(self.raw, graph)

    def argmax(self, graph: Graph) -> int:
        return int(self.ranking(graph)[0])


def rank_order(values: np.ndarray, graph: Graph) -> np.ndarray:
    ext = graph.id_map.internal_to_external
    return np.lexsort((ext, -np.asarray(values, dtype=np.float64)))


def degree_centrality(graph: Graph, direction: str = "in") -> CentralityVector:
    """In-, out- or all-degree; ``all`` counts distinct neighbors."""
    _check_direction(direction)
    raw = graph.degree(direction).astype(np.float64)
    scale = 1.0 / (graph.n - 1) if graph.n > 1 else 0.0
    return CentralityVector("degree", direction, raw, scale)


def closeness_centrality(graph: Graph, direction: str = "out",
                         variant: str = "reachable-corrected",
                         threads: int | None = None) -> CentralityVector:
    """Closeness over the reachable set, defined on disconnected graphs.

    ``reachable-corrected`` scales the inverse mean distance to reached nodes
    by the reached fraction, ``(r/(n-1)) * (r / sum d)``. ``harmonic`` is
    ``sum(1/d) / (n-1)``. Both are 0 for a node that reaches nothing.
    ``direction='out'`` measures distances from the node, ``'in'`` distances
    to it.
    """
    _check_direction(direction)
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    indptr, indices = graph.adjacency(direction)
    harmonic = variant == "harmonic"
    parts = chunked_map(lambda c: _kernels.closeness_scores(indptr, indices, c, harmonic),
                        source_chunks(graph.n), threads)
    raw = np.concatenate(parts) if parts else np.zeros(0)
    return CentralityVector("closeness", direction, raw, 1.0, True, variant)


def betweenness_centrality(graph: Graph, normalized: bool = False,
                           threads: int | None = None) -> CentralityVector:
    """Directed Brandes betweenness; endpoints are never credited."""
    indptr, indices = graph.out_indptr, graph.out_indices
    parts = chunked_map(lambda c: _kernels.brandes_partial(indptr, indices, c),
                        source_chunks(graph.n), threads)
    raw = np.zeros(graph.n, dtype=np.float64)
    for p in parts:
        raw += p
    n = graph.n
    scale = 1.0 / ((n - 1) * (n - 2)) if n > 2 else 0.0
    return CentralityVector("betweenness", "out", raw, scale, normalized)


def centralization_denominator(measure: str, direction: str, n: int) -> float:
    """Largest possible sum of ``max - c_v`` over graphs on ``n`` nodes.

    Degree and betweenness use raw scores, closeness its own normalized scale.
    The maximum is attained by the star appropriate to the direction.
    """
    if n < 3:
        raise ValueError("centralization needs at least 3 nodes")
    if measure == "degree":
        # all-star: center n-1 vs leaves 1; in/out-star: center n-1 vs leaves 0
        return (n - 1.0) * (n - 2.0) if direction == "all" else (n - 1.0) ** 2
    if measure == "closeness":
        if direction == "all":
            return (n - 1.0) * (n - 2.0) / (2.0 * n - 3.0)
        return n - 1.0
    if measure == "betweenness" and direction == "out":
        return (n - 1.0) ** 2 * (n - 2.0)
    raise ValueError(f"centralization not defined for {measure}/{direction}")


def centralization(vector: CentralityVector, graph: Graph) -> float:
    if len(vector) != graph.n:
        raise ValueError("centrality vector does not match graph")
    if vector.measure == "closeness" and vector.variant == "harmonic" and vector.direction == "all":
        n = graph.n
        # leaves of the undirected star: (1 + (n-2)/2) / (n-1)
        denom = (n - 1.0) * (1.0 - n / (2.0 * (n - 1.0)))
    else:
        denom = centralization_denominator(vector.measure, vector.direction, graph.n)
    c = vector.raw
    return float(np.sum(c.max() - c) / denom)


__all__ = [
    "CentralityVector", "VARIANTS", "betweenness_centrality", "centralization",
    "centralization_denominator", "closeness_centrality", "degree_centrality", "rank_order",
]
