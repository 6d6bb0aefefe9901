"""Gould-Fernandez brokerage roles over open (or all) directed two-paths."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from ._parallel import chunked_map, source_chunks
from .graph import Graph

ROLES = ("coordinator", "gatekeeper", "representative", "itinerant", "liaison")


@dataclass(frozen=True)
class BrokerageCounts:
    counts: np.ndarray  # (n, 5) int64, columns in ROLES order
    exclude_closed: bool

    @property
    def total(self) -> np.ndarray:
        return self.counts.sum(axis=1)

    def role(self, name: str) -> np.ndarray:
        return self.counts[:, ROLES.index(name)]


@dataclass(frozen=True)
class BrokerageSummary:
    persons_with_roles: int
    persons_without_roles: int
    argmax_node: int | None  # internal id
    argmax_total: int


def brokerage_census(graph: Graph, labels, exclude_closed: bool = True,
                     threads: int | None = None) -> BrokerageCounts:
    """Classify every two-path ``a -> v -> b`` (``a != b``) by group pattern.

    With ``exclude_closed`` a two-path is skipped when the arc ``a -> b``
    exists, leaving only structural holes.
    """
    labels = np.asarray(labels)
    if labels.shape != (graph.n,):
        raise ValueError(f"partition has {labels.shape} labels, graph has {graph.n} nodes")
    _, groups = np.unique(labels, return_inverse=True)
    groups = groups.astype(np.int64)
    args = (graph.in_indptr, graph.in_indices, graph.out_indptr, graph.out_indices,
            groups, bool(exclude_closed))
    parts = chunked_map(lambda c: _kernels.brokerage_counts(*args, c),
                        source_chunks(graph.n), threads)
    counts = np.concatenate(parts) if parts else np.zeros((0, 5), dtype=np.int64)
    counts.flags.writeable = False
    return BrokerageCounts(counts, bool(exclude_closed))


def brokerage_summary(census: BrokerageCounts, graph: Graph) -> BrokerageSummary:
    total = census.total
    with_roles = int(np.count_nonzero(total))
    if with_roles == 0:
        return BrokerageSummary(0, graph.n, None, 0)
    # internal order follows external ids, so argmax picks the smallest id on ties
    best = int(np.argmax(total))
    return BrokerageSummary(with_roles, graph.n - with_roles, best, int(total[best]))


__all__ = ["BrokerageCounts", "BrokerageSummary", "ROLES", "brokerage_census",
           "brokerage_summary"]
