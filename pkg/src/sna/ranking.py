"""PageRank by power iteration with uniform dangling redistribution."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix

from .graph import Graph


class ConvergenceError(RuntimeError):
    def __init__(self, iterations: int, residual: float):
        self.iterations = iterations
        self.residual = residual
        super().__init__(f"PageRank did not converge in {iterations} iterations "
                         f"(last L1 change {residual:.3e})")


@dataclass(frozen=True)
class ScoreVector:
    scores: np.ndarray
    damping: float
    iterations_used: int
    residual: float


def pagerank(graph: Graph, damping: float = 0.85, tolerance: float = 1e-10,
             max_iterations: int = 200) -> ScoreVector:
    """Stationary distribution of the uniform-teleport random surfer.

    Mass on nodes without out-arcs is spread evenly over all nodes each
    step. Iteration starts from the uniform vector and stops once the L1
    change between steps is at most ``tolerance``.
    """
    if not 0.0 < damping < 1.0:
        raise ValueError("damping must lie in (0, 1)")
    n = graph.n
    if n < 1:
        raise ValueError("PageRank needs at least one node")
    outdeg = graph.out_degree().astype(np.float64)
    dangling = outdeg == 0
    # row v sums x[u]/outdeg[u] over in-neighbors u, in ascending u
    weights = 1.0 / outdeg[graph.in_indices] if graph.m else np.zeros(0)
    transition = csr_matrix((weights, graph.in_indices, graph.in_indptr), shape=(n, n))
    x = np.full(n, 1.0 / n)
    residual = np.inf
    for it in range(1, max_iterations + 1):
        leak = damping * x[dangling].sum() + (1.0 - damping)
        new = damping * (transition @ x) + leak / n
        residual = float(np.abs(new - x).sum())
        x = new
        if residual <= tolerance:
            x.flags.writeable = False
            return ScoreVector(x, damping, it, residual)
    raise ConvergenceError(max_iterations, residual)


__all__ = ["ConvergenceError", "ScoreVector", "pagerank"]
