"""Tabular/JSON rendering, atomic writes and the composite contacts report."""

from __future__ import annotations

import json
import math
import os
import tempfile
from dataclasses import dataclass, field

import numpy as np

from .brokerage import brokerage_census
from .centrality import (
    betweenness_centrality,
    closeness_centrality,
    degree_centrality,
    rank_order,
)
from .cohesion import core_decomposition
from .communities import louvain
from .graph import Graph
from .neighborhoods import influence_domains
from .ranking import pagerank

DEFAULT_PRECISION = 6


def fmt(value, precision: int = DEFAULT_PRECISION) -> str:
    """CSV cell text: integers verbatim, reals to ``precision`` significant digits."""
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    value = float(value)
    if math.isnan(value):
        return ""
    if value.is_integer() and abs(value) < 1e15:
        return str(int(value))
    return f"{value:.{precision}g}"


def jsonable(obj, precision: int = DEFAULT_PRECISION):
    if isinstance(obj, dict):
        return {str(k): jsonable(v, precision) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [jsonable(v, precision) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        if math.isnan(obj) or math.isinf(obj):
            return None
        return float(f"{float(obj):.{precision}g}")
    return obj


def to_json(obj, precision: int = DEFAULT_PRECISION) -> str:
    return json.dumps(jsonable(obj, precision), indent=2) + "\n"


def to_csv(header: list[str], rows, precision: int = DEFAULT_PRECISION) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(fmt(v, precision) for v in row))
    return "\n".join(lines) + "\n"


def write_atomic(path: str | os.PathLike, data: str | bytes) -> None:
    """Write via a temporary file in the target directory, then rename."""
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".sna-", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data.encode("utf-8") if isinstance(data, str) else data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def degree_distribution(graph: Graph, mode: str = "out") -> list[tuple[int, int]]:
    """``(degree, count)`` for every degree that occurs, ascending."""
    values, counts = np.unique(graph.degree(mode), return_counts=True)
    return [(int(d), int(c)) for d, c in zip(values, counts)]


PERSONAL = ("in_degree", "out_degree", "neighborhood")
KNOW_HOW = ("closeness", "betweenness", "coreness", "pagerank", "influence_domain",
            "brokerage_total")


@dataclass
class ContactsReport:
    top_k: int
    seed: int
    nodes: list[int]  # internal ids, in listing order
    values: dict[str, np.ndarray] = field(repr=False)
    ranks: dict[str, np.ndarray] = field(repr=False)

    def records(self, graph: Graph) -> list[dict]:
        out = []
        for v in self.nodes:
            out.append({
                "external_id": graph.external(v),
                "personal": {k: self.values[k][v] for k in PERSONAL},
                "know_how": {k: self.values[k][v] for k in KNOW_HOW},
                "ranks": {k: int(self.ranks[k][v]) for k in PERSONAL + KNOW_HOW},
            })
        return out


def contacts_report(graph: Graph, top_k: int = 10, seed: int = 0, *, resolution: float = 1.0,
                    damping: float = 0.85, tolerance: float = 1e-10,
                    exclude_closed: bool = True, direction: str = "out",
                    variant: str = "reachable-corrected",
                    threads: int | None = None) -> ContactsReport:
    """Personal (direct) and know-how (indirect) contact measures side by side.

    Lists the union of the ``top_k`` nodes under every measure, ordered by
    in-degree rank. ``neighborhood`` is the number of distinct one-hop
    neighbors; ``influence_domain`` the number of nodes that reach the node.
    """
    partition = louvain(graph, seed=seed, resolution=resolution)
    values = {
        "in_degree": degree_centrality(graph, "in").raw.astype(np.int64),
        "out_degree": degree_centrality(graph, "out").raw.astype(np.int64),
        "neighborhood": degree_centrality(graph, "all").raw.astype(np.int64),
        "closeness": closeness_centrality(graph, direction, variant, threads).raw,
        "betweenness": betweenness_centrality(graph, threads=threads).raw,
        "coreness": np.asarray(core_decomposition(graph, "all").coreness),
        "pagerank": pagerank(graph, damping, tolerance).scores,
        "influence_domain": influence_domains(graph, threads)[0],
        "brokerage_total": brokerage_census(graph, partition.labels, exclude_closed,
                                            threads).total,
    }
    ranks = {}
    chosen: set[int] = set()
    for name, vals in values.items():
        order = rank_order(vals, graph)
        r = np.empty(graph.n, dtype=np.int64)
        r[order] = np.arange(1, graph.n + 1)
        ranks[name] = r
        chosen.update(int(v) for v in order[:top_k])
    nodes = sorted(chosen, key=lambda v: (ranks["in_degree"][v], v))
    return ContactsReport(top_k, seed, nodes, values, ranks)
