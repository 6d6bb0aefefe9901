import numpy as np
import pytest
from hypothesis import given

import oracles
from helpers import graph_of, random_graphs, small_graphs
from sna import bfs
from sna.neighborhoods import (
    diameter,
    influence_domain,
    influence_domains,
    k_neighbors,
    shortest_path,
)

PATH = [(0, 1), (1, 2)]


def test_layers_path():
    part = k_neighbors(graph_of(3, PATH), 0, "out")
    assert {d: v.tolist() for d, v in part.layers.items()} == {1: [1], 2: [2]}
    assert part.reachable_count == 2 and part.max_finite_distance == 2
    assert part.reachable_fraction == pytest.approx(2 / 3)


def test_reachable_fraction_complete_graph():
    n = 5
    g = graph_of(n, [(a, b) for a in range(n) for b in range(n) if a != b])
    assert k_neighbors(g, 0).reachable_fraction == (n - 1) / n


@given(small_graphs())
def test_layers_partition_reachable_set(case):
    n, arcs = case
    g = graph_of(n, arcs)
    for s in range(n):
        part = k_neighbors(g, s, "out")
        dist = oracles.bfs_dist(oracles.adjacency(n, arcs), s)
        unreachable = n - len(dist)
        assert sum(part.counts().values()) + unreachable + 1 == n
        for d in range(1, part.max_finite_distance + 1):
            assert sorted(part.layers[d].tolist()) == sorted(u for u, x in dist.items() if x == d)


def test_influence_domain_path():
    g = graph_of(3, PATH)
    assert influence_domain(g, 2) == (2, 1.5)
    assert influence_domain(g, 0) == (0, None)


@given(small_graphs())
def test_influence_domains_match_reverse_bfs(case):
    n, arcs = case
    g = graph_of(n, arcs)
    size, mean = influence_domains(g)
    inn = oracles.adjacency(n, arcs, "in")
    for v in range(n):
        d = [x for u, x in oracles.bfs_dist(inn, v).items() if u != v]
        assert size[v] == len(d) == influence_domain(g, v)[0]
        if d:
            assert mean[v] == pytest.approx(sum(d) / len(d), abs=1e-12)
        else:
            assert np.isnan(mean[v])


def test_diameter_path_and_cycle():
    res = diameter(graph_of(3, PATH))
    assert res.length == 2 and res.path == (0, 1, 2)
    cyc = diameter(graph_of(5, [(i, (i + 1) % 5) for i in range(5)]))
    assert cyc.length == 4 and cyc.path == (0, 1, 2, 3, 4)
    assert diameter(graph_of(3, PATH), "undirected").length == 2


def test_diameter_needs_an_arc():
    from sna import Graph

    with pytest.raises(ValueError):
        diameter(Graph.from_arcs([], 3))


def test_diameter_against_all_pairs_oracle():
    for n, arcs in random_graphs(40, max_n=30, seed=5):
        if not arcs:
            continue
        g = graph_of(n, arcs)
        for interp, direction in (("directed", "out"), ("undirected", "all")):
            adj = oracles.adjacency(n, arcs, direction)
            pairs = [(s, t, d) for s in range(n) for t, d in oracles.bfs_dist(adj, s).items() if t != s]
            best = max(d for _, _, d in pairs)
            first = min((s, t) for s, t, d in pairs if d == best)
            res = diameter(g, interp)
            assert res.length == best
            assert (res.source, res.target) == first
            assert len(res.path) == best + 1
            for u, v in zip(res.path, res.path[1:]):
                assert v in adj[u]
            assert bfs(g, res.source, direction).dist[res.target] == best
            assert res.finite_pairs == len(pairs)
            assert res.mean_geodesic == pytest.approx(sum(d for *_, d in pairs) / len(pairs))


def test_shortest_path_unreachable():
    assert shortest_path(graph_of(3, PATH), 2, 0) is None
