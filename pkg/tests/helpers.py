import random

from hypothesis import strategies as st

from sna import Graph


@st.composite
def small_graphs(draw, max_nodes=12, min_arcs=0):
    n = draw(st.integers(2, max_nodes))
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    arcs = draw(st.lists(st.sampled_from(pairs), min_size=min_arcs, unique=True,
                         max_size=min(len(pairs), 4 * n)))
    return n, sorted(arcs)


def graph_of(n, arcs) -> Graph:
    return Graph.from_arcs(arcs, n)


def random_graphs(count, max_n=30, seed=12345):
    """Deterministic batch of random simple digraphs with n <= max_n."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(3, max_n)
        m = rng.randint(0, min(n * (n - 1), 3 * n))
        pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
        out.append((n, sorted(rng.sample(pairs, m))))
    return out
