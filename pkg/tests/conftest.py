import random

import pytest

from miscover import complexity_table, from_edges


def random_graph(rng: random.Random, n: int, p: float = 0.5):
    """Labeled graph on n vertices with independent edge probability p."""
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return from_edges(n, edges)


def random_graph_no_isolated(rng: random.Random, n: int, p: float = 0.5):
    while True:
        g = random_graph(rng, n, p)
        if all(g.adj[v] for v in range(n)):
            return g


def all_graphs(n: int):
    """Every labeled graph on n vertices, in edge-mask order."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for mask in range(1 << len(pairs)):
        yield from_edges(n, [p for k, p in enumerate(pairs) if mask >> k & 1])


@pytest.fixture(scope="session")
def big_table():
    # limit exceeds max_partition_product(25) + 1 = 8749, as the largest-
    # integer-of-complexity-n checks require
    return complexity_table(8800)
