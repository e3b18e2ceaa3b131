from pathlib import Path

import numpy as np
import pytest

from netclust import Graph, load_edge_list

DATA = Path(__file__).parent / "data"


def random_connected_graph(rng, n, extra_edge_prob=0.15):
    """Random connected graph: a random spanning tree plus random extras."""
    edges = set()
    order = rng.permutation(n)
    for i in range(1, n):
        u = int(order[i])
        v = int(order[rng.integers(0, i)])
        edges.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < extra_edge_prob:
                edges.add((u, v))
    return Graph(n, sorted(edges))


def two_cliques_with_bridge(size=4):
    """Two disjoint cliques joined by a single edge; a planted 2-community
    graph used as a recovery oracle."""
    edges = []
    for u in range(size):
        for v in range(u + 1, size):
            edges.append((u, v))
            edges.append((size + u, size + v))
    edges.append((size - 1, size))
    return Graph(2 * size, sorted(edges))


@pytest.fixture(scope="session")
def karate():
    g, truth = load_edge_list((DATA / "karate.edges").read_text(),
                              (DATA / "karate.labels").read_text())
    return g, truth


@pytest.fixture()
def rng():
    return np.random.default_rng(12345)
