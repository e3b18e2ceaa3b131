"""Independent reference implementations used only to cross-check the
package.  Everything here is deliberately naive: breadth-first search by
hand, exhaustive path enumeration, direct formula evaluation."""

from collections import deque
from itertools import combinations

import numpy as np


def bfs_distances(g):
    """Hop distances by literal breadth-first search."""
    n = g.n
    d = np.full((n, n), -1.0)
    for s in range(n):
        d[s, s] = 0.0
        q = deque([s])
        while q:
            u = q.popleft()
            for v in g.neighbors(u):
                if d[s, v] < 0:
                    d[s, v] = d[s, u] + 1
                    q.append(v)
    return d


def enumerate_shortest_paths(g, s, t):
    """All shortest s-t paths as node tuples (exhaustive; small n only)."""
    dist = bfs_distances(g)

    def extend(path):
        u = path[-1]
        if u == t:
            yield tuple(path)
            return
        for v in g.neighbors(u):
            if dist[s, v] == dist[s, u] + 1 and dist[v, t] == dist[u, t] - 1:
                yield from extend(path + [int(v)])

    return list(extend([s]))


def edge_betweenness_enumerated(g):
    """EBC by explicit shortest-path enumeration over unordered pairs."""
    scores = {tuple(map(int, e)): 0.0 for e in g.edges}
    for s, t in combinations(range(g.n), 2):
        paths = enumerate_shortest_paths(g, s, t)
        for path in paths:
            for u, v in zip(path, path[1:]):
                scores[(min(u, v), max(u, v))] += 1.0 / len(paths)
    return scores


def modularity_pairwise(g, p):
    """Q from the per-pair formula (1/2m) sum_ij (A_ij - k_i k_j / 2m) delta."""
    lab = p.labels
    a = np.asarray(g.to_sparse().todense())
    k = a.sum(axis=1)
    two_m = k.sum()
    same = lab[:, None] == lab[None, :]
    return float(((a - np.outer(k, k) / two_m) * same).sum() / two_m)


def set_partitions(items):
    """All set partitions (restricted growth strings); factorial blow-up."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partial in set_partitions(rest):
        for i in range(len(partial)):
            yield partial[:i] + [[first] + partial[i]] + partial[i + 1:]
        yield [[first]] + partial


def best_modularity_bruteforce(g):
    """Maximum Q over every partition of the nodes (n <= ~8)."""
    from netclust import Partition, modularity
    best = -np.inf
    for blocks in set_partitions(list(range(g.n))):
        labels = np.empty(g.n, dtype=np.int64)
        for i, block in enumerate(blocks):
            labels[block] = i
        best = max(best, modularity(g, Partition.from_labels(labels)))
    return best
