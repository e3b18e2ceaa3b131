"""Louvain modularity optimization with an explicit level hierarchy."""

from dataclasses import dataclass

import numpy as np

from .partition import Partition
from .seeds import make_rng


def modularity(g, p):
    """Newman modularity Q of partition ``p`` on graph ``g``.

    Q = sum over communities of [e_c/E - (deg_c/(2E))^2], with e_c the
    intra-community edge count and deg_c the community's total degree.
    """
    if len(p) != g.n:
        raise ValueError("partition labels %d nodes, graph has %d" % (len(p), g.n))
    lab = p.labels
    e = g.num_edges
    intra = np.zeros(p.k)
    same = lab[g.edges[:, 0]] == lab[g.edges[:, 1]]
    np.add.at(intra, lab[g.edges[:, 0][same]], 1.0)
    deg_c = np.bincount(lab, weights=g.degrees(), minlength=p.k)
    return float(np.sum(intra / e - (deg_c / (2.0 * e)) ** 2))


@dataclass(frozen=True)
class LouvainHierarchy:
    """Louvain output: one partition of the original nodes per level.

    Level 0 is the finest; each later level merges whole communities of
    the previous one and never lowers Q.
    """
    levels: tuple
    modularity: tuple


class _CoarseGraph:
    """Weighted working graph for the coarsening phases (self-loops kept)."""

    def __init__(self, n, nbrs, weights, self_weight):
        self.n = n
        self.nbrs = nbrs                  # list of neighbor index arrays
        self.weights = weights            # matching weight arrays
        self.self_weight = self_weight    # per-node self-loop weight
        self.k = np.array([w.sum() for w in weights]) + 2.0 * self_weight
        self.m = sum(w.sum() for w in weights) / 2.0 + self_weight.sum()

    @classmethod
    def from_graph(cls, g):
        nbrs = [a for a in g.adjacency]
        weights = [np.ones(a.size) for a in g.adjacency]
        return cls(g.n, nbrs, weights, np.zeros(g.n))

    def coarsen(self, comm):
        """Collapse communities to nodes; intra weight becomes self-loops."""
        ids = np.unique(comm)
        remap = np.zeros(comm.max() + 1, dtype=np.int64)
        remap[ids] = np.arange(ids.size)
        dense = remap[comm]
        nc = ids.size
        inter = [{} for _ in range(nc)]
        self_w = np.zeros(nc)
        for u in range(self.n):
            cu = dense[u]
            self_w[cu] += self.self_weight[u]
            for v, w in zip(self.nbrs[u], self.weights[u]):
                cv = dense[v]
                if cu == cv:
                    self_w[cu] += w / 2.0      # each intra edge visited twice
                else:
                    inter[cu][cv] = inter[cu].get(cv, 0.0) + w
        nbrs = [np.array(sorted(d), dtype=np.int64) for d in inter]
        weights = [np.array([inter[c][v] for v in nbrs[c]]) for c in range(nc)]
        return _CoarseGraph(nc, nbrs, weights, self_w), dense


def _local_moves(cg, rng):
    """Phase 1: greedy node moves until a full pass changes nothing."""
    comm = np.arange(cg.n, dtype=np.int64)
    comm_tot = cg.k.copy()
    two_m = 2.0 * cg.m
    improved = False
    while True:
        moved = 0
        for v in rng.permutation(cg.n):
            v = int(v)
            old = int(comm[v])
            dnc = {}
            for u, w in zip(cg.nbrs[v], cg.weights[v]):
                c = int(comm[u])
                dnc[c] = dnc.get(c, 0.0) + w
            comm_tot[old] -= cg.k[v]
            base = dnc.get(old, 0.0) - comm_tot[old] * cg.k[v] / two_m
            best_c, best_s = old, base
            for c in sorted(dnc):
                if c == old:
                    continue
                s = dnc[c] - comm_tot[c] * cg.k[v] / two_m
                if s > best_s or (s == best_s and c < best_c):
                    best_c, best_s = c, s
            if best_s > base and best_c != old:
                comm[v] = best_c
                moved += 1
            comm_tot[comm[v]] += cg.k[v]
        if moved == 0:
            break
        improved = True
    return comm, improved


def louvain(g, seed):
    """Run Louvain on ``g``; returns the full level hierarchy.

    Node traversal order is a fresh seeded permutation per pass, so the
    hierarchy is a pure function of (graph, seed).
    """
    rng = make_rng(seed)
    cg = _CoarseGraph.from_graph(g)
    node_to_coarse = np.arange(g.n, dtype=np.int64)
    levels = []
    qs = []
    while True:
        comm, improved = _local_moves(cg, rng)
        if not improved:
            if not levels:
                p = Partition.from_labels(node_to_coarse)
                levels.append(p)
                qs.append(modularity(g, p))
            break
        cg, dense = cg.coarsen(comm)
        node_to_coarse = dense[node_to_coarse]
        p = Partition.from_labels(node_to_coarse)
        levels.append(p)
        qs.append(modularity(g, p))
        if cg.n == 1:
            break
    return LouvainHierarchy(levels=tuple(levels), modularity=tuple(qs))


def best_level(h, truth):
    """Pick the hierarchy level with the highest NMI against ``truth``.

    Returns (partition, nmi); the earliest level wins ties.
    """
    from .evaluation import nmi
    best = None
    for p in h.levels:
        score = nmi(p, truth)
        if best is None or score > best[1]:
            best = (p, score)
    return best
