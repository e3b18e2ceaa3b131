"""Node-dissimilarity kernels: SP, ESP, CN, J, RA, EBC.

Every kernel maps a connected unweighted graph to a dense symmetric
N x N matrix with zero diagonal and positive finite off-diagonal
entries, obtained as all-pairs shortest paths over some re-weighting
of the topology.
"""

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import dijkstra
from scipy.spatial.distance import pdist, squareform


def _finite_or_raise(d):
    if np.isinf(d).any():
        i, j = np.argwhere(np.isinf(d))[0]
        raise ValueError("graph is disconnected: no path between nodes %d and %d"
                         % (i, j))
    return d


def _apsp_csr(mat, unweighted=False):
    """All-pairs shortest paths of a CSR adjacency; symmetrized exactly."""
    d = dijkstra(mat, directed=False, unweighted=unweighted)
    _finite_or_raise(d)
    # Dijkstra sums floats in per-source order; force exact symmetry.
    d = np.minimum(d, d.T)
    np.fill_diagonal(d, 0.0)
    return d


def apsp(g, weights=None):
    """All-pairs shortest-path matrix of ``g``.

    Args:
        g: connected Graph.
        weights: optional dict {canonical edge: positive weight}; hop
            counts when absent.

    Raises:
        ValueError: non-positive weight, or disconnected graph (the
            error names an unreachable pair).
    """
    if weights is not None:
        bad = [e for e, w in weights.items() if not w > 0 or not np.isfinite(w)]
        if bad:
            raise ValueError("non-positive edge weight on %s" % (bad[0],))
        return _apsp_csr(g.to_sparse(weights))
    return _apsp_csr(g.to_sparse(), unweighted=True)


def edge_betweenness(g):
    """Edge betweenness centrality, unordered source/target pairs.

    Brandes' accumulation: one BFS per source with path counting,
    then dependency back-propagation level by level.  Each unordered
    pair is counted once (the two-endpoint sweep double-counts, hence
    the final halving).

    Returns:
        dict {canonical edge: betweenness}.
    """
    n = g.n
    a = g.to_sparse()
    indptr, indices = a.indptr, a.indices
    lut = {(int(u), int(v)): i for i, (u, v) in enumerate(g.edges)}
    eid = np.empty(indices.size, dtype=np.int64)
    for u in range(n):
        for p in range(indptr[u], indptr[u + 1]):
            v = int(indices[p])
            eid[p] = lut[(min(u, v), max(u, v))]

    def slots_of(nodes):
        return np.concatenate([np.arange(indptr[v], indptr[v + 1]) for v in nodes])

    scores = np.zeros(g.num_edges)
    for s in range(n):
        dist = np.full(n, -1, dtype=np.int64)
        sigma = np.zeros(n)
        dist[s] = 0
        sigma[s] = 1.0
        levels = [np.array([s], dtype=np.int64)]
        depth = 0
        while levels[-1].size:
            frontier = levels[-1]
            sl = slots_of(frontier)
            tgt = indices[sl]
            src = np.repeat(frontier, indptr[frontier + 1] - indptr[frontier])
            unseen = dist[tgt] == -1
            dist[tgt[unseen]] = depth + 1
            forward = dist[tgt] == depth + 1
            np.add.at(sigma, tgt[forward], sigma[src[forward]])
            levels.append(np.unique(tgt[unseen]))
            depth += 1
        delta = np.zeros(n)
        for lev in reversed(levels[1:]):
            if not lev.size:
                continue
            sl = slots_of(lev)
            nbr = indices[sl]
            wrep = np.repeat(lev, indptr[lev + 1] - indptr[lev])
            pred = dist[nbr] == dist[wrep] - 1
            c = sigma[nbr[pred]] / sigma[wrep[pred]] * (1.0 + delta[wrep[pred]])
            np.add.at(delta, nbr[pred], c)
            np.add.at(scores, eid[sl[pred]], c)
    return {(int(u), int(v)): scores[i] / 2.0 for i, (u, v) in enumerate(g.edges)}


def _common_neighbor_matrix(g):
    a = g.to_sparse()
    return np.asarray((a @ a).todense()), np.asarray(a.todense())


def _support_apsp(weight_dense, direct_pairs, full_apsp):
    """APSP over a dense weighted support graph.

    With ``full_apsp`` (default reading) the returned matrix is a true
    shortest-path metric; otherwise direct support entries keep their
    formula weights and only the missing pairs are filled by shortest
    paths.
    """
    d = _apsp_csr(csr_matrix(weight_dense))
    if not full_apsp:
        d[direct_pairs] = weight_dense[direct_pairs]
        d = np.minimum(d, d.T)
        np.fill_diagonal(d, 0.0)
    return d


def kernel_sp(g):
    """Shortest-path kernel: plain hop-count distances."""
    return apsp(g)


def kernel_esp(g):
    """Embedded-shortest-path kernel.

    Each node is represented by its vector of hop distances to all
    nodes; the dissimilarity is the Euclidean distance between those
    vectors.
    """
    s = kernel_sp(g)
    return squareform(pdist(s))


def kernel_cn(g, full_apsp=True):
    """Common-neighbors kernel.

    Support links = all node pairs with cn > 0, plus the original
    edges (kept even at cn = 0 so the support graph stays connected),
    weighted 1/(1 + cn); the result is the APSP of that support graph.
    """
    cn, adj = _common_neighbor_matrix(g)
    support = (cn > 0) | (adj > 0)
    np.fill_diagonal(support, False)
    w = np.where(support, 1.0 / (1.0 + cn), 0.0)
    return _support_apsp(w, support, full_apsp)


def kernel_jaccard(g, full_apsp=True):
    """Jaccard kernel: like CN, but weighted by a neighborhood-overlap ratio.

    J_ij = cn_ij / u_ij with u_ij the size of the union of the two
    nodes' neighborhoods including the nodes themselves
    (u = deg_i + deg_j + 2 - cn_ij - 2 A_ij); support pairs are the
    same as for CN, weighted 1/(1 + J).
    """
    cn, adj = _common_neighbor_matrix(g)
    deg = adj.sum(axis=1)
    union = deg[:, None] + deg[None, :] + 2.0 - cn - 2.0 * adj
    support = (cn > 0) | (adj > 0)
    np.fill_diagonal(support, False)
    with np.errstate(divide="ignore", invalid="ignore"):
        j = np.where(support, cn / union, 0.0)
    w = np.where(support, 1.0 / (1.0 + j), 0.0)
    return _support_apsp(w, support, full_apsp)


def kernel_ra(g):
    """Repulsion-attraction kernel.

    Each original edge is weighted (1 + e_i + e_j)/(1 + cn_ij), where
    e_i = deg(i) - cn_ij - 1 is the number of links of i reaching
    neither j nor a common neighbor; hubs repel, shared neighborhoods
    attract.  APSP over the weighted edges.
    """
    deg = g.degrees()
    weights = {}
    for u, v in g.edges:
        u, v = int(u), int(v)
        cn = np.intersect1d(g.neighbors(u), g.neighbors(v),
                            assume_unique=True).size
        e_u = deg[u] - cn - 1
        e_v = deg[v] - cn - 1
        weights[(u, v)] = (1.0 + e_u + e_v) / (1.0 + cn)
    return apsp(g, weights)


def kernel_ebc(g):
    """Edge-betweenness kernel.

    Edges are weighted EBC/(EBC + mean EBC), mapping betweenness into
    [0, 1) with the average edge at 0.5 (invariant to any constant
    rescaling of the raw EBC values).  APSP over the weighted edges.
    """
    ebc = edge_betweenness(g)
    mean = sum(ebc.values()) / len(ebc)
    weights = {e: b / (b + mean) for e, b in ebc.items()}
    return apsp(g, weights)


KERNELS = {
    "SP": kernel_sp,
    "ESP": kernel_esp,
    "CN": kernel_cn,
    "J": kernel_jaccard,
    "RA": kernel_ra,
    "EBC": kernel_ebc,
}


def validate_dissimilarity(d):
    """Raise ValueError unless ``d`` is a valid dissimilarity matrix."""
    d = np.asarray(d)
    if d.ndim != 2 or d.shape[0] != d.shape[1]:
        raise ValueError("dissimilarity matrix must be square")
    if not np.isfinite(d).all():
        raise ValueError("dissimilarity matrix contains non-finite values")
    if not np.array_equal(d, d.T):
        raise ValueError("dissimilarity matrix must be symmetric")
    if np.any(np.diag(d) != 0.0):
        raise ValueError("dissimilarity matrix must have a zero diagonal")
    off = d[~np.eye(d.shape[0], dtype=bool)]
    if off.size and off.min() <= 0.0:
        raise ValueError("off-diagonal dissimilarities must be positive")
    return d
