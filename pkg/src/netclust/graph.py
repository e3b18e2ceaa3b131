"""Undirected simple graphs: ingestion, components, statistics, perturbation."""

from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components
from scipy.special import zeta

from .errors import ParseError
from .partition import Partition
from .seeds import make_rng

_COMMENT_PREFIXES = ("#", "%")


class Graph:
    """Immutable undirected simple graph over nodes 0..n-1.

    Edges are stored canonically as (u, v) with u < v, sorted
    lexicographically, so edge order (and everything derived from it,
    e.g. which edges a seeded perturbation removes) is reproducible.
    """

    __slots__ = ("_n", "_edges", "_adjacency", "_names", "_edge_set")

    def __init__(self, n, edges, names=None):
        """
        Args:
            n: node count (>= 1).
            edges: iterable of (u, v) node-index pairs.
            names: optional sequence of original node identifiers.

        Raises:
            ValueError: on self-loops, duplicate edges, or indices
                outside 0..n-1.  (The edge-list parser drops such lines
                silently; the constructor is strict so internal bugs
                surface.)
        """
        n = int(n)
        if n < 1:
            raise ValueError("graph needs at least one node")
        pairs = [(int(u), int(v)) for u, v in edges]
        arr = np.array([(min(u, v), max(u, v)) for u, v in pairs], dtype=np.int64)
        arr = arr.reshape(-1, 2)
        if arr.size:
            if arr.min() < 0 or arr.max() >= n:
                raise ValueError("edge endpoint out of range")
            if np.any(arr[:, 0] == arr[:, 1]):
                raise ValueError("self-loops are not allowed")
            order = np.lexsort((arr[:, 1], arr[:, 0]))
            arr = arr[order]
            if np.any(np.all(arr[1:] == arr[:-1], axis=1)):
                raise ValueError("duplicate edges are not allowed")
        arr.setflags(write=False)
        self._n = n
        self._edges = arr
        if names is not None:
            names = tuple(str(x) for x in names)
            if len(names) != n:
                raise ValueError("names length must equal node count")
        self._names = names
        nbrs = [[] for _ in range(n)]
        for u, v in arr:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self._adjacency = tuple(np.array(sorted(b), dtype=np.int64) for b in nbrs)
        self._edge_set = frozenset(map(tuple, arr.tolist()))

    @property
    def n(self):
        return self._n

    @property
    def num_edges(self):
        return self._edges.shape[0]

    @property
    def edges(self):
        """Canonical (E, 2) array of edges, u < v, lexicographically sorted."""
        return self._edges

    @property
    def adjacency(self):
        """Tuple of sorted neighbor arrays, one per node."""
        return self._adjacency

    @property
    def names(self):
        return self._names

    def neighbors(self, v):
        return self._adjacency[v]

    def degrees(self):
        return np.array([len(a) for a in self._adjacency], dtype=np.int64)

    def has_edge(self, u, v):
        return (min(u, v), max(u, v)) in self._edge_set

    def edge_set(self):
        """Frozen set of canonical (u, v) tuples, u < v."""
        return self._edge_set

    def name_of(self, v):
        """Original identifier of node v (stringified index if unnamed)."""
        return self._names[v] if self._names is not None else str(v)

    def to_sparse(self, weights=None):
        """CSR adjacency matrix; ``weights`` maps canonical edges to reals."""
        e = self._edges
        if weights is None:
            data = np.ones(e.shape[0])
        else:
            data = np.array([weights[(int(u), int(v))] for u, v in e], dtype=float)
        row = np.concatenate([e[:, 0], e[:, 1]])
        col = np.concatenate([e[:, 1], e[:, 0]])
        return csr_matrix((np.concatenate([data, data]), (row, col)),
                          shape=(self._n, self._n))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self._n == other._n
                and np.array_equal(self._edges, other._edges)
                and self._names == other._names)

    def __hash__(self):
        return hash((self._n, self._edges.tobytes()))

    def __repr__(self):
        return "Graph(n=%d, e=%d)" % (self._n, self.num_edges)


@dataclass(frozen=True)
class GraphStats:
    """Descriptive statistics: node/edge counts, clustering, power-law fit."""
    n: int
    e: int
    m_half_degree: float
    clustering: float
    gamma: float | None
    kmin: int | None


# ---------------------------------------------------------------------------
# Edge-list / label ingestion
# ---------------------------------------------------------------------------

def _data_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(_COMMENT_PREFIXES):
            continue
        yield lineno, line


def load_edge_list(text, label_text=None):
    """Parse an edge-list document (and optional label document).

    Edge format: one edge per line, two whitespace-separated node
    identifiers; lines starting with '#' or '%' are comments.
    Duplicate edges, reversed duplicates and self-loops are dropped
    silently.  Node identifiers may be arbitrary strings and are mapped
    to dense indices in first-appearance order.

    Label format: one line per node, "nodeId communityId" (tab or
    space).  Label lines may introduce identifiers absent from the edge
    list; those become isolated nodes.  When labels are given, every
    node must receive one.

    Args:
        text: edge-list document.
        label_text: optional label document.

    Returns:
        (Graph, Partition) when labels are given, else (Graph, None).

    Raises:
        ParseError: malformed line (with line number) or empty edge set.
    """
    index = {}
    names = []

    def node_id(token):
        if token not in index:
            index[token] = len(names)
            names.append(token)
        return index[token]

    edges = set()
    for lineno, line in _data_lines(text):
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError("expected two whitespace-separated tokens, got %r" % line,
                             line=lineno)
        u, v = node_id(tokens[0]), node_id(tokens[1])
        if u == v:
            continue
        edges.add((min(u, v), max(u, v)))
    if not edges:
        raise ParseError("no edges found in input")

    labels = None
    if label_text is not None:
        raw_labels = {}
        for lineno, line in _data_lines(label_text):
            tokens = line.split()
            if len(tokens) != 2:
                raise ParseError("expected 'nodeId communityId', got %r" % line,
                                 line=lineno)
            raw_labels[node_id(tokens[0])] = tokens[1]
        missing = [names[v] for v in range(len(names)) if v not in raw_labels]
        if missing:
            raise ParseError("nodes without labels: %s" % ", ".join(missing[:5]))
        labels = Partition.from_labels([raw_labels[v] for v in range(len(names))])

    return Graph(len(names), sorted(edges), names=names), labels


def write_edge_list(g, path):
    """Write ``g`` in the package edge-list format (original names)."""
    with open(path, "w") as fh:
        for u, v in g.edges:
            fh.write("%s %s\n" % (g.name_of(u), g.name_of(v)))


def write_labels(g, partition, path):
    """Write per-node community labels in the package label format."""
    with open(path, "w") as fh:
        for v in range(g.n):
            fh.write("%s %d\n" % (g.name_of(v), partition.labels[v]))


# ---------------------------------------------------------------------------
# Components
# ---------------------------------------------------------------------------

def component_labels(g):
    """Connected-component id per node (scipy union-find under the hood)."""
    _, lab = connected_components(g.to_sparse(), directed=False)
    return lab


def is_connected(g):
    return g.n == 1 or len(np.unique(component_labels(g))) == 1


def largest_connected_component(g, labels=None):
    """Induced subgraph on the largest component, densely re-indexed.

    Ties between equally large components go to the one containing the
    lowest original node index.  A supplied Partition is restricted to
    the surviving nodes (and re-indexed densely).

    Returns:
        (Graph, Partition or None)
    """
    comp = component_labels(g)
    counts = np.bincount(comp)
    best = np.flatnonzero(counts == counts.max()).min()
    keep = np.flatnonzero(comp == best)          # ascending original index
    remap = -np.ones(g.n, dtype=np.int64)
    remap[keep] = np.arange(keep.size)
    sub_edges = [(remap[u], remap[v]) for u, v in g.edges if remap[u] >= 0 and remap[v] >= 0]
    names = None if g.names is None else [g.names[v] for v in keep]
    sub = Graph(keep.size, sub_edges, names=names)
    sub_labels = labels.restrict(keep) if labels is not None else None
    return sub, sub_labels


# ---------------------------------------------------------------------------
# Statistics
# ---------------------------------------------------------------------------

def _triangle_counts(g):
    a = g.to_sparse()
    # links among neighbors of i = 1/2 * sum_j A_ij (A^2)_ij
    return np.asarray((a @ a).multiply(a).sum(axis=1)).ravel() / 2.0


def clustering_coefficient(g):
    """Mean local clustering over nodes of degree >= 2.

    Degree-0/1 nodes have no neighbor pair to close and are excluded
    from the average (they would otherwise dilute it with zeros).
    """
    deg = g.degrees()
    eligible = deg >= 2
    if not np.any(eligible):
        return 0.0
    tri = _triangle_counts(g)[eligible]
    d = deg[eligible].astype(float)
    return float(np.mean(2.0 * tri / (d * (d - 1.0))))


def fit_power_law(degrees):
    """Discrete power-law fit of a degree sequence.

    For every candidate lower cutoff kmin the tail exponent is
    estimated by the discrete maximum-likelihood approximation
    ``gamma = 1 + n_tail / sum(ln(k_i / (kmin - 0.5)))`` and the
    Kolmogorov-Smirnov distance between fitted and empirical tail CDFs
    is evaluated on every integer degree in [kmin, kmax].  The kmin
    with the smallest KS distance wins.

    Args:
        degrees: integer degree sequence.

    Returns:
        (gamma, kmin), or (None, None) when no candidate cutoff leaves
        a fittable tail (fewer than two tail points, or all tail
        degrees equal).
    """
    ks_all = np.asarray(degrees, dtype=np.int64)
    if ks_all.size == 0 or ks_all.min() < 0:
        raise ValueError("degrees must be non-negative integers")
    best = None
    for kmin in np.unique(ks_all):
        kmin = int(kmin)
        if kmin < 1:
            continue
        tail = ks_all[ks_all >= kmin]
        if tail.size < 2 or np.unique(tail).size < 2:
            continue              # a one-value tail carries no slope
        denom = np.log(tail / (kmin - 0.5)).sum()
        gamma = 1.0 + tail.size / denom
        kmax = int(tail.max())
        support = np.arange(kmin, kmax + 1, dtype=float)
        pmf = support ** (-gamma) / zeta(gamma, kmin)
        cdf_fit = np.cumsum(pmf)
        hist = np.bincount(tail, minlength=kmax + 1)[kmin:]
        cdf_emp = np.cumsum(hist) / tail.size
        ks = float(np.max(np.abs(cdf_fit - cdf_emp)))
        if best is None or ks < best[0]:
            best = (ks, float(gamma), kmin)
    if best is None:
        return None, None
    return best[1], best[2]


def graph_stats(g):
    """Compute GraphStats for a connected graph with >= 3 nodes.

    The power-law fields are None when the degree sequence leaves no
    fittable tail; all other statistics are still returned.
    """
    if g.n < 3:
        raise ValueError("statistics need at least 3 nodes")
    if not is_connected(g):
        raise ValueError("statistics are defined on connected graphs")
    gamma, kmin = fit_power_law(g.degrees())
    return GraphStats(
        n=g.n,
        e=g.num_edges,
        m_half_degree=g.num_edges / g.n,
        clustering=clustering_coefficient(g),
        gamma=gamma,
        kmin=kmin,
    )


# ---------------------------------------------------------------------------
# Perturbation
# ---------------------------------------------------------------------------

def _round_half_up(x):
    return int(np.floor(x + 0.5))


def perturb_remove(g, fraction, seed):
    """Remove ``round(fraction * e)`` edges uniformly at random.

    The result may be disconnected; experiment drivers take the largest
    connected component afterwards.

    Args:
        fraction: real in [0, 1).
        seed: integer seed; identical seed gives identical removals.
    """
    if not 0.0 <= fraction < 1.0:
        raise ValueError("fraction must be in [0, 1)")
    k = _round_half_up(fraction * g.num_edges)
    if k >= g.num_edges:
        raise ValueError("cannot remove every edge")
    if k == 0:
        return Graph(g.n, g.edges, names=g.names)
    rng = make_rng(seed)
    drop = rng.choice(g.num_edges, size=k, replace=False)
    keep = np.setdiff1d(np.arange(g.num_edges), drop)
    return Graph(g.n, g.edges[keep], names=g.names)


def perturb_add(g, fraction, seed):
    """Add ``round(fraction * e)`` edges sampled from the non-edges.

    Args:
        fraction: real >= 0.
        seed: integer seed.

    Raises:
        ValueError: when fewer non-adjacent pairs exist than requested.
    """
    if fraction < 0.0:
        raise ValueError("fraction must be >= 0")
    k = _round_half_up(fraction * g.num_edges)
    total_pairs = g.n * (g.n - 1) // 2
    free = total_pairs - g.num_edges
    if k > free:
        raise ValueError("requested %d new edges but only %d non-edges exist" % (k, free))
    if k == 0:
        return Graph(g.n, g.edges, names=g.names)
    rng = make_rng(seed)
    existing = g.edge_set()
    if total_pairs <= 5_000_000:
        iu, iv = np.triu_indices(g.n, k=1)
        mask = np.fromiter(((int(u), int(v)) not in existing for u, v in zip(iu, iv)),
                           dtype=bool, count=iu.size)
        pool = np.stack([iu[mask], iv[mask]], axis=1)
        pick = rng.choice(pool.shape[0], size=k, replace=False)
        new_edges = [tuple(pool[i]) for i in pick]
    else:
        # Too many pairs to enumerate; rejection-sample distinct non-edges.
        chosen = set()
        while len(chosen) < k:
            u = int(rng.integers(g.n))
            v = int(rng.integers(g.n))
            if u == v:
                continue
            e = (min(u, v), max(u, v))
            if e in existing or e in chosen:
                continue
            chosen.add(e)
        new_edges = sorted(chosen)
    combined = np.concatenate([g.edges, np.array(new_edges, dtype=np.int64)])
    return Graph(g.n, combined, names=g.names)
