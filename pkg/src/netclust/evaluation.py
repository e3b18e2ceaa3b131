"""Partition scoring (NMI/AMI) and greedy-routing navigability."""

from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .dissimilarity import apsp, kernel_sp


def _check_pair(a, b):
    if len(a) != len(b):
        raise ValueError("partitions cover %d and %d nodes" % (len(a), len(b)))


def _entropy(sizes, n):
    p = sizes[sizes > 0] / n
    return float(-(p * np.log(p)).sum())


def _contingency(a, b):
    idx = a.labels * b.k + b.labels
    return np.bincount(idx, minlength=a.k * b.k).reshape(a.k, b.k).astype(float)


def _mutual_information(cont, n):
    ai = cont.sum(axis=1)
    bj = cont.sum(axis=0)
    nz = cont > 0
    outer = ai[:, None] * bj[None, :]
    return float(np.sum(cont[nz] / n * np.log(n * cont[nz] / outer[nz])))


def nmi(a, b):
    """Normalized mutual information I/sqrt(H(a)H(b)), natural log.

    Structurally identical partitions score 1 (the single-community
    pair included); when either partition carries zero entropy and they
    differ, the score is 0.
    """
    _check_pair(a, b)
    if a.same_clustering(b):
        return 1.0
    n = len(a)
    ha = _entropy(a.sizes(), n)
    hb = _entropy(b.sizes(), n)
    if ha == 0.0 or hb == 0.0:
        return 0.0
    mi = _mutual_information(_contingency(a, b), n)
    return float(min(1.0, max(0.0, mi / np.sqrt(ha * hb))))


def _expected_mi(ai, bj, n):
    """E[I] under the permutation model (exact hypergeometric sum)."""
    emi = 0.0
    logn = np.log(n)
    for x in ai:
        x = float(x)
        for y in bj:
            y = float(y)
            lo = int(max(1.0, x + y - n))
            hi = int(min(x, y))
            if hi < lo:
                continue
            nij = np.arange(lo, hi + 1, dtype=float)
            term = nij / n * (logn + np.log(nij) - np.log(x) - np.log(y))
            logp = (gammaln(x + 1) + gammaln(y + 1)
                    + gammaln(n - x + 1) + gammaln(n - y + 1)
                    - gammaln(n + 1) - gammaln(nij + 1)
                    - gammaln(x - nij + 1) - gammaln(y - nij + 1)
                    - gammaln(n - x - y + nij + 1))
            emi += float(np.sum(term * np.exp(logp)))
    return emi


def ami(a, b):
    """Mutual information adjusted for chance: (I - E[I])/(sqrt(HaHb) - E[I]).

    E[I] is the exact expectation over random contingency tables with
    the observed marginals; the result is clipped to [-1, 1], with 0/0
    (e.g. a single-community partition) defined as 0.
    """
    _check_pair(a, b)
    if a.same_clustering(b):
        return 1.0
    n = len(a)
    ha = _entropy(a.sizes(), n)
    hb = _entropy(b.sizes(), n)
    if ha == 0.0 or hb == 0.0:
        return 0.0
    mi = _mutual_information(_contingency(a, b), n)
    emi = _expected_mi(a.sizes(), b.sizes(), n)
    denom = np.sqrt(ha * hb) - emi
    if denom == 0.0:
        return 0.0
    return float(min(1.0, max(-1.0, (mi - emi) / denom)))


def score_partition_detail(detected, truth):
    """(score, adjusted) where ``adjusted`` tells which branch ran.

    The adjusted (chance-corrected) score is used when
    nodes / max(k_detected, k_truth) <= 100 — i.e. when communities are
    small enough for chance agreement to matter — and plain NMI above.
    """
    _check_pair(detected, truth)
    adjusted = len(detected) / max(detected.k, truth.k) <= 100
    score = ami(detected, truth) if adjusted else nmi(detected, truth)
    return score, adjusted


def score_partition(detected, truth):
    """Partition-similarity score with automatic chance correction."""
    return score_partition_detail(detected, truth)[0]


# ---------------------------------------------------------------------------
# Greedy routing
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class GrOutcome:
    """Greedy-routing outcome over all ordered node pairs."""
    score: float
    success_rate: float
    ratios: np.ndarray | None


def greedy_route(g, d, src, dst):
    """Greedy route from src to dst following the dissimilarity ``d``.

    At each hop the packet moves to the neighbor with the smallest
    d[neighbor, dst] (ties to the lowest node index).  Revisiting any
    node proves a loop (forwarding is deterministic), so the route is
    dropped then.

    Returns:
        list of nodes from src to dst, or None on failure.
    """
    if src == dst:
        raise ValueError("src and dst must differ")
    path = [src]
    visited = {src}
    cur = src
    while cur != dst:
        nbrs = g.neighbors(cur)
        nxt = int(nbrs[np.argmin(d[nbrs, dst])])
        if nxt in visited:
            return None
        path.append(nxt)
        visited.add(nxt)
        cur = nxt
    return path


def _next_hop_table(g, d):
    n = g.n
    nh = np.empty((n, n), dtype=np.int64)
    for v in range(n):
        nbrs = g.neighbors(v)
        nh[v] = nbrs[np.argmin(d[nbrs, :], axis=0)]
    return nh


def gr_score(g, d, geometry=None, keep_ratios=False):
    """Mean greedy-routing efficiency of dissimilarity ``d`` on ``g``.

    For each ordered pair the ratio (shortest path length)/(greedy path
    length) is averaged; failed routes count 0.  Topological mode uses
    hop counts for both lengths; with ``geometry`` (positive per-edge
    lengths) both numerator and denominator are geometric path lengths.

    The walk below is the deterministic greedy forwarding: since the
    next hop depends only on (current node, destination), a route that
    has not arrived within n-1 hops must have revisited a node, which
    is exactly the failure rule of greedy_route.
    """
    n = g.n
    nh = _next_hop_table(g, d)
    if geometry is not None:
        sp = apsp(g, geometry)
        elen = np.asarray(g.to_sparse(geometry).todense())
    else:
        sp = kernel_sp(g)
        elen = None
    ratios = np.zeros((n, n))
    for dst in range(n):
        cur = np.arange(n)
        cost = np.zeros(n)
        done = cur == dst
        for _ in range(n - 1):
            act = np.flatnonzero(~done)
            if act.size == 0:
                break
            nxt = nh[cur[act], dst]
            cost[act] += 1.0 if elen is None else elen[cur[act], nxt]
            cur[act] = nxt
            done[act] = nxt == dst
        ok = done.copy()
        ok[dst] = False
        ratios[ok, dst] = sp[ok, dst] / cost[ok]
    total = n * (n - 1)
    score = float(ratios.sum() / total)
    success = float((ratios > 0).sum() / total)
    return GrOutcome(score=score, success_rate=success,
                     ratios=ratios if keep_ratios else None)
