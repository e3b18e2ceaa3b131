"""Affinity propagation over a dissimilarity matrix.

Similarities are negated dissimilarities with a shared self-similarity
(the preference) on the diagonal.  Responsibility/availability messages
are exchanged with damping until the exemplar set stays unchanged for a
full convergence window and the messages themselves have settled.
``preference_search`` bisects the preference to steer the number of
communities toward a requested target.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateResultError
from .partition import Partition

# Integer-valued kernels (hop counts) produce exact message ties that
# make the exemplar choice ill-defined; an infinitesimal deterministic
# jitter (fixed stream, amplitude 1e-9 of the dissimilarity spread)
# breaks them reproducibly without affecting well-separated values.
JITTER_SEED = 10
_JITTER_AMPLITUDE = 1e-9
# Messages count as settled when the largest per-iteration change falls
# below this fraction of the similarity scale; exemplar-set stability
# alone can be a transient of heavily damped message ramps.
_SETTLE_FRACTION = 1e-8
_OSCILLATION_PATIENCE = 100


@dataclass(frozen=True)
class ApSettings:
    """Message-passing controls."""
    damping: float = 0.9
    max_iterations: int = 2000
    convergence_window: int = 50
    preference_search_steps: int = 30

    def __post_init__(self):
        if not 0.5 <= self.damping < 1.0:
            raise ValueError("damping must be in [0.5, 1)")
        if not self.max_iterations >= self.convergence_window >= 1:
            raise ValueError("need max_iterations >= convergence_window >= 1")
        if self.preference_search_steps < 1:
            raise ValueError("preference_search_steps must be >= 1")


@dataclass(frozen=True, eq=False)
class ApResult:
    """Outcome of one affinity-propagation run.

    ``labels`` is None for a degenerate run (no exemplar emerged);
    otherwise ``exemplar_labels[i]`` is the node index of i's exemplar
    and ``labels`` the same assignment as a dense Partition.
    """
    labels: Partition | None
    exemplars: frozenset
    iterations: int
    converged: bool
    preference: float
    exemplar_labels: np.ndarray | None

    @property
    def degenerate(self):
        return self.labels is None

    @property
    def k(self):
        """Number of communities (0 when degenerate)."""
        return self.labels.k if self.labels is not None else 0


def _prepare_similarities(d, preference):
    n = d.shape[0]
    s = -d.astype(float)
    np.fill_diagonal(s, preference)
    rng = np.random.default_rng(JITTER_SEED)
    mask = ~np.eye(n, dtype=bool)
    off = d[mask]
    scale = off.max() - off.min() if off.size else 1.0
    s = s + _JITTER_AMPLITUDE * max(scale, 1e-12) * rng.random((n, n))
    return s


def _message_loop(s, damping, max_iter, window, oscillation_guard):
    """Run damped message passing; returns (exemplars, iters, converged,
    oscillating)."""
    n = s.shape[0]
    settle_tol = _SETTLE_FRACTION * max(np.abs(s).max(), 1e-30)
    a = np.zeros((n, n))
    r = np.zeros((n, n))
    rows = np.arange(n)
    stable = 0
    prev = None
    converged = False
    osc = 0
    c1 = c2 = -1
    it = 0
    for it in range(1, max_iter + 1):
        asum = a + s
        idx = asum.argmax(axis=1)
        first = asum[rows, idx]
        asum[rows, idx] = -np.inf
        second = asum.max(axis=1)
        rn = s - first[:, None]
        rn[rows, idx] = s[rows, idx] - second
        delta = np.abs(rn - r).max()
        r *= damping
        r += (1 - damping) * rn
        rp = np.maximum(r, 0)
        np.fill_diagonal(rp, np.diag(r))
        colsum = rp.sum(axis=0)
        an = np.minimum(0.0, colsum[None, :] - rp)
        np.fill_diagonal(an, colsum - np.diag(rp))
        delta = max(delta, np.abs(an - a).max())
        a *= damping
        a += (1 - damping) * an
        ex = frozenset(np.flatnonzero(np.diag(a) + np.diag(r) > 0).tolist())
        if ex and ex == prev:
            stable += 1
            if stable >= window and delta <= settle_tol:
                converged = True
                break
        else:
            stable = 1 if ex else 0
        prev = ex
        if oscillation_guard:
            count = len(ex)
            if c2 >= 0 and count == c2 and count != c1:
                osc += 1
                if osc >= _OSCILLATION_PATIENCE:
                    return None, it, False, True
            else:
                osc = 0
            c2, c1 = c1, count
    exemplars = np.flatnonzero(np.diag(a) + np.diag(r) > 0)
    return exemplars, it, converged, False


def _assign(s, exemplars):
    """Label nodes by best exemplar, then re-elect each cluster's center."""
    lab = exemplars[np.argmax(s[:, exemplars], axis=1)]
    lab[exemplars] = exemplars
    for k in np.unique(lab):
        mem = np.flatnonzero(lab == k)
        j = mem[np.argmax(s[np.ix_(mem, mem)].sum(axis=0))]
        lab[mem] = j
    ex2 = np.unique(lab)
    lab = ex2[np.argmax(s[:, ex2], axis=1)]
    lab[ex2] = ex2
    return lab, ex2


def ap_run(d, preference, settings=None):
    """One affinity-propagation run at a fixed shared preference.

    Args:
        d: dissimilarity matrix (symmetric, zero diagonal, finite).
        preference: shared self-similarity s(k,k).
        settings: ApSettings (defaults used when None).

    Returns:
        ApResult; degenerate (labels=None) when no exemplar emerged
        within the iteration budget.

    Raises:
        ValueError: non-square or non-finite input.
    """
    settings = settings or ApSettings()
    d = np.asarray(d, dtype=float)
    if d.ndim != 2 or d.shape[0] != d.shape[1]:
        raise ValueError("dissimilarity matrix must be square")
    if not np.isfinite(d).all():
        raise ValueError("dissimilarity matrix contains non-finite values")
    n = d.shape[0]
    if n == 1:
        return ApResult(labels=Partition.from_labels([0]),
                        exemplars=frozenset([0]), iterations=0,
                        converged=True, preference=float(preference),
                        exemplar_labels=np.zeros(1, dtype=np.int64))
    s = _prepare_similarities(d, preference)

    damping = settings.damping
    exemplars, it, converged, oscillating = _message_loop(
        s, damping, settings.max_iterations, settings.convergence_window,
        oscillation_guard=True)
    if oscillating:
        # Period-2 exemplar-count oscillation: raise damping and retry once.
        damping = min(damping + 0.05, 0.99)
        exemplars, it, converged, _ = _message_loop(
            s, damping, settings.max_iterations, settings.convergence_window,
            oscillation_guard=False)

    if exemplars is None or exemplars.size == 0:
        return ApResult(labels=None, exemplars=frozenset(), iterations=it,
                        converged=False, preference=float(preference),
                        exemplar_labels=None)
    lab, ex2 = _assign(s, exemplars)
    return ApResult(labels=Partition.from_labels(lab),
                    exemplars=frozenset(int(x) for x in ex2),
                    iterations=it, converged=converged,
                    preference=float(preference),
                    exemplar_labels=lab)


def preference_search(d, target_k, settings=None):
    """Bisect the shared preference toward ``target_k`` communities.

    The search starts on [hi - 2*(max d - min d)*n, hi] with hi the
    largest off-diagonal similarity, widens the bracket by doubling
    when the target count falls outside it, then bisects.  Among all
    probes the result whose community count is closest to the target
    wins; ties go to fewer communities.

    Raises:
        ValueError: target_k outside 1..n.
        DegenerateResultError: every probed preference failed to
            produce exemplars (the error carries the probe log).
    """
    settings = settings or ApSettings()
    d = np.asarray(d, dtype=float)
    n = d.shape[0]
    if not 1 <= target_k <= n:
        raise ValueError("target_k must be in 1..%d" % n)
    if n == 1:
        return ap_run(d, 0.0, settings)

    mask = ~np.eye(n, dtype=bool)
    off = d[mask]
    hi = float((-off).max())
    # spread floor: a constant-distance matrix must still yield a usable
    # bracket, so fall back to the distance magnitude itself
    span = 2.0 * n * max(off.max() - off.min(), abs(hi), 1e-3)
    lo = hi - span

    probes = []
    best = None

    def probe(p):
        nonlocal best
        res = ap_run(d, p, settings)
        probes.append((float(p), res.k, res.converged))
        if not res.degenerate:
            key = (abs(res.k - target_k), res.k)
            if best is None or key < best[0]:
                best = (key, res)
        return res.k

    for _ in range(8):
        if probe(lo) <= target_k:
            break
        span *= 2.0
        lo = hi - span
    for _ in range(8):
        if probe(hi) >= target_k:
            break
        hi += span
        span *= 2.0

    for _ in range(settings.preference_search_steps):
        mid = (lo + hi) / 2.0
        k = probe(mid)
        if k == target_k:
            break
        if k < target_k:
            lo = mid
        else:
            hi = mid

    if best is None:
        raise DegenerateResultError(
            "no probed preference produced exemplars (target_k=%d)" % target_k,
            probes=probes)
    return best[1]
