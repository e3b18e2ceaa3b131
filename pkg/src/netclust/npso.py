"""Synthetic hyperbolic networks with planted communities.

Nodes appear one at a time on the hyperbolic disk: radius grows
logarithmically with arrival order (earlier nodes are more popular) and
drifts outward for old nodes ("fading"), while angles come from a
Gaussian mixture whose components are the planted communities.  Each
new node links to existing nodes that are hyperbolically close, exactly
(T = 0) or softly via a Fermi connection probability (T > 0).
"""

from dataclasses import dataclass

import numpy as np
from scipy.special import expit

from .errors import DegenerateResultError
from .graph import Graph, is_connected
from .partition import Partition
from .seeds import derive_seed, make_rng

_MAX_ATTEMPTS = 10
_RETRY_NAMESPACE = 997  # derive_seed counter reserved for reconnection retries


@dataclass(frozen=True)
class NpsoParams:
    """Generator parameters (n nodes, m links per arrival, temperature t,
    degree exponent gamma, c communities)."""
    n: int
    m: int
    t: float
    gamma: float
    c: int

    def __post_init__(self):
        if self.m < 1 or int(self.m) != self.m:
            raise ValueError("m must be an integer >= 1")
        if self.n <= self.m + 1:
            raise ValueError("need n > m + 1")
        if self.t < 0:
            raise ValueError("temperature must be >= 0")
        if self.t > 0 and float(self.t).is_integer():
            raise ValueError("integer temperatures > 0 are singular "
                             "(sin(t*pi) = 0 in the connection radius)")
        if not self.gamma > 2:
            raise ValueError("gamma must be > 2")
        if self.c < 1 or int(self.c) != self.c:
            raise ValueError("c must be an integer >= 1")

    @property
    def beta(self):
        """Fading exponent beta = 1/(gamma - 1), in (0, 1)."""
        return 1.0 / (self.gamma - 1.0)


@dataclass(frozen=True, eq=False)
class NpsoNetwork:
    """A generated network with coordinates and planted communities.

    ``components`` keeps the raw nearest-mean component id per node;
    ``truth`` is the same assignment as a dense Partition.
    """
    graph: Graph
    radial: np.ndarray
    angular: np.ndarray
    truth: Partition
    components: np.ndarray
    params: NpsoParams
    seed: int


def mixture_params(c):
    """Angular Gaussian mixture for ``c`` communities.

    Means are equidistant on the circle, every component has weight 1/c
    and standard deviation one sixth of the angular slot 2*pi/c.
    """
    if c < 1:
        raise ValueError("need at least one component")
    means = 2.0 * np.pi * np.arange(c) / c
    sigmas = np.full(c, (2.0 * np.pi / c) / 6.0)
    weights = np.full(c, 1.0 / c)
    return means, sigmas, weights


def sample_angle(mix, rng):
    """Draw one angle from the mixture: pick a component, draw the
    Gaussian, wrap into [0, 2*pi)."""
    means, sigmas, weights = mix
    comp = rng.choice(means.size, p=weights)
    return float(rng.normal(means[comp], sigmas[comp]) % (2.0 * np.pi))


def _circular_distance(a, b):
    return np.pi - np.abs(np.pi - np.abs(a - b))


def assign_community(theta, mix):
    """Community of an angle: the component with the circularly closest
    mean; ties go to the lowest component id."""
    means = mix[0]
    return int(np.argmin(_circular_distance(theta, means)))


def hyperbolic_distance(r1, theta1, r2, theta2):
    """Hyperbolic distance between two polar points on the disk.

    The arccosh argument is clamped to 1 against rounding (identical
    points can otherwise produce values just below the domain).
    """
    dth = _circular_distance(theta1, theta2)
    arg = np.cosh(r1) * np.cosh(r2) - np.sinh(r1) * np.sinh(r2) * np.cos(dth)
    return np.arccosh(np.maximum(arg, 1.0))


def _grow(params, rng):
    """One growth run; returns (edges, theta, final radii, components)."""
    n, m, t_temp = params.n, params.m, params.t
    beta = params.beta
    means, sigmas, weights = mixture_params(params.c)
    comp = rng.choice(params.c, size=n, p=weights)
    theta = rng.normal(means[comp], sigmas[0]) % (2.0 * np.pi)
    r_init = 2.0 * np.log(np.arange(1, n + 1))
    edges = []
    for t in range(2, n + 1):
        i = t - 1
        r_t = r_init[i]
        mt = min(m, t - 1)
        r_cur = beta * r_init[:i] + (1.0 - beta) * r_t
        dth = _circular_distance(theta[:i], theta[i])
        arg = (np.cosh(r_t) * np.cosh(r_cur)
               - np.sinh(r_t) * np.sinh(r_cur) * np.cos(dth))
        x = np.arccosh(np.maximum(arg, 1.0))
        if t - 1 <= m:
            targets = np.arange(i)
        elif t_temp == 0:
            targets = np.argsort(x, kind="stable")[:mt]
        else:
            # Connection radius from the expected-degree normalization.
            r_conn = r_t - 2.0 * np.log(
                (2.0 * t_temp * (1.0 - t ** (-(1.0 - beta))))
                / (np.sin(t_temp * np.pi) * m * (1.0 - beta)))
            w = expit(-(x - r_conn) / (2.0 * t_temp))
            if np.all(w <= 0):
                targets = np.argsort(x, kind="stable")[:mt]
            else:
                # Weighted sampling without replacement: the mt smallest
                # exponential/weight keys are a sample with probabilities
                # proportional to w (zero-weight nodes are unreachable).
                keys = np.where(w > 0,
                                rng.exponential(1.0, i) / np.where(w > 0, w, 1.0),
                                np.inf)
                targets = np.argsort(keys, kind="stable")[:mt]
        edges.extend((int(s), i) for s in targets)
    r_final = beta * r_init + (1.0 - beta) * r_init[-1]
    dmat = _circular_distance(theta[:, None], means[None, :])
    components = dmat.argmin(axis=1)
    return edges, theta, r_final, components


def npso_generate(params, seed):
    """Generate a connected network for ``params``.

    Deterministic per (params, seed).  A disconnected draw (rare at the
    usual m) is retried on a derived sub-seed, up to 10 attempts.

    Raises:
        DegenerateResultError: no connected graph within the attempts.
    """
    attempts = []
    for attempt in range(_MAX_ATTEMPTS):
        sub = seed if attempt == 0 else derive_seed(seed, _RETRY_NAMESPACE, attempt)
        rng = make_rng(sub)
        edges, theta, r_final, components = _grow(params, rng)
        g = Graph(params.n, edges)
        if is_connected(g):
            return NpsoNetwork(graph=g, radial=r_final, angular=theta,
                               truth=Partition.from_labels(components),
                               components=np.asarray(components),
                               params=params, seed=int(seed))
        attempts.append((int(sub), g.num_edges))
    raise DegenerateResultError(
        "no connected graph in %d attempts for %r" % (_MAX_ATTEMPTS, params),
        probes=attempts)


def edge_lengths(net):
    """Hyperbolic length of every edge (final coordinates); the geometric
    ground truth for routing scores."""
    r, th = net.radial, net.angular
    out = {}
    for u, v in net.graph.edges:
        u, v = int(u), int(v)
        out[(u, v)] = float(hyperbolic_distance(r[u], th[u], r[v], th[v]))
    return out


def write_coordinates(net, path):
    """Write per-node coordinates: 'nodeId r theta communityId' lines."""
    with open(path, "w") as fh:
        for v in range(net.graph.n):
            fh.write("%d %.12g %.12g %d\n"
                     % (v, net.radial[v], net.angular[v], net.components[v]))
