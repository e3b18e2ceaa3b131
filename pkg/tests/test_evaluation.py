import numpy as np
import pytest
from sklearn.metrics import (adjusted_mutual_info_score,
                             normalized_mutual_info_score)

from netclust import (Graph, Partition, ami, gr_score, greedy_route,
                      kernel_sp, nmi, score_partition,
                      score_partition_detail)

from conftest import random_connected_graph, two_cliques_with_bridge


def _pair(rng, n=40, ka=4, kb=3):
    a = Partition.from_labels(rng.integers(0, ka, n))
    b = Partition.from_labels(rng.integers(0, kb, n))
    return a, b


def test_identical_partitions_score_one():
    for labels in ([0, 1, 0, 2], [0] * 5, list(range(6))):
        p = Partition.from_labels(labels)
        assert nmi(p, p) == 1.0
        assert ami(p, p) == 1.0
    # relabeled but structurally identical
    a = Partition([0, 0, 1, 1])
    b = Partition([1, 1, 0, 0])
    assert nmi(a, b) == 1.0 and ami(a, b) == 1.0


def test_zero_entropy_differing():
    single = Partition([0, 0, 0, 0])
    other = Partition([0, 0, 1, 1])
    assert nmi(single, other) == 0.0
    assert ami(single, other) == 0.0      # 0/0 convention


def test_bounds_and_symmetry(rng):
    for _ in range(50):
        a, b = _pair(rng)
        va, vb = nmi(a, b), nmi(b, a)
        assert va == pytest.approx(vb)
        assert 0.0 <= va <= 1.0
        wa, wb = ami(a, b), ami(b, a)
        assert wa == pytest.approx(wb)
        assert -1.0 <= wa <= 1.0


def test_relabel_invariance(rng):
    a, b = _pair(rng)
    perm = rng.permutation(a.k)
    a2 = Partition.from_labels(perm[a.labels])
    assert nmi(a, b) == pytest.approx(nmi(a2, b))
    assert ami(a, b) == pytest.approx(ami(a2, b))


def test_length_mismatch_raises():
    with pytest.raises(ValueError):
        nmi(Partition([0, 1]), Partition([0, 1, 1]))
    with pytest.raises(ValueError):
        ami(Partition([0, 1]), Partition([0, 1, 1]))


def test_against_sklearn(rng):
    for _ in range(30):
        a, b = _pair(rng, n=int(rng.integers(10, 80)))
        assert nmi(a, b) == pytest.approx(
            normalized_mutual_info_score(a.labels, b.labels,
                                         average_method="geometric"), abs=1e-9)
        assert ami(a, b) == pytest.approx(
            adjusted_mutual_info_score(a.labels, b.labels,
                                       average_method="geometric"), abs=1e-9)


def test_ami_near_zero_for_independent_partitions(rng):
    vals_ami, vals_nmi = [], []
    for _ in range(200):
        a, b = _pair(rng, n=60)
        vals_ami.append(ami(a, b))
        vals_nmi.append(nmi(a, b))
    assert abs(float(np.mean(vals_ami))) < 0.02
    # plain NMI keeps a positive chance-agreement bias that AMI removes
    assert float(np.mean(vals_nmi)) > float(np.mean(vals_ami)) + 0.02


def test_score_partition_branch_rule(rng):
    small_t = Partition.from_labels(rng.integers(0, 2, 200))
    small_d = Partition.from_labels(rng.integers(0, 2, 200))
    score, adjusted = score_partition_detail(small_d, small_t)
    assert adjusted and score == pytest.approx(ami(small_d, small_t))
    big_t = Partition.from_labels(rng.integers(0, 2, 300))
    big_d = Partition.from_labels(rng.integers(0, 2, 300))
    score, adjusted = score_partition_detail(big_d, big_t)
    assert not adjusted and score == pytest.approx(nmi(big_d, big_t))
    assert score_partition(big_d, big_t) == score


def test_greedy_route_on_path():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    d = kernel_sp(g)
    assert greedy_route(g, d, 0, 3) == [0, 1, 2, 3]
    assert greedy_route(g, d, 3, 0) == [3, 2, 1, 0]
    with pytest.raises(ValueError):
        greedy_route(g, d, 2, 2)


def _ring_with_pendant():
    """4-cycle plus a pendant; routing column crafted so that packets
    for the pendant ping-pong inside the cycle."""
    g = Graph(5, [(0, 1), (0, 3), (0, 4), (1, 2), (2, 3)])
    d = kernel_sp(g).astype(float)
    d[1, 4] = d[4, 1] = 1.0
    d[2, 4] = d[4, 2] = 1.5
    d[3, 4] = d[4, 3] = 2.0
    d[0, 4] = d[4, 0] = 3.0
    return g, d


def test_greedy_route_detects_loop():
    g, d = _ring_with_pendant()
    # 2 -> 1 (1.0 beats 2.0), then back toward 2 (1.5 beats 3.0): loop
    assert greedy_route(g, d, 2, 4) is None
    assert greedy_route(g, d, 0, 4) == [0, 4]


def test_gr_score_counts_failures():
    g, d = _ring_with_pendant()
    out = gr_score(g, d, keep_ratios=True)
    assert out.ratios[2, 4] == 0.0
    assert out.success_rate < 1.0
    assert out.score < 1.0


def test_gr_score_matches_literal_loop(rng):
    for _ in range(5):
        g = random_connected_graph(rng, 15)
        d = rng.random((15, 15))
        d = d + d.T
        np.fill_diagonal(d, 0.0)
        out = gr_score(g, d, keep_ratios=True)
        sp = kernel_sp(g)
        total = 0.0
        for s in range(g.n):
            for t in range(g.n):
                if s == t:
                    continue
                path = greedy_route(g, d, s, t)
                r = 0.0 if path is None else sp[s, t] / (len(path) - 1)
                assert out.ratios[s, t] == pytest.approx(r)
                total += r
        assert out.score == pytest.approx(total / (g.n * (g.n - 1)))


def test_gr_identity_for_sp_kernel(rng):
    for _ in range(5):
        g = random_connected_graph(rng, 30)
        assert gr_score(g, kernel_sp(g)).score == 1.0


def test_gr_complete_graph(rng):
    import itertools
    g = Graph(6, list(itertools.combinations(range(6), 2)))
    d = rng.random((6, 6))
    d = d + d.T
    np.fill_diagonal(d, 0.0)
    out = gr_score(g, d)
    assert out.score == 1.0 and out.success_rate == 1.0


def test_gr_length_budget_suffices():
    # the longest possible loop-free route takes exactly n-1 hops
    n = 7
    g = Graph(n, [(i, i + 1) for i in range(n - 1)])
    out = gr_score(g, kernel_sp(g))
    assert out.score == 1.0


def test_gr_geometric_mode(rng):
    g = random_connected_graph(rng, 20)
    d = kernel_sp(g)
    unit = {tuple(map(int, e)): 1.0 for e in g.edges}
    assert gr_score(g, d, geometry=unit).score == gr_score(g, d).score
    lens = {tuple(map(int, e)): float(w)
            for e, w in zip(g.edges, rng.random(g.num_edges) + 0.5)}
    out = gr_score(g, d, geometry=lens, keep_ratios=True)
    # geometric shortest path can never exceed the greedy walk's length
    assert np.all(out.ratios <= 1.0 + 1e-12)
    assert 0.0 < out.score <= 1.0


def test_gr_ratio_matrix_shape(karate):
    g, _ = karate
    out = gr_score(g, kernel_sp(g), keep_ratios=True)
    assert out.ratios.shape == (g.n, g.n)
    assert np.all(np.diag(out.ratios) == 0.0)
    assert out.ratios.max() <= 1.0
