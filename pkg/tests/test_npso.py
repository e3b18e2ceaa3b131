import numpy as np
import pytest

from netclust import (NpsoParams, assign_community, edge_lengths,
                      hyperbolic_distance, is_connected, mixture_params,
                      npso_generate, sample_angle, write_coordinates)


def test_params_validation():
    NpsoParams(100, 3, 0.1, 3.0, 4)
    NpsoParams(100, 3, 0.0, 2.5, 1)       # T = 0 is the sharp limit
    with pytest.raises(ValueError):
        NpsoParams(100, 0, 0.1, 3.0, 4)
    with pytest.raises(ValueError):
        NpsoParams(4, 3, 0.1, 3.0, 4)      # need n > m + 1
    with pytest.raises(ValueError):
        NpsoParams(100, 3, -0.5, 3.0, 4)
    with pytest.raises(ValueError):
        NpsoParams(100, 3, 1.0, 3.0, 4)    # sin(T*pi) = 0
    with pytest.raises(ValueError):
        NpsoParams(100, 3, 0.1, 2.0, 4)
    with pytest.raises(ValueError):
        NpsoParams(100, 3, 0.1, 3.0, 0)


def test_beta():
    assert NpsoParams(100, 3, 0.1, 3.0, 4).beta == pytest.approx(0.5)
    assert NpsoParams(100, 3, 0.1, 2.5, 4).beta == pytest.approx(1.0 / 1.5)


def test_mixture_params():
    means, sigmas, weights = mixture_params(4)
    assert np.allclose(means, [0.0, np.pi / 2, np.pi, 3 * np.pi / 2])
    assert np.allclose(sigmas, (np.pi / 2) / 6.0)
    assert np.allclose(weights, 0.25) and weights.sum() == pytest.approx(1.0)
    with pytest.raises(ValueError):
        mixture_params(0)


def test_sample_angle_distribution(rng):
    mix = mixture_params(3)
    draws = np.array([sample_angle(mix, rng) for _ in range(30000)])
    assert np.all((0.0 <= draws) & (draws < 2 * np.pi))
    # each component holds one third of the mass (sigma is narrow enough
    # that spillover between adjacent thirds is negligible)
    for mean in mix[0]:
        near = np.minimum(np.abs(draws - mean),
                          2 * np.pi - np.abs(draws - mean)) < np.pi / 3
        assert np.mean(near) == pytest.approx(1.0 / 3.0, abs=0.01)


def test_assign_community():
    mix = mixture_params(4)
    assert assign_community(0.1, mix) == 0
    assert assign_community(np.pi / 2 + 0.1, mix) == 1
    assert assign_community(2 * np.pi - 0.05, mix) == 0   # wraps around
    # exact midpoint between components 0 and 1 goes to the lower id
    assert assign_community(np.pi / 4, mix) == 0


def test_hyperbolic_distance():
    assert hyperbolic_distance(1.0, 0.0, 1.0, 0.0) == pytest.approx(0.0, abs=1e-7)
    # antipodal points: cosh(d) = cosh(r1)cosh(r2) + sinh(r1)sinh(r2),
    # i.e. d = r1 + r2
    assert hyperbolic_distance(1.5, 0.0, 2.0, np.pi) == pytest.approx(3.5)
    # same angle: d = |r1 - r2|
    assert hyperbolic_distance(1.5, 0.2, 2.0, 0.2) == pytest.approx(0.5)
    assert hyperbolic_distance(2.0, 0.0, 2.0, np.pi / 180) < 2.0


def test_generate_structure():
    params = NpsoParams(120, 4, 0.1, 3.0, 4)
    net = npso_generate(params, seed=5)
    g = net.graph
    assert g.n == 120
    # m(m+1)/2 fewer links than m per node: early arrivals link to
    # everyone already present
    assert g.num_edges == 4 * 120 - 10
    assert is_connected(g)
    assert net.radial.shape == (120,) and net.angular.shape == (120,)
    assert np.all(net.radial > 0)
    assert np.all((0 <= net.angular) & (net.angular < 2 * np.pi))
    assert net.truth.n == 120
    assert net.params == params and net.seed == 5


def test_generate_t_zero():
    net = npso_generate(NpsoParams(80, 3, 0.0, 2.5, 2), seed=1)
    assert net.graph.num_edges == 3 * 80 - 6
    assert is_connected(net.graph)


def test_truth_matches_component_assignment():
    from netclust import Partition
    net = npso_generate(NpsoParams(100, 3, 0.1, 3.0, 5), seed=2)
    mix = mixture_params(5)
    recomputed = [assign_community(th, mix) for th in net.angular]
    assert net.components.tolist() == recomputed
    assert net.truth == Partition.from_labels(recomputed)


def test_determinism_and_seed_sensitivity():
    p = NpsoParams(90, 3, 0.1, 3.0, 3)
    a = npso_generate(p, seed=11)
    b = npso_generate(p, seed=11)
    c = npso_generate(p, seed=12)
    assert a.graph == b.graph
    assert np.array_equal(a.radial, b.radial)
    assert np.array_equal(a.angular, b.angular)
    assert a.graph != c.graph


def test_communities_roughly_balanced():
    net = npso_generate(NpsoParams(300, 4, 0.1, 3.0, 3), seed=7)
    sizes = net.truth.sizes()
    assert net.truth.k == 3
    assert sizes.min() > 0.5 * sizes.mean()


def test_radial_fading_formula():
    p = NpsoParams(100, 3, 0.1, 3.0, 2)
    net = npso_generate(p, seed=3)
    beta = p.beta
    t = np.arange(1, 101)
    r_init = 2.0 * np.log(t)
    expected = beta * r_init + (1.0 - beta) * 2.0 * np.log(100)
    assert np.allclose(net.radial, expected)
    # hierarchy: the first node stays innermost after fading
    assert net.radial.argmin() == 0


def test_degree_decays_with_arrival_order():
    net = npso_generate(NpsoParams(400, 4, 0.1, 3.0, 4), seed=9)
    deg = net.graph.degrees()
    early = deg[:40].mean()
    late = deg[-40:].mean()
    assert early > 2 * late


def test_edge_lengths():
    net = npso_generate(NpsoParams(60, 3, 0.1, 3.0, 2), seed=4)
    lens = edge_lengths(net)
    assert set(lens) == {tuple(map(int, e)) for e in net.graph.edges}
    r, th = net.radial, net.angular
    for (u, v), w in list(lens.items())[:25]:
        assert w == pytest.approx(hyperbolic_distance(r[u], th[u], r[v], th[v]))
        assert w >= 0.0


def test_write_coordinates(tmp_path):
    net = npso_generate(NpsoParams(50, 3, 0.1, 3.0, 2), seed=6)
    path = tmp_path / "coords.txt"
    write_coordinates(net, path)
    rows = [line.split() for line in path.read_text().splitlines()]
    assert len(rows) == 50
    ids = [int(r[0]) for r in rows]
    assert ids == list(range(50))
    for i, row in enumerate(rows):
        assert float(row[1]) == pytest.approx(net.radial[i], rel=1e-10)
        assert float(row[2]) == pytest.approx(net.angular[i], rel=1e-10)
        assert int(row[3]) == net.components[i]
