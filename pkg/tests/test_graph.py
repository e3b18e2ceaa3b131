import numpy as np
import pytest

from netclust import (Graph, ParseError, Partition, clustering_coefficient,
                      fit_power_law, graph_stats, is_connected,
                      largest_connected_component, load_edge_list, perturb_add,
                      perturb_remove)

from conftest import random_connected_graph


def test_constructor_rejects_self_loops_and_duplicates():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 5)])


def test_edges_are_canonical():
    g = Graph(4, [(3, 2), (1, 0), (0, 2)])
    assert g.edges.tolist() == [[0, 1], [0, 2], [2, 3]]
    assert g.neighbors(2).tolist() == [0, 3]
    assert g.has_edge(3, 2) and not g.has_edge(1, 2)


def test_load_basic():
    g, labels = load_edge_list("0 1\n")
    assert (g.n, g.num_edges) == (2, 1)
    assert labels is None


def test_load_dedup_and_self_loops():
    g, _ = load_edge_list("a b\nb a\na a\n")
    assert g.n == 2 and g.num_edges == 1


def test_load_comments_and_malformed():
    g, _ = load_edge_list("# header\n% more\n0 1\n\n1 2\n")
    assert g.num_edges == 2
    with pytest.raises(ParseError, match="line 2"):
        load_edge_list("0 1\n0 1 2\n")
    with pytest.raises(ParseError):
        load_edge_list("# nothing\n")


def test_first_appearance_indexing():
    g, _ = load_edge_list("x y\nz x\n")
    assert g.names == ("x", "y", "z")
    assert g.edges.tolist() == [[0, 1], [0, 2]]


def test_labels_and_isolated_nodes():
    g, labels = load_edge_list("a b\n", "a 1\nb 2\nc 1\n")
    assert g.n == 3                      # c introduced as an isolated node
    assert labels.labels.tolist() == [0, 1, 0]
    with pytest.raises(ParseError, match="without labels"):
        load_edge_list("a b\n", "a 1\n")


def test_adjacency_invariants(rng):
    g = random_connected_graph(rng, 40)
    total = 0
    for v in range(g.n):
        for u in g.neighbors(v):
            assert v in g.neighbors(u)
            assert u != v
            total += 1
    assert total == 2 * g.num_edges


def test_lcc_picks_largest_then_lowest_index():
    # components {0,1}, {2,3} tie on size; lowest contained index wins
    g = Graph(4, [(0, 1), (2, 3)])
    sub, _ = largest_connected_component(g)
    assert sub.n == 2 and sub.names is None
    g2 = Graph(5, [(0, 1), (2, 3), (3, 4)])
    sub2, _ = largest_connected_component(g2)
    assert sub2.n == 3 and sub2.edges.tolist() == [[0, 1], [1, 2]]


def test_lcc_restricts_labels_and_is_idempotent():
    g = Graph(5, [(0, 1), (1, 2), (3, 4)])
    labels = Partition.from_labels(["a", "a", "b", "c", "c"])
    sub, sublab = largest_connected_component(g, labels)
    assert sub.n == 3
    assert sublab.labels.tolist() == [0, 0, 1]
    again, _ = largest_connected_component(sub)
    assert again == sub


def test_lcc_identity_on_connected(karate):
    g, _ = karate
    sub, _ = largest_connected_component(g)
    assert sub == g


def test_stats_triangle_and_star():
    tri = Graph(3, [(0, 1), (0, 2), (1, 2)])
    st = graph_stats(tri)
    assert st.clustering == 1.0
    assert st.gamma is None and st.kmin is None
    assert st.m_half_degree * st.n == st.e
    star = Graph(6, [(0, i) for i in range(1, 6)])
    assert clustering_coefficient(star) == 0.0


def test_stats_karate(karate):
    g, _ = karate
    st = graph_stats(g)
    assert (st.n, st.e) == (34, 78)
    assert abs(st.clustering - 0.5879) < 5e-4
    assert abs(st.m_half_degree - 78 / 34) < 1e-12
    assert abs(st.gamma - 2.0943) < 5e-4 and st.kmin == 2


def test_stats_preconditions():
    with pytest.raises(ValueError):
        graph_stats(Graph(2, [(0, 1)]))
    with pytest.raises(ValueError):
        graph_stats(Graph(4, [(0, 1), (2, 3)]))


def test_fit_power_law_recovers_exponent(rng):
    from scipy import stats
    k = stats.zipf.rvs(2.5, size=20000, random_state=rng)
    gamma, kmin = fit_power_law(k)
    assert abs(gamma - 2.5) < 0.15
    assert kmin >= 1


def test_fit_power_law_degenerate():
    assert fit_power_law([3, 3, 3, 3]) == (None, None)
    assert fit_power_law([1]) == (None, None)


def test_perturb_remove_counts(karate):
    g, _ = karate
    gp = perturb_remove(g, 0.1, seed=7)
    assert gp.num_edges == 70            # round-half-up of 7.8 is 8
    assert gp.n == g.n
    assert perturb_remove(g, 0.0, seed=7) == g
    assert perturb_remove(g, 0.1, seed=7) == perturb_remove(g, 0.1, seed=7)
    assert perturb_remove(g, 0.1, seed=8) != gp
    assert gp.edge_set() < g.edge_set()


def test_perturb_add_counts(karate):
    g, _ = karate
    gp = perturb_add(g, 0.1, seed=7)
    assert gp.num_edges == 86
    assert g.edge_set() < gp.edge_set()
    assert perturb_add(g, 0.0, seed=7) == g
    assert perturb_add(g, 0.1, seed=7) == perturb_add(g, 0.1, seed=7)


def test_perturb_validation():
    g = Graph(3, [(0, 1), (0, 2), (1, 2)])
    with pytest.raises(ValueError):
        perturb_remove(g, 1.0, seed=1)
    with pytest.raises(ValueError):
        perturb_remove(g, -0.1, seed=1)
    with pytest.raises(ValueError):
        perturb_add(g, 0.5, seed=1)      # complete graph has no non-edges
    assert perturb_add(g, 0.0, seed=1) == g


def test_perturb_preserves_simplicity(rng):
    g = random_connected_graph(rng, 30)
    gp = perturb_add(g, 0.3, seed=3)
    # Graph's constructor would reject duplicates/self-loops; also re-check
    assert gp.num_edges == g.num_edges + int(np.floor(0.3 * g.num_edges + 0.5))
    assert len(gp.edge_set()) == gp.num_edges


def test_connectivity_helpers():
    assert is_connected(Graph(1, []))
    assert not is_connected(Graph(3, [(0, 1)]))
