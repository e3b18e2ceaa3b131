"""Load an edge list, reduce to the largest component, print the
descriptive statistics used throughout the benchmarks."""

from pathlib import Path

from netclust import (graph_stats, largest_connected_component,
                      load_edge_list, perturb_add, perturb_remove)

DATA = Path(__file__).resolve().parents[1] / "tests" / "data"

text = (DATA / "karate.edges").read_text()
labels = (DATA / "karate.labels").read_text()
g, truth = load_edge_list(text, labels)
g, truth = largest_connected_component(g, truth)

st = graph_stats(g)
print("karate club: n=%d nodes, e=%d edges" % (st.n, st.e))
print("  mean half-degree m = %.3f" % st.m_half_degree)
print("  clustering coefficient C = %.4f" % st.clustering)
print("  power-law tail: gamma=%.3f starting at k>=%d" % (st.gamma, st.kmin))
print("  planted communities:", truth.k, "sizes", truth.sizes().tolist())

# perturbed copies, the raw material of the robustness benchmark
removed = perturb_remove(g, 0.1, seed=0)
added = perturb_add(g, 0.1, seed=0)
print("\nafter removing 10%% of links: e=%d" % removed.num_edges)
print("after adding 10%% spurious links: e=%d" % added.num_edges)
