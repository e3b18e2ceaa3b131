"""Greedy routing: how navigable is a graph under each dissimilarity?

A packet at node u bound for t hops to the neighbor closest to t in
the dissimilarity.  The GR-score averages shortest/greedy length over
all ordered pairs (0 for dropped packets), so 1.0 means every greedy
route is a shortest path -- true by construction for the SP kernel.
"""

from pathlib import Path

from netclust import (KERNELS, NpsoParams, edge_lengths, gr_score,
                      greedy_route, kernel_sp, load_edge_list, npso_generate)

DATA = Path(__file__).resolve().parents[1] / "tests" / "data"
g, _ = load_edge_list((DATA / "karate.edges").read_text())

print("karate, topological GR-scores:")
for name, kern in KERNELS.items():
    out = gr_score(g, kern(g))
    print("  %-4s score=%.4f  success=%.4f" % (name, out.score, out.success_rate))

# a single route, spelled out
d = kernel_sp(g)
path = greedy_route(g, d, 16, 26)
print("\ngreedy route 16 -> 26 under SP:", path)

# geometric mode: score routes by hyperbolic edge length instead of hops
net = npso_generate(NpsoParams(200, 4, 0.1, 3.0, 4), seed=0)
geom = edge_lengths(net)
for name in ("SP", "RA"):
    out = gr_score(net.graph, KERNELS[name](net.graph), geometry=geom)
    print("synthetic disk, %-3s geometric score=%.4f success=%.4f"
          % (name, out.score, out.success_rate))
