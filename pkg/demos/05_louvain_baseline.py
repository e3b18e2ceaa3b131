"""The Louvain baseline: greedy modularity over a coarsening hierarchy.

Louvain needs no target community count -- it grows levels until Q
stops improving -- so as a baseline we score the level that best
matches the ground truth.
"""

from pathlib import Path

import numpy as np

from netclust import best_level, load_edge_list, louvain, modularity, nmi

DATA = Path(__file__).resolve().parents[1] / "tests" / "data"
g, truth = load_edge_list((DATA / "karate.edges").read_text(),
                          (DATA / "karate.labels").read_text())

h = louvain(g, seed=0)
print("hierarchy levels:")
for i, (p, q) in enumerate(zip(h.levels, h.modularity)):
    print("  level %d: k=%2d  Q=%.4f  NMI vs truth=%.4f"
          % (i, p.k, q, nmi(p, truth)))

p, score = best_level(h, truth)
print("\nbest level: k=%d, NMI=%.4f" % (p.k, score))

# seed sensitivity: node order shuffles change which local optimum wins
scores = [best_level(louvain(g, seed=s), truth)[1] for s in range(10)]
print("NMI over 10 seeds: mean=%.3f  min=%.3f  max=%.3f"
      % (float(np.mean(scores)), min(scores), max(scores)))
print("modularity of the truth itself: Q=%.4f" % modularity(g, truth))
