"""Community detection on complex networks via latent-geometry dissimilarities.

The package turns an unweighted graph into one of six node-dissimilarity
matrices (shortest-path and five geometry-inspired re-weightings), feeds
them to affinity propagation with a preference search for a target
community count, and scores the result against ground truth.  A Louvain
baseline, greedy-routing navigability scores, random link perturbation
and a synthetic hyperbolic benchmark generator round out the toolkit;
the ``netclust`` command line drives end-to-end experiments.
"""

from .ap import ApResult, ApSettings, ap_run, preference_search
from .dissimilarity import (KERNELS, apsp, edge_betweenness, kernel_cn,
                            kernel_ebc, kernel_esp, kernel_jaccard, kernel_ra,
                            kernel_sp, validate_dissimilarity)
from .errors import DegenerateResultError, ParseError
from .evaluation import (GrOutcome, ami, gr_score, greedy_route, nmi,
                         score_partition, score_partition_detail)
from .graph import (Graph, GraphStats, clustering_coefficient, fit_power_law,
                    graph_stats, is_connected, largest_connected_component,
                    load_edge_list, perturb_add, perturb_remove,
                    write_edge_list, write_labels)
from .louvain import LouvainHierarchy, best_level, louvain, modularity
from .npso import (NpsoNetwork, NpsoParams, assign_community, edge_lengths,
                   hyperbolic_distance, mixture_params, npso_generate,
                   sample_angle, write_coordinates)
from .partition import Partition
from .seeds import derive_seed, make_rng

__version__ = "0.1.0"

__all__ = [
    "ApResult", "ApSettings", "ap_run", "preference_search",
    "KERNELS", "apsp", "edge_betweenness", "kernel_cn", "kernel_ebc",
    "kernel_esp", "kernel_jaccard", "kernel_ra", "kernel_sp",
    "validate_dissimilarity",
    "DegenerateResultError", "ParseError",
    "GrOutcome", "ami", "gr_score", "greedy_route", "nmi",
    "score_partition", "score_partition_detail",
    "Graph", "GraphStats", "clustering_coefficient", "fit_power_law",
    "graph_stats", "is_connected", "largest_connected_component",
    "load_edge_list", "perturb_add", "perturb_remove", "write_edge_list",
    "write_labels",
    "LouvainHierarchy", "best_level", "louvain", "modularity",
    "NpsoNetwork", "NpsoParams", "assign_community", "edge_lengths",
    "hyperbolic_distance", "mixture_params", "npso_generate", "sample_angle",
    "write_coordinates",
    "Partition",
    "derive_seed", "make_rng",
]
