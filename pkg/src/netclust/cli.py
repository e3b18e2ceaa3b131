"""Benchmark command line.

Subcommands:
    stats    descriptive statistics per dataset
    grscore  greedy-routing score per (dataset, kernel)
    detect   community detection vs. ground truth
    perturb  detection robustness under random link removal/addition
    npso     synthetic-network generation + detection sweep

Every command reads datasets given as ``NAME=EDGES[:LABELS]`` positional
arguments or as ``dataset = NAME=EDGES[:LABELS]`` lines in a config
file; command-line flags override config values.  Output is CSV on
stdout and in ``<out>/<command>.csv``, deterministically sorted and a
pure function of (inputs, seed).

Exit codes: 0 ok, 2 I/O error, 3 bad data or arguments, 4 degenerate
algorithm result.
"""

import argparse
import csv
import io
import math
import sys
from pathlib import Path

import numpy as np

from .ap import ApSettings, preference_search
from .dissimilarity import KERNELS
from .errors import DegenerateResultError, ParseError
from .evaluation import gr_score, score_partition_detail
from .graph import (graph_stats, largest_connected_component, load_edge_list,
                    perturb_add, perturb_remove, write_edge_list, write_labels)
from .louvain import best_level, louvain
from .npso import NpsoParams, edge_lengths, npso_generate, write_coordinates
from .seeds import derive_seed

KERNEL_ORDER = ("SP", "ESP", "CN", "J", "RA", "EBC")
METHOD_ORDER = ("AP", "Louvain")
UNAVAILABLE = "—"  # em dash marks a statistic that has no defined value

DEFAULT_SEED = 42
DESK_REPS = 20
FULL_REPS = 100
DESK_GRID = (NpsoParams(100, 7, 0.1, 3.0, 3), NpsoParams(500, 7, 0.1, 3.0, 6))
FULL_GRID = tuple(NpsoParams(n, 7, t, 3.0, c)
                  for n in (100, 500, 1000)
                  for t in (0.1, 0.3, 0.5)
                  for c in (3, 6, 9))

# Seed-derivation namespaces (first path component after the master seed),
# so e.g. Louvain runs and perturbations never share a stream.
_NS_LOUVAIN = 1
_NS_PERTURB = 2
_NS_NPSO = 3


class Config:
    """Merged configuration: config-file values overridden by flags."""

    def __init__(self):
        self.datasets = []        # (name, edges path, labels path or None)
        self.kernels = KERNEL_ORDER
        self.methods = METHOD_ORDER
        self.reps = None          # resolved against --full later
        self.fraction = 0.1
        self.mode = "remove"
        self.full = False
        self.seed = DEFAULT_SEED
        self.out = Path(".")
        self.ap = ApSettings()
        self.npso_grid = None     # None = command-specific default

    def resolved_reps(self):
        if self.reps is not None:
            return self.reps
        return FULL_REPS if self.full else DESK_REPS

    def resolved_grid(self):
        if self.npso_grid is not None:
            return tuple(self.npso_grid)
        return FULL_GRID if self.full else DESK_GRID


def _parse_dataset_spec(spec):
    name, sep, rest = spec.partition("=")
    if not sep or not name or not rest:
        raise ParseError("dataset spec must be NAME=EDGES[:LABELS], got %r" % spec)
    if ":" in rest:
        edges, labels = rest.split(":", 1)
        return name, Path(edges), Path(labels)
    return name, Path(rest), None


def _parse_kernels(value):
    names = [k.strip().upper() for k in value.split(",") if k.strip()]
    bad = [k for k in names if k not in KERNEL_ORDER]
    if bad:
        raise ValueError("unknown kernel %r (choose from %s)"
                         % (bad[0], ",".join(KERNEL_ORDER)))
    return tuple(k for k in KERNEL_ORDER if k in names)


def _parse_methods(value):
    canon = {m.lower(): m for m in METHOD_ORDER}
    names = [m.strip().lower() for m in value.split(",") if m.strip()]
    bad = [m for m in names if m not in canon]
    if bad:
        raise ValueError("unknown method %r (choose from %s)"
                         % (bad[0], ",".join(METHOD_ORDER)))
    return tuple(m for m in METHOD_ORDER if m.lower() in names)


def _parse_npso_spec(value):
    parts = [p.strip() for p in value.split(",")]
    if len(parts) != 5:
        raise ValueError("npso spec must be N,m,T,gamma,C, got %r" % value)
    return NpsoParams(n=int(parts[0]), m=int(parts[1]), t=float(parts[2]),
                      gamma=float(parts[3]), c=int(parts[4]))


def _parse_bool(value):
    low = value.strip().lower()
    if low in ("true", "yes", "1", "on"):
        return True
    if low in ("false", "no", "0", "off"):
        return False
    raise ValueError("expected a boolean, got %r" % value)


def apply_config_text(cfg, text):
    """Apply ``key = value`` lines from a config document to ``cfg``."""
    ap_kwargs = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(("#", "%")):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ParseError("expected 'key = value', got %r" % line, line=lineno)
        key = key.strip()
        value = value.strip()
        try:
            if key == "dataset":
                cfg.datasets.append(_parse_dataset_spec(value))
            elif key == "npso":
                grid = list(cfg.npso_grid or ())
                grid.append(_parse_npso_spec(value))
                cfg.npso_grid = grid
            elif key == "seed":
                cfg.seed = int(value)
            elif key == "out":
                cfg.out = Path(value)
            elif key == "kernels":
                cfg.kernels = _parse_kernels(value)
            elif key == "methods":
                cfg.methods = _parse_methods(value)
            elif key == "reps":
                cfg.reps = int(value)
            elif key == "fraction":
                cfg.fraction = float(value)
            elif key == "mode":
                if value not in ("remove", "add"):
                    raise ValueError("mode must be remove or add")
                cfg.mode = value
            elif key == "full":
                cfg.full = _parse_bool(value)
            elif key == "damping":
                ap_kwargs["damping"] = float(value)
            elif key == "max_iterations":
                ap_kwargs["max_iterations"] = int(value)
            elif key == "convergence_window":
                ap_kwargs["convergence_window"] = int(value)
            elif key == "search_steps":
                ap_kwargs["preference_search_steps"] = int(value)
            else:
                raise ValueError("unknown config key %r" % key)
        except ParseError:
            raise
        except ValueError as exc:
            raise ParseError(str(exc), line=lineno) from exc
    if ap_kwargs:
        base = cfg.ap
        cfg.ap = ApSettings(
            damping=ap_kwargs.get("damping", base.damping),
            max_iterations=ap_kwargs.get("max_iterations", base.max_iterations),
            convergence_window=ap_kwargs.get("convergence_window",
                                             base.convergence_window),
            preference_search_steps=ap_kwargs.get("preference_search_steps",
                                                  base.preference_search_steps),
        )
    return cfg


def build_config(args):
    """Config file first, then explicit flags on top."""
    cfg = Config()
    if args.config is not None:
        apply_config_text(cfg, Path(args.config).read_text())
    if args.seed is not None:
        cfg.seed = args.seed
    if args.out is not None:
        cfg.out = Path(args.out)
    if args.kernels is not None:
        cfg.kernels = _parse_kernels(args.kernels)
    if args.methods is not None:
        cfg.methods = _parse_methods(args.methods)
    if args.reps is not None:
        cfg.reps = args.reps
    if args.fraction is not None:
        cfg.fraction = args.fraction
    if getattr(args, "mode", None) is not None:
        cfg.mode = args.mode
    if args.full:
        cfg.full = True
    ap_kwargs = {}
    if args.damping is not None:
        ap_kwargs["damping"] = args.damping
    if args.max_iterations is not None:
        ap_kwargs["max_iterations"] = args.max_iterations
    if args.convergence_window is not None:
        ap_kwargs["convergence_window"] = args.convergence_window
    if args.search_steps is not None:
        ap_kwargs["preference_search_steps"] = args.search_steps
    if ap_kwargs:
        base = cfg.ap
        cfg.ap = ApSettings(
            damping=ap_kwargs.get("damping", base.damping),
            max_iterations=ap_kwargs.get("max_iterations", base.max_iterations),
            convergence_window=ap_kwargs.get("convergence_window",
                                             base.convergence_window),
            preference_search_steps=ap_kwargs.get("preference_search_steps",
                                                  base.preference_search_steps),
        )
    for spec in args.datasets:
        cfg.datasets.append(_parse_dataset_spec(spec))
    return cfg


def _load_datasets(cfg):
    """Read, parse and LCC-reduce every configured dataset."""
    out = []
    for name, edges_path, labels_path in cfg.datasets:
        text = Path(edges_path).read_text()
        label_text = Path(labels_path).read_text() if labels_path else None
        g, labels = load_edge_list(text, label_text)
        g, labels = largest_connected_component(g, labels)
        out.append((name, g, labels))
    return out


# ---------------------------------------------------------------------------
# Row helpers
# ---------------------------------------------------------------------------

def _rep_key(rep):
    return (1, 0) if rep == "mean" else (0, int(rep))


def _emit(header, rows, sort_key, cfg, filename):
    rows = sorted(rows, key=sort_key)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    text = buf.getvalue()
    cfg.out.mkdir(parents=True, exist_ok=True)
    (cfg.out / filename).write_text(text)
    return text


def _stderr_of(values):
    if len(values) < 2:
        return ""
    return "%.6f" % (np.std(values, ddof=1) / math.sqrt(len(values)))


# ---------------------------------------------------------------------------
# Detection pipeline shared by detect / perturb / npso
# ---------------------------------------------------------------------------

def _detect_rows(g, truth, cfg, louvain_seed):
    """One detection sweep; yields (method, score, adjusted, target_k,
    detected_k, preference, iterations, converged)."""
    target_k = truth.k
    rows = []
    if "AP" in cfg.methods:
        for kernel in cfg.kernels:
            d = KERNELS[kernel](g)
            res = preference_search(d, target_k, cfg.ap)
            score, adjusted = score_partition_detail(res.labels, truth)
            rows.append(("AP-%s" % kernel, score, adjusted, target_k, res.k,
                         "%.6g" % res.preference, res.iterations,
                         str(res.converged).lower()))
    if "Louvain" in cfg.methods:
        h = louvain(g, louvain_seed)
        p, _ = best_level(h, truth)
        score, adjusted = score_partition_detail(p, truth)
        rows.append(("Louvain", score, adjusted, target_k, p.k, "", "", ""))
    return rows


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_stats(cfg):
    header = ["dataset", "n", "e", "clustering", "gamma", "m"]
    rows = []
    for name, g, _labels in _load_datasets(cfg):
        st = graph_stats(g)
        gamma = UNAVAILABLE if st.gamma is None else "%.2f" % st.gamma
        rows.append([name, st.n, st.e, "%.2f" % st.clustering, gamma,
                     "%.2f" % st.m_half_degree])
    return _emit(header, rows, lambda r: (r[0],), cfg, "stats.csv")


def cmd_grscore(cfg):
    header = ["dataset", "kernel", "mode", "repetition", "gr_score",
              "success_rate", "stderr"]
    rows = []
    for name, g, _labels in _load_datasets(cfg):
        for kernel in cfg.kernels:
            out = gr_score(g, KERNELS[kernel](g))
            rows.append([name, kernel, "topological", 0,
                         "%.6f" % out.score, "%.6f" % out.success_rate, ""])
    if cfg.npso_grid is not None:
        reps = cfg.resolved_reps()
        for combo_idx, params in enumerate(cfg.resolved_grid()):
            name = _combo_name(params)
            per_kernel = {k: [] for k in cfg.kernels}
            for rep in range(reps):
                net = npso_generate(params, derive_seed(cfg.seed, _NS_NPSO,
                                                        combo_idx, rep))
                geometry = edge_lengths(net)
                for kernel in cfg.kernels:
                    out = gr_score(net.graph, KERNELS[kernel](net.graph),
                                   geometry=geometry)
                    per_kernel[kernel].append(out.score)
                    rows.append([name, kernel, "geometric", rep,
                                 "%.6f" % out.score,
                                 "%.6f" % out.success_rate, ""])
            for kernel in cfg.kernels:
                vals = per_kernel[kernel]
                rows.append([name, kernel, "geometric", "mean",
                             "%.6f" % np.mean(vals), "", _stderr_of(vals)])
    return _emit(header, rows, lambda r: (r[0], r[1], _rep_key(r[3])),
                 cfg, "grscore.csv")


_DETECT_HEADER = ["dataset", "method", "repetition", "metric", "value",
                  "adjusted", "target_k", "detected_k", "preference",
                  "iterations", "converged"]


def _detect_csv_rows(name, rep, detect_rows):
    out = []
    for (method, score, adjusted, target_k, detected_k, pref, iters,
         conv) in detect_rows:
        out.append([name, method, rep, "NMI", "%.6f" % score,
                    str(adjusted).lower(), target_k, detected_k, pref, iters,
                    conv])
    return out


def cmd_detect(cfg):
    rows = []
    for ds_idx, (name, g, labels) in enumerate(_load_datasets(cfg)):
        if labels is None:
            raise ValueError("dataset %r has no ground-truth labels" % name)
        seed = derive_seed(cfg.seed, _NS_LOUVAIN, ds_idx, 0)
        rows.extend(_detect_csv_rows(name, 0, _detect_rows(g, labels, cfg, seed)))
    return _emit(_DETECT_HEADER, rows,
                 lambda r: (r[0], r[1], _rep_key(r[2])), cfg, "detect.csv")


def cmd_perturb(cfg):
    header = _DETECT_HEADER + ["mode", "fraction", "edges", "nodes"]
    perturb_fn = perturb_remove if cfg.mode == "remove" else perturb_add
    reps = cfg.resolved_reps()
    rows = []
    for ds_idx, (name, g, labels) in enumerate(_load_datasets(cfg)):
        if labels is None:
            raise ValueError("dataset %r has no ground-truth labels" % name)
        scores = {}
        for rep in range(reps):
            sub = derive_seed(cfg.seed, _NS_PERTURB, ds_idx, rep)
            gp = perturb_fn(g, cfg.fraction, sub)
            edges_after = gp.num_edges
            gl, truth = largest_connected_component(gp, labels)
            louv = derive_seed(cfg.seed, _NS_LOUVAIN, ds_idx, rep)
            for base in _detect_csv_rows(name, rep,
                                         _detect_rows(gl, truth, cfg, louv)):
                rows.append(base + [cfg.mode, "%g" % cfg.fraction,
                                    edges_after, gl.n])
                scores.setdefault(base[1], []).append(float(base[4]))
        for method, vals in scores.items():
            rows.append([name, method, "mean", "NMI", "%.6f" % np.mean(vals),
                         "", "", "", "", "", "", cfg.mode,
                         "%g" % cfg.fraction, "", ""])
    return _emit(header, rows, lambda r: (r[0], r[1], _rep_key(r[2])),
                 cfg, "perturb.csv")


def _combo_name(params):
    return "npso_N%d_m%d_T%g_g%g_C%d" % (params.n, params.m, params.t,
                                         params.gamma, params.c)


def cmd_npso(cfg):
    header = _DETECT_HEADER + ["status", "stderr"]
    reps = cfg.resolved_reps()
    net_dir = cfg.out / "networks"
    rows = []
    for combo_idx, params in enumerate(cfg.resolved_grid()):
        name = _combo_name(params)
        scores = {}
        for rep in range(reps):
            sub = derive_seed(cfg.seed, _NS_NPSO, combo_idx, rep)
            try:
                net = npso_generate(params, sub)
            except DegenerateResultError:
                rows.append([name, "", rep, "NMI", "", "", params.c, "", "",
                             "", "", "failed", ""])
                continue
            net_dir.mkdir(parents=True, exist_ok=True)
            stem = str(net_dir / ("%s_rep%d" % (name, rep)))
            write_edge_list(net.graph, stem + ".edges")
            write_labels(net.graph, net.truth, stem + ".labels")
            write_coordinates(net, stem + ".coords")
            louv = derive_seed(cfg.seed, _NS_LOUVAIN, combo_idx, rep)
            for base in _detect_csv_rows(name, rep,
                                         _detect_rows(net.graph, net.truth,
                                                      cfg, louv)):
                rows.append(base + ["ok", ""])
                scores.setdefault(base[1], []).append(float(base[4]))
        for method, vals in scores.items():
            rows.append([name, method, "mean", "NMI", "%.6f" % np.mean(vals),
                         "", "", "", "", "", "", "", _stderr_of(vals)])
    return _emit(header, rows, lambda r: (r[0], r[1], _rep_key(r[2])),
                 cfg, "npso.csv")


COMMANDS = {
    "stats": cmd_stats,
    "grscore": cmd_grscore,
    "detect": cmd_detect,
    "perturb": cmd_perturb,
    "npso": cmd_npso,
}


# ---------------------------------------------------------------------------
# Argument parsing / entry point
# ---------------------------------------------------------------------------

def _add_shared(p, with_mode=False):
    p.add_argument("datasets", nargs="*", metavar="NAME=EDGES[:LABELS]",
                   help="dataset edge list with optional label file")
    p.add_argument("--config", metavar="PATH",
                   help="plain-text 'key = value' config file")
    p.add_argument("--seed", type=int, help="master seed (default 42)")
    p.add_argument("--out", metavar="DIR", help="output directory (default .)")
    p.add_argument("--kernels", metavar="LIST",
                   help="comma-separated subset of %s" % ",".join(KERNEL_ORDER))
    p.add_argument("--methods", metavar="LIST",
                   help="comma-separated subset of %s" % ",".join(METHOD_ORDER))
    p.add_argument("--reps", type=int, metavar="N",
                   help="repetitions (default 20, or 100 with --full)")
    p.add_argument("--fraction", type=float, metavar="F",
                   help="perturbation fraction (default 0.1)")
    p.add_argument("--full", action="store_true",
                   help="full-scale repetitions and parameter grid")
    p.add_argument("--damping", type=float, help="message damping [0.5, 1)")
    p.add_argument("--max-iterations", dest="max_iterations", type=int)
    p.add_argument("--convergence-window", dest="convergence_window", type=int)
    p.add_argument("--search-steps", dest="search_steps", type=int,
                   help="preference bisection steps")
    if with_mode:
        p.add_argument("--mode", choices=("remove", "add"),
                       help="perturbation mode (default remove)")


def _parse_args(argv):
    parser = argparse.ArgumentParser(
        prog="netclust",
        description="Graph community-detection and routing benchmarks.")
    sub = parser.add_subparsers(dest="command", required=True)
    _add_shared(sub.add_parser("stats", help="dataset statistics"))
    _add_shared(sub.add_parser("grscore", help="greedy-routing scores"))
    _add_shared(sub.add_parser("detect", help="community detection vs. truth"))
    _add_shared(sub.add_parser("perturb", help="detection under perturbation"),
                with_mode=True)
    _add_shared(sub.add_parser("npso", help="synthetic-network sweep"))
    return parser.parse_args(argv)


def main(argv=None):
    try:
        args = _parse_args(argv)
        cfg = build_config(args)
        sys.stdout.write(COMMANDS[args.command](cfg))
        return 0
    except DegenerateResultError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 4
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
