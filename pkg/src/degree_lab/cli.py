"""Command line front end.

    degree-lab <subcommand> [flags]

Subcommands: nu, bins, forest, gnm, cs, complex, pipeline, census,
decompose.  Every experiment accepts --format json|csv, --out PATH and
--threshold F; reports go to stdout unless --out is given.  Exit code
0 means the verdict was "pass" (or the subcommand has no verdict),
1 means "fail", 2 means a usage or runtime error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .edgelist import read_edge_list
from .experiments import ExperimentConfig, emit_report, run_experiment
from .graphs import GraphError, LabeledGraph, split
from .samplers import SamplingCapExceeded


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degree-lab",
        description="Concentration experiments for maximum loads and degrees.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json",
                        help="report format (default json)")
    common.add_argument("--out", metavar="PATH",
                        help="write the report here instead of stdout")
    common.add_argument("--threshold", type=float, default=None,
                        help="pass threshold (hit fraction, or max TV "
                             "distance for census)")

    trials = argparse.ArgumentParser(add_help=False)
    trials.add_argument("--trials", type=int, default=100,
                        help="number of trials (default 100)")
    trials.add_argument("--seed", type=int, default=0,
                        help="master seed (default 0)")

    eps = argparse.ArgumentParser(add_help=False)
    eps.add_argument("--eps", type=float, default=0.25,
                     help="interval half-width (default 0.25)")

    p = sub.add_parser("nu", parents=[common, eps],
                       help="typical maximum load and its window")
    p.add_argument("--n", type=float, required=True)
    p.add_argument("--k", type=float, default=None,
                   help="ball count (defaults to n)")

    p = sub.add_parser("bins", parents=[common, trials, eps],
                       help="maximum load of k balls in n bins")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("forest", parents=[common, trials, eps],
                       help="maximum degree of a uniform rooted forest")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)

    p = sub.add_parser("gnm", parents=[common, trials, eps],
                       help="maximum degree of a uniform graph with m edges")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("cs", parents=[common, trials, eps],
                       help="maximum degree of a uniform complex-free graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("complex", parents=[common, trials, eps],
                       help="maximum degree of a complex graph with a "
                            "prescribed core")
    p.add_argument("--core", metavar="FILE", required=True,
                   help="edge-list file holding the core")
    p.add_argument("--q", type=int, required=True,
                   help="order of the sampled graph")

    p = sub.add_parser("pipeline", parents=[common, trials],
                       help="assembled three-part graph experiment")
    p.add_argument("--core", metavar="FILE", required=True)
    p.add_argument("--l", type=int, required=True,
                   help="order of the large complex part")
    p.add_argument("--r", type=int, required=True,
                   help="order of the small complex part")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--shuffle-labels", action="store_true",
                   help="apply a uniform label permutation to each draw")

    p = sub.add_parser("census", parents=[common, trials],
                       help="uniformity check of the gnm sampler")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("decompose", parents=[common],
                       help="three-way decomposition of an edge-list file")
    p.add_argument("file", help="edge-list file (simple graph header)")

    return parser


def _load_core(path: str) -> LabeledGraph:
    core = read_edge_list(path)
    if not isinstance(core, LabeledGraph):
        raise GraphError(f"{path}: core file must use the simple-graph header")
    return core


def _decompose_payload(path: str) -> bytes:
    g = read_edge_list(path)
    if not isinstance(g, LabeledGraph):
        raise GraphError(f"{path}: decompose expects a simple-graph header")
    parts = split(g)

    def part_doc(s):
        return {"order": s.order, "size": s.size, "maxDegree": s.max_degree()}

    doc = {
        "kind": "decompose",
        "params": {"file": str(path), "n": g.n, "m": g.num_edges},
        "parts": {
            "largeComplex": part_doc(parts.large_complex),
            "smallComplex": part_doc(parts.small_complex),
            "nonComplex": part_doc(parts.non_complex),
            "core": part_doc(parts.core),
        },
        "coreLargestComponent": [int(v) for v in parts.core_largest_component],
    }
    return (json.dumps(doc, indent=2) + "\n").encode()


def _config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    kind = args.command
    cfg = ExperimentConfig(kind=kind, threshold=args.threshold)
    if kind == "nu":
        n = args.n
        cfg.n = int(n) if float(n).is_integer() else n
        cfg.k = args.k
        cfg.epsilon = args.eps
        return cfg
    cfg.trials = args.trials
    cfg.master_seed = args.seed
    if kind == "bins":
        cfg.n, cfg.k, cfg.epsilon = args.n, args.k, args.eps
    elif kind == "forest":
        cfg.n, cfg.t, cfg.epsilon = args.n, args.t, args.eps
    elif kind in ("gnm", "cs"):
        cfg.n, cfg.m, cfg.epsilon = args.n, args.m, args.eps
    elif kind == "complex":
        cfg.core = _load_core(args.core)
        cfg.q = args.q
        cfg.epsilon = args.eps
    elif kind == "pipeline":
        cfg.core = _load_core(args.core)
        cfg.large_order = args.l
        cfg.small_order = args.r
        cfg.n, cfg.m = args.n, args.m
        cfg.shuffle_labels = args.shuffle_labels
    elif kind == "census":
        cfg.n, cfg.m = args.n, args.m
    return cfg


def _write(payload: bytes, out: str | None) -> None:
    if out:
        Path(out).write_bytes(payload)
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "decompose":
            if args.format != "json":
                raise ValueError("decompose reports are json only")
            _write(_decompose_payload(args.file), args.out)
            return 0
        cfg = _config_from_args(args)
        report = run_experiment(cfg)
        _write(emit_report(report, args.format), args.out)
        return 0 if report.passed else 1
    except (ValueError, GraphError, SamplingCapExceeded, OSError) as exc:
        print(f"degree-lab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
