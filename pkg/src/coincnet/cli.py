"""
Command-line entry point: ``coincnet <subcommand> ...``.

Exit codes: 0 success, 1 usage error, 2 data or domain error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .bipartite import Orientation, coincidence_network, project
from .errors import CoincnetError
from .evaluation import ensemble, error_sweep, threshold_grid
from .generator import generate
from .io import (
    RunMetadata,
    config_from_mapping,
    read_config,
    read_ground_truth,
    read_network,
    write_edge_list,
    write_error_curves,
    write_ground_truth,
    write_metadata,
    write_projection,
    write_realization_curves,
    write_similarity,
)

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _add_gen_flags(p, required=False):
    p.add_argument("--groups", type=int, required=required, dest="n_groups", help="number of groups")
    p.add_argument("--a-per-group", type=int, required=required, dest="a_per_group")
    p.add_argument("--b-per-group", type=int, required=required, dest="b_per_group")
    p.add_argument("--p", type=float, dest="rewire_p", help="rewiring probability")
    p.add_argument("--seed", type=int)
    p.add_argument("--max-weight", type=int, dest="max_weight",
                   help="uniform integer link weights in [1, max] (default 1)")
    p.add_argument("--partners", choices=["selected", "all"],
                   help="partner pool used by the link swaps (default selected)")


def _gen_config(args, config_path=None):
    overrides = {k: getattr(args, k, None) for k in
                 ("n_groups", "a_per_group", "b_per_group", "rewire_p", "seed", "max_weight", "partners")}
    if config_path:
        return read_config(config_path, **overrides)
    return config_from_mapping({}, **overrides)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="coincnet",
                     description="Coincidence similarity networks from bipartite networks.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="generate a synthetic modular bipartite network")
    _add_gen_flags(g)
    g.add_argument("--config", help="key=value config file (e.g. a previous .meta sidecar)")
    g.add_argument("--out", required=True, help="edge list path")
    g.add_argument("--truth-out", help="ground truth CSV path (default <out>.truth.csv)")
    g.add_argument("--meta-out", help="metadata sidecar path (default <out>.meta)")

    c = sub.add_parser("coincide", help="bipartite network to coincidence similarity network")
    c.add_argument("--in", dest="inp", required=True, help=".csv weight matrix or TSV edge list")
    c.add_argument("--orientation", choices=["direct", "reverse"], default="direct")
    c.add_argument("--out", default="-")
    c.add_argument("--format", choices=["csv", "graphml", "dot"], default="csv")
    c.add_argument("--drop-isolated", action="store_true",
                   help="drop nodes without links instead of failing")
    c.add_argument("--jobs", type=int, default=1)

    pr = sub.add_parser("project", help="shared-neighbour projection onto one node type")
    pr.add_argument("--in", dest="inp", required=True)
    pr.add_argument("--side", choices=["a", "b"], default="a")
    pr.add_argument("--weighted", action="store_true", help="sum min(weights) instead of counting")
    pr.add_argument("--out", default="-")

    s = sub.add_parser("sweep", help="error curve of one network over a threshold grid")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--in", dest="inp")
    src.add_argument("--gen-config", help="generate the network from this config file")
    s.add_argument("--truth", help="ground truth CSV (required with --in)")
    s.add_argument("--orientation", choices=["direct", "reverse"], default="direct")
    s.add_argument("--grid-step", type=float, default=0.01)
    s.add_argument("--out", default="-")

    e = sub.add_parser("ensemble", help="mean/std error curves over seeded realizations")
    _add_gen_flags(e)
    e.add_argument("--config", help="key=value config file; flags override its values")
    e.add_argument("--n", type=int, default=100, help="number of realizations")
    e.add_argument("--orientation", choices=["direct", "reverse"], default="direct")
    e.add_argument("--grid-step", type=float, default=0.01)
    e.add_argument("--out", default="-")
    e.add_argument("--curves-out", help="also write every realization's curve (long CSV)")
    e.add_argument("--meta-out", help="metadata sidecar path")
    e.add_argument("--jobs", type=int, default=1, help="worker processes")
    return parser


def _cmd_gen(args):
    cfg = _gen_config(args, args.config)
    net, truth = generate(cfg)
    out = Path(args.out)
    write_edge_list(net, out)
    write_ground_truth(truth, args.truth_out or f"{out}.truth.csv")
    write_metadata(RunMetadata("gen", cfg.as_dict()), args.meta_out or f"{out}.meta")


def _cmd_coincide(args):
    net = read_network(args.inp)
    sim = coincidence_network(net, Orientation.parse(args.orientation),
                              drop_isolated=args.drop_isolated, n_jobs=args.jobs)
    if sim.dropped:
        print(f"dropped isolated nodes: {', '.join(map(str, sim.dropped))}", file=sys.stderr)
    write_similarity(sim, args.out, args.format)


def _cmd_project(args):
    net = read_network(args.inp)
    write_projection(project(net, args.side, use_weights=args.weighted), args.out)


def _cmd_sweep(args):
    o = Orientation.parse(args.orientation)
    cfg = None
    if args.gen_config:
        cfg = read_config(args.gen_config)
        net, gt = generate(cfg)
        truth = gt.mapping(o)
    else:
        if not args.truth:
            raise UsageError("sweep: --truth is required with --in")
        net = read_network(args.inp)
        full = read_ground_truth(args.truth)
        labels = net.a_labels if o is Orientation.DIRECT else net.b_labels
        missing = [lab for lab in labels if lab not in full]
        if missing:
            raise CoincnetError(f"ground truth lacks nodes: {', '.join(missing[:10])}")
        truth = {lab: full[lab] for lab in labels}
    sim = coincidence_network(net, o)
    write_error_curves(error_sweep(sim, truth, threshold_grid(args.grid_step), cfg), args.out)


def _cmd_ensemble(args):
    cfg = _gen_config(args, args.config)
    summary = ensemble(cfg, args.n, args.orientation, threshold_grid(args.grid_step), n_jobs=args.jobs)
    if summary.skipped:
        print(f"skipped {len(summary.skipped)} realization(s) with isolated nodes: "
              f"seeds {', '.join(map(str, summary.skipped))}", file=sys.stderr)
    write_error_curves(summary, args.out)
    if args.curves_out:
        write_realization_curves(summary, args.curves_out)
    if args.meta_out:
        echo = {**cfg.as_dict(), "n_realizations": args.n, "orientation": summary.orientation.value,
                "grid_step": args.grid_step, "seed_schedule": "seed+k",
                "skipped": len(summary.skipped)}
        write_metadata(RunMetadata("ensemble", echo), args.meta_out)


COMMANDS = {"gen": _cmd_gen, "coincide": _cmd_coincide, "project": _cmd_project,
            "sweep": _cmd_sweep, "ensemble": _cmd_ensemble}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help / --version
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    except (CoincnetError, OSError) as exc:
        print(f"coincnet: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
