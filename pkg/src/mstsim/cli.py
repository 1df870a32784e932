"""Command-line front end.

One subcommand per experiment kind; shared flags override the config file.
Exit codes: 0 success, 1 runtime failure (partial raw.csv preserved with a
status column), 2 config parse/validation failure.
"""

from __future__ import annotations

import argparse
import sys

from .experiments import EXPERIMENTS, ExperimentConfig, load_config, run_campaign

_HELP = {
    "phase": "largest-component fraction across a grid of c at p = c/ell",
    "window": "critical-window component statistics at p = 1/ell + f/ell^(4/3)",
    "diameter": "spanning-tree diameter scaling in n",
    "typical": "typical-distance scaling in the largest supercritical tree",
    "powerlaw": "typical-distance scaling under heavy-tail weights",
    "gwcheck": "branching-process height tails and the coloring coupling",
    "selftest": "fast internal consistency checks",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mstsim",
        description="Random-graph minimum-spanning-tree simulation campaigns",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in EXPERIMENTS:
        p = sub.add_parser(name, help=_HELP[name])
        p.add_argument("--config", metavar="PATH", help="flat key=value config file")
        p.add_argument("--seed", type=int, metavar="U64", help="base seed")
        p.add_argument("--out", metavar="DIR", help="output directory")
        p.add_argument("--jobs", type=int, metavar="K", help="parallel worker processes")
        p.add_argument("--n-grid", metavar="N1,N2,...", help="comma-separated sizes")
        p.add_argument("--replicates", type=int, metavar="R", help="replicates per size")
    return parser


def _build_config(args) -> ExperimentConfig:
    overrides = {
        "experiment": args.command,
        "seed": args.seed,
        "out_dir": args.out,
        "jobs": args.jobs,
        "n_grid": args.n_grid,
        "replicates": args.replicates,
    }
    if args.config:
        cfg = load_config(args.config, **overrides)
    else:
        from .experiments import _config_from_mapping

        cfg = _config_from_mapping({k: v for k, v in overrides.items() if v is not None})
    cfg.validate()
    return cfg


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _build_config(args)
    except (OSError, ValueError) as exc:
        print(f"mstsim: config error: {exc}", file=sys.stderr)
        return 2
    summary = run_campaign(cfg)
    print(f"wrote {cfg.out_dir}/raw.csv and {cfg.out_dir}/summary.json")
    if summary["slope"] is not None:
        print(f"slope = {summary['slope']:.4f} +- {summary['slope_ci']:.4f}")
    if summary["excluded_rows"]:
        print(f"{summary['excluded_rows']} row(s) excluded (see status column)", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
