"""Command-line front end for the standard experiments.

Each subcommand runs one sweep with the default scenario (optionally
replaced by a JSON config) and writes ``<experiment>.csv`` plus a scenario
snapshot into the output directory.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from . import experiments
from .experiments import ScenarioConfig
from .geometry import LinkState
from .results import write_results


def _add_common(sub: argparse.ArgumentParser):
    sub.add_argument("--config", help="JSON file with a scenario configuration")
    sub.add_argument("--out", default="results", help="output directory (default: results)")
    sub.add_argument("--seed", type=int, help="override the master seed")
    sub.add_argument("--trials", type=int, help="override the trial count per sweep point")
    sub.add_argument(
        "--link-state",
        choices=[s.value for s in LinkState],
        help="override the direct-link propagation state",
    )
    sub.add_argument("--threads", type=int, default=1, help="worker threads (default: 1)")


def _load_scenario(args) -> ScenarioConfig:
    if args.config:
        with open(args.config) as fh:
            cfg = ScenarioConfig.from_dict(json.load(fh))
    else:
        cfg = ScenarioConfig()
    overrides = {}
    if args.seed is not None:
        overrides["master_seed"] = args.seed
    if args.trials is not None:
        overrides["trials"] = args.trials
    if args.link_state is not None:
        overrides["link_state"] = LinkState(args.link_state)
    if overrides:
        cfg = dataclasses.replace(cfg, **overrides)
    return cfg


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="riscancel",
        description="Monte-Carlo study of signal-cancellation attacks from a reflecting surface",
    )
    subs = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("sweep-elements", "attack strength versus surface element count"),
        ("sweep-position", "attack strength versus surface position"),
        ("sweep-mse", "attack strength versus channel-estimation error"),
        ("sweep-quantization", "attack strength versus phase-shifter resolution"),
        ("single", "one scenario, all arms"),
    ):
        _add_common(subs.add_parser(name, help=help_text))
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _load_scenario(args)
    except (OSError, ValueError, TypeError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    threads = args.threads
    if args.command == "sweep-elements":
        rows = experiments.sweep_elements(cfg, threads=threads)
    elif args.command == "sweep-position":
        rows = experiments.sweep_position(cfg, threads=threads)
    elif args.command == "sweep-mse":
        rows = experiments.sweep_mse(cfg, threads=threads)
    elif args.command == "sweep-quantization":
        rows = experiments.sweep_quantization(cfg, threads=threads)
    else:
        rows = experiments.run_single(cfg, threads=threads)

    path = write_results(rows, cfg, args.out)
    print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
