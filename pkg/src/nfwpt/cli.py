"""Command-line interface: the two sweeps, scenario runner, and limit table."""

from __future__ import annotations

import argparse
import dataclasses
import sys

from . import emf, kernels
from .errors import ScenarioError
from .experiments import (FIG2_COLUMNS, FIG4_COLUMNS, emit_results,
                          render_csv, render_json, run_fig2, run_fig4)
from .geometry import SPEED_OF_LIGHT
from .scenario import ScenarioConfig, parse_scenario


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", help="output file (default: stdout)")
    parser.add_argument("--format", choices=("csv", "json"), default=None)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--sphere-samples", type=int, default=None)
    parser.add_argument("--frequencies", default=None,
                        help="comma-separated GHz values overriding the sweep")
    parser.add_argument("--radii", default=None,
                        help="comma-separated sphere radii in meters")
    parser.add_argument("--pso-iterations", type=int, default=None)
    parser.add_argument("--pso-swarm-size", type=int, default=None)


def _scenario_from_args(experiment: str, args) -> ScenarioConfig:
    lines = [f"experiment = {experiment}"]
    if args.seed is not None:
        lines.append(f"seed = {args.seed}")
    if args.format is not None:
        lines.append(f"format = {args.format}")
    if args.sphere_samples is not None:
        lines.append(f"sphere_samples = {args.sphere_samples}")
    if args.frequencies is not None:
        lines.append(f"frequencies_ghz = {args.frequencies}")
    if args.radii is not None:
        lines.append(f"radii_m = {args.radii}")
    if args.pso_iterations is not None:
        lines.append(f"pso_iterations = {args.pso_iterations}")
    if args.pso_swarm_size is not None:
        lines.append(f"pso_swarm_size = {args.pso_swarm_size}")
    return parse_scenario("\n".join(lines))


def _emit(rows, columns, config: ScenarioConfig, out_override) -> None:
    path = out_override or config.output
    fmt = config.format
    if path:
        emit_results(rows, path, fmt, columns)
    else:
        text = render_csv(rows, columns) if fmt == "csv" else render_json(
            rows, columns)
        sys.stdout.write(text)


def _describe() -> str:
    config = ScenarioConfig(experiment="fig2")
    lines = [f"speed_of_light_m_per_s = {SPEED_OF_LIGHT!r}",
             f"kernel_backend = {kernels.backend_name()}"]
    for f in dataclasses.fields(ScenarioConfig):
        lines.append(f"default_{f.name} = {getattr(config, f.name)!r}")
    lines.append("fig2_defaults: er_distance_m = 8.0, radii span 0.5-32 cm")
    lines.append("fig4_defaults: er_distance_m = 3.0, radius 0.15 m, "
                 "frequencies 2-30 GHz step 0.5")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nfwpt",
        description="Near-field wireless power transfer sweeps and "
                    "exposure-limit checks")
    parser.add_argument("--describe", action="store_true",
                        help="print physical constants and defaults, then exit")
    sub = parser.add_subparsers(dest="command")

    p2 = sub.add_parser("fig2", help="density vs sphere radius sweep")
    _add_common(p2)
    p2.add_argument("--d-prime", default=None,
                    help="comma-separated near/far thresholds in meters")

    p4 = sub.add_parser("fig4", help="consumed power vs frequency sweep")
    _add_common(p4)

    pr = sub.add_parser("run", help="run a scenario file")
    pr.add_argument("--scenario", required=True)
    pr.add_argument("--out", default=None)
    pr.add_argument("--format", choices=("csv", "json"), default=None)
    pr.add_argument("--seed", type=int, default=None)

    pl = sub.add_parser("limits", help="exposure limit table at a frequency")
    pl.add_argument("--freq", type=float, required=True, help="GHz")
    pl.add_argument("--minutes", type=float, default=None,
                    help="also report the burst energy limit for this duration")
    pl.add_argument("--occupational", action="store_true")
    pl.add_argument("--out", default=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.describe:
        sys.stdout.write(_describe())
        return 0
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        if args.command == "fig2":
            config = _scenario_from_args("fig2", args)
            if args.d_prime is not None:
                config = dataclasses.replace(
                    config, d_prime_m=tuple(
                        float(v) for v in args.d_prime.split(",")))
            _emit(run_fig2(config), FIG2_COLUMNS, config, args.out)
        elif args.command == "fig4":
            config = _scenario_from_args("fig4", args)
            _emit(run_fig4(config), FIG4_COLUMNS, config, args.out)
        elif args.command == "run":
            with open(args.scenario, encoding="utf-8") as fh:
                config = parse_scenario(fh.read())
            if args.seed is not None:
                config = dataclasses.replace(config, seed=args.seed)
            if args.format is not None:
                config = dataclasses.replace(config, format=args.format)
            if config.experiment == "fig2":
                _emit(run_fig2(config), FIG2_COLUMNS, config, args.out)
            elif config.experiment == "fig4":
                _emit(run_fig4(config), FIG4_COLUMNS, config, args.out)
            else:
                raise ScenarioError(
                    "custom scenarios have no predefined sweep; use fig2 or "
                    "fig4")
        elif args.command == "limits":
            rows = emf.limits_table(args.freq, args.minutes,
                                    args.occupational)
            text = render_csv(rows)
            if args.out:
                with open(args.out, "w", encoding="utf-8") as fh:
                    fh.write(text)
            else:
                sys.stdout.write(text)
    except (ScenarioError, ValueError, OSError) as exc:
        print(f"nfwpt: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
