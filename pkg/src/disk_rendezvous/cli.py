"""Command-line front end: evaluation tables and CSV exports.

Every command accepts the instance either as --rho (reference distance > sqrt 2)
or as --alpha (half arc distance in (0, pi/4)); exactly one must be given where
an instance is needed.  Angles are radians unless --degrees is passed.  CSV
output is UTF-8 with LF line endings, a '#'-prefixed config echo line, a header
row, and 12-significant-digit numbers.  Exit codes: 0 success, 1 numeric or
domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import analysis, analytic, optimize, simulate
from .errors import DiskRendezvousError
from .geometry import UNBOUNDED, Instance, Strategy, instance_from_rho


def _fmt(value: float) -> str:
    return "%.12g" % value


def _parse_steps(text: str) -> float:
    if text.lower() in ("inf", "infinity", "unbounded"):
        return UNBOUNDED
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"steps must be a positive integer or 'inf', got {text!r}"
        )


def _add_instance_args(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--rho", type=float, help="reference distance, > sqrt(2)")
    group.add_argument("--alpha", type=float, help="half arc distance, in (0, pi/4)")


def _add_output_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", help="write CSV to this path instead of stdout")
    parser.add_argument(
        "--format",
        choices=("pretty", "csv"),
        default="pretty",
        help="stdout format (ignored with --out, which always writes CSV)",
    )


def _angle(value: float, args: argparse.Namespace) -> float:
    return math.radians(value) if args.degrees else value


def _instance(args: argparse.Namespace) -> Instance:
    if args.rho is not None:
        return instance_from_rho(args.rho)
    return Instance(alpha=_angle(args.alpha, args))


def _config_echo(args: argparse.Namespace) -> str:
    skip = {"func", "out", "format"}
    parts = [args.command]
    for key, value in sorted(vars(args).items()):
        if key in skip or key == "command" or value is None:
            continue
        parts.append(f"{key}={value}")
    return "# " + " ".join(parts)


def _emit_table(
    args: argparse.Namespace, header: list[str], rows: list[list[float]]
) -> None:
    """Write rows as CSV (to --out or stdout) or as an aligned pretty table."""
    echo = _config_echo(args)
    if args.out or args.format == "csv":
        lines = [echo, ",".join(header)]
        lines += [",".join(_fmt(v) for v in row) for row in rows]
        text = "\n".join(lines) + "\n"
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return
    print(echo)
    cells = [[_fmt(v) for v in row] for row in rows]
    widths = [
        max(len(header[i]), *(len(r[i]) for r in cells)) if cells else len(header[i])
        for i in range(len(header))
    ]
    print("  ".join(h.rjust(w) for h, w in zip(header, widths)))
    for row in cells:
        print("  ".join(c.rjust(w) for c, w in zip(row, widths)))


# ---------------------------------------------------------------------------
# Subcommands.


def cmd_eval(args: argparse.Namespace) -> int:
    inst = _instance(args)
    strat = Strategy(
        steps=args.k, beta=_angle(args.beta, args), gamma=_angle(args.gamma, args)
    )
    report = analytic.performance_report(inst, strat)
    worst = simulate.worst_case_time(inst, strat)
    _emit_table(
        args,
        ["rho", "alpha", "expected_time", "competitive_ratio", "energy", "worst_case"],
        [
            [
                report.rho,
                inst.alpha,
                report.expected_time,
                report.competitive_ratio,
                report.energy,
                worst,
            ]
        ],
    )
    return 0


_OPT_FAMILIES = ("one_rb", "one_step", "unbounded")


def cmd_optimize(args: argparse.Namespace) -> int:
    inst = _instance(args)
    header = [
        "family",
        "steps",
        "beta",
        "gamma",
        "expected_time",
        "competitive_ratio",
        "energy",
    ]
    rows = []
    names = _OPT_FAMILIES if args.family == "all" else (args.family,)
    for i, name in enumerate(names):
        strat = analysis.FAMILIES[name](inst)
        rep = analytic.performance_report(inst, strat)
        rows.append(
            [
                float(i),
                strat.steps,
                strat.beta,
                strat.gamma,
                rep.expected_time,
                rep.competitive_ratio,
                rep.energy,
            ]
        )
    # family column is a name, not a number; splice it in after formatting
    echo = _config_echo(args)
    lines = [echo, ",".join(header)]
    for name, row in zip(names, rows):
        lines.append(",".join([name] + [_fmt(v) for v in row[1:]]))
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.certify and args.family in ("unbounded", "all"):
        report = optimize.hessian_check_inf(inst)
        print(
            "# certification: residuals (%s, %s), hessian eigenvalues (%s, %s)"
            % (
                _fmt(report.residual_1),
                _fmt(report.residual_2),
                _fmt(report.hessian_eigenvalues[0]),
                _fmt(report.hessian_eigenvalues[1]),
            )
        )
    return 0


def cmd_simulate(args: argparse.Namespace) -> int:
    inst = _instance(args)
    strat = Strategy(
        steps=args.k, beta=_angle(args.beta, args), gamma=_angle(args.gamma, args)
    )
    summary = simulate.monte_carlo(inst, strat, trials=args.trials, seed=args.seed)
    expected = analytic.expected_time(inst, strat)
    gap = abs(summary.mean_time - expected)
    passed = gap <= 3.0 * summary.std_error or summary.std_error == 0.0 and gap < 1e-12
    print(_config_echo(args))
    print(f"# seed={args.seed} trials={args.trials} truncated={summary.truncated}")
    print("mean,std_error,analytic,abs_gap,three_sigma,status")
    print(
        ",".join(
            [
                _fmt(summary.mean_time),
                _fmt(summary.std_error),
                _fmt(expected),
                _fmt(gap),
                _fmt(3.0 * summary.std_error),
                "PASS" if passed else "FAIL",
            ]
        )
    )
    return 0


def cmd_effectiveness(args: argparse.Namespace) -> int:
    names = (
        tuple(analysis.FAMILIES) if args.family == "all" else (args.family,)
    )
    print(_config_echo(args))
    print("family,effectiveness")
    for name in names:
        root = analysis.effectiveness(analysis.curve_of(analysis.FAMILIES[name]))
        print(f"{name},{_fmt(root)}")
    return 0


def cmd_asymptotics(args: argparse.Namespace) -> int:
    rep = analysis.asymptotics_report(args.rho_probe)
    names = ("beta_slope", "gamma_slope", "cr_gap_scaled", "energy_scaled")
    values = (rep.beta_slope, rep.gamma_slope, rep.cr_gap_scaled, rep.energy_scaled)
    print(_config_echo(args))
    print("quantity,value,reference,abs_gap")
    for name, value, ref in zip(names, values, rep.references):
        print(f"{name},{_fmt(value)},{_fmt(ref)},{_fmt(abs(value - ref))}")
    return 0


def cmd_tradeoff(args: argparse.Namespace) -> int:
    if args.family == "A":
        point = analysis.tradeoff_family_A(args.epsilon)
    else:
        point = analysis.tradeoff_family_B(args.epsilon, lam=args.lam)
    print(_config_echo(args))
    print("quantity,value")
    print(f"limit_competitive_ratio,{_fmt(point.limit_competitive_ratio)}")
    print(f"limit_scaled_energy,{_fmt(point.limit_scaled_energy)}")
    print(f"scaling,{point.scaling.value}")
    if point.limit_scaled_cr_gap is not None:
        print(f"limit_scaled_cr_gap,{_fmt(point.limit_scaled_cr_gap)}")
    if args.rho is not None:
        inst = instance_from_rho(args.rho)
        strat = point.strategy_of(inst)
        rep = analytic.performance_report(inst, strat)
        rho2 = args.rho**2
        print(f"exact_competitive_ratio,{_fmt(rep.competitive_ratio)}")
        energy_rho = rep.energy / math.sin(inst.alpha)
        if point.scaling is analysis.EnergyScaling.ENERGY_OVER_RHO_SQUARED:
            print(f"exact_scaled_energy,{_fmt(energy_rho / rho2)}")
            print(
                "exact_scaled_cr_gap,"
                + _fmt(rho2 * (rep.competitive_ratio - point.limit_competitive_ratio))
            )
        else:
            print(f"exact_scaled_energy,{_fmt(energy_rho / args.rho)}")
    return 0


def cmd_curves(args: argparse.Namespace) -> int:
    if not args.rho_min < args.rho_max:
        raise DiskRendezvousError("--rho-min must be below --rho-max")
    rhos = [float(r) for r in np.linspace(args.rho_min, args.rho_max, args.points)]
    rows = analysis.curve_table(rhos)
    _emit_table(
        args,
        ["rho", "naive", "one_rb", "one_step", "greedy_bisector", "unbounded"],
        [
            [r.rho, r.naive, r.one_rb, r.one_step, r.greedy_bisector, r.unbounded]
            for r in rows
        ],
    )
    return 0


def cmd_trajectory(args: argparse.Namespace) -> int:
    inst = _instance(args)
    if args.beta is not None or args.gamma is not None:
        if args.beta is None or args.gamma is None:
            raise DiskRendezvousError("--beta and --gamma must be given together")
        strat = Strategy(
            steps=args.k, beta=_angle(args.beta, args), gamma=_angle(args.gamma, args)
        )
    else:
        strat = optimize.optimal_inf(inst)
    if args.mode == "spiral":
        bits = simulate.constant_bits(True, False)
    else:
        bits = simulate.coin_stream(args.seed, 0)
    points = simulate.trace_trajectory(inst, strat, bits, r_min=args.r_min)
    _emit_table(
        args,
        ["x", "y", "cumulative_length"],
        [[px, py, s] for px, py, s in points],
    )
    return 0


# ---------------------------------------------------------------------------
# Parser wiring.


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="disk-rendezvous",
        description="Symmetric rendezvous strategies on a disk with a "
        "common reference point: evaluation, optimization, simulation.",
    )
    parser.add_argument(
        "--degrees", action="store_true", help="interpret input angles as degrees"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="expected time, competitive ratio, and energy")
    _add_instance_args(p)
    p.add_argument("--k", type=_parse_steps, required=True, help="rounds, or 'inf'")
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--gamma", type=float, required=True)
    _add_output_args(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("optimize", help="optimal darting angles per strategy class")
    _add_instance_args(p)
    p.add_argument("--family", choices=_OPT_FAMILIES + ("all",), default="all")
    p.add_argument(
        "--certify",
        action="store_true",
        help="also print residuals and Hessian eigenvalues (unbounded class)",
    )
    p.add_argument("--out", help="write CSV to this path instead of stdout")
    p.set_defaults(func=cmd_optimize, format="csv")

    p = sub.add_parser("simulate", help="Monte Carlo mean vs the analytic value")
    _add_instance_args(p)
    p.add_argument("--k", type=_parse_steps, required=True, help="rounds, or 'inf'")
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("effectiveness", help="largest rho with ratio <= 4.25")
    p.add_argument(
        "--family", choices=tuple(analysis.FAMILIES) + ("all",), default="all"
    )
    p.set_defaults(func=cmd_effectiveness)

    p = sub.add_parser("asymptotics", help="large-rho limit constants check")
    p.add_argument("--rho-probe", type=float, default=1e4)
    p.set_defaults(func=cmd_asymptotics)

    p = sub.add_parser("tradeoff", help="time-energy tradeoff families")
    p.add_argument("--family", choices=("A", "B"), required=True)
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--lam", type=float, default=3.0 / 11.0, help="family B only")
    p.add_argument(
        "--rho", type=float, help="also evaluate the family exactly at this rho"
    )
    p.set_defaults(func=cmd_tradeoff)

    p = sub.add_parser("curves", help="competitive-ratio curves over a rho range")
    p.add_argument("--rho-min", type=float, required=True)
    p.add_argument("--rho-max", type=float, required=True)
    p.add_argument("--points", type=int, default=100)
    _add_output_args(p)
    p.set_defaults(func=cmd_curves)

    p = sub.add_parser("trajectory", help="export one agent's darting path as CSV")
    _add_instance_args(p)
    p.add_argument("--mode", choices=("spiral", "random"), default="spiral")
    p.add_argument(
        "--k",
        type=_parse_steps,
        default=UNBOUNDED,
        help="rounds for a custom strategy (with --beta/--gamma)",
    )
    p.add_argument("--beta", type=float, help="override the optimal angles")
    p.add_argument("--gamma", type=float)
    p.add_argument("--seed", type=int, default=0, help="random mode coin seed")
    p.add_argument("--r-min", type=float, default=1e-9)
    _add_output_args(p)
    p.set_defaults(func=cmd_trajectory)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DiskRendezvousError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
