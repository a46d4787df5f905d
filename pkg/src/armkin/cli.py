"""Command-line front end: one-shot queries, sweeps, and the service.

All user-facing angles are degrees; the core works in radians. Exit
codes: 0 success, 2 usage, 3 domain/reachability failure, 4 bad config.
"""

from __future__ import annotations

import argparse
import math
import sys

from .config import ArmConfig, default_config, load_config
from .errors import ConfigError, DomainError, ReachabilityError, SingularityError
from .forward import JointAngles, fk
from .guard import clamp_target
from .inverse import BranchMode, DomainMode, ik, reachable
from .transforms import CartesianTarget
from .validate import CSV_HEADER, sweep

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_CONFIG = 4


def _fmt(value: float) -> str:
    """Fixed 6-decimal formatting, normalizing -0.000000 away."""
    rounded = round(value, 6)
    if rounded == 0.0:
        rounded = 0.0
    return f"{rounded:.6f}"


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="armkin", description="3-DOF arm kinematics toolkit")
    parser.add_argument("--config", metavar="PATH", help="configuration file (flat key = value)")
    parser.add_argument("--domain-mode", choices=["paper", "clamp"], help="trig domain repair mode")
    parser.add_argument("--branch-mode", choices=["paper", "robust"], help="shoulder/elbow trig form")
    sub = parser.add_subparsers(dest="command", required=True)

    p_fk = sub.add_parser("fk", help="joint angles (degrees) to Cartesian position")
    p_fk.add_argument("t1", type=float)
    p_fk.add_argument("t2", type=float)
    p_fk.add_argument("t3", type=float)

    p_ik = sub.add_parser("ik", help="Cartesian target to joint angles (degrees)")
    p_ik.add_argument("x", type=float)
    p_ik.add_argument("y", type=float)
    p_ik.add_argument("z", type=float)

    p_sweep = sub.add_parser("sweep", help="seeded statistical round-trip validation")
    p_sweep.add_argument("--sampler", choices=["joint", "box"], required=True)
    p_sweep.add_argument("--n", type=int, default=1000)
    p_sweep.add_argument("--seed", type=int, default=0)
    p_sweep.add_argument("--box", type=float, nargs=6, metavar=("X0", "X1", "Y0", "Y1", "Z0", "Z1"))
    p_sweep.add_argument("--max-error", type=float, help="pass threshold in mm (default 1e-6 * reach)")

    p_serve = sub.add_parser("serve", help="run the HTTP control service")
    p_serve.add_argument("--port", type=int, default=8080)
    p_serve.add_argument("--host", default="127.0.0.1")

    return parser


def _load(args) -> ArmConfig:
    config = load_config(args.config) if args.config else default_config()
    overrides = {}
    if args.domain_mode:
        overrides["domain_mode"] = (
            DomainMode.PAPER_FRACTIONAL if args.domain_mode == "paper" else DomainMode.CLAMP
        )
    if args.branch_mode:
        overrides["branch_mode"] = (
            BranchMode.PAPER_ASIN if args.branch_mode == "paper" else BranchMode.ROBUST_ACOS
        )
    if overrides:
        from dataclasses import replace

        config = replace(config, **overrides)
    return config


def cmd_fk(config: ArmConfig, args) -> int:
    q = JointAngles(*(math.radians(t) for t in (args.t1, args.t2, args.t3)))
    position = fk(config.links, q, config.joint_limits()).position
    print(" ".join(_fmt(c) for c in position))
    return EXIT_OK


def cmd_ik(config: ArmConfig, args) -> int:
    report = clamp_target(CartesianTarget(args.x, args.y, args.z), config.limits)
    for rule in report.rules_applied:
        print(
            f"clamp {rule.value}: ({_fmt(report.original.x)}, {_fmt(report.original.y)}, "
            f"{_fmt(report.original.z)}) -> ({_fmt(report.clamped.x)}, {_fmt(report.clamped.y)}, "
            f"{_fmt(report.clamped.z)})",
            file=sys.stderr,
        )
    solution = ik(
        config.links,
        report.clamped,
        domain=config.domain_mode,
        branch=config.branch_mode,
        strict=True,
    )
    print(" ".join(_fmt(math.degrees(a)) for a in solution.angles))
    return EXIT_OK


def cmd_sweep(config: ArmConfig, args) -> int:
    if args.n < 1:
        print("sweep needs --n >= 1", file=sys.stderr)
        return EXIT_USAGE
    box = tuple(args.box) if args.box else None
    summary = sweep(
        config.links,
        args.sampler,
        args.n,
        args.seed,
        domain=config.domain_mode,
        branch=config.branch_mode,
        limits=config.joint_limits(),
        box=box,
    )
    print(CSV_HEADER)
    print(summary.csv_row(args.seed))
    threshold = args.max_error if args.max_error is not None else 1e-6 * config.links.reach
    if summary.failures > 0 or summary.max_error > threshold:
        print(
            f"sweep failed: failures={summary.failures} max_error={summary.max_error:.9e} "
            f"threshold={threshold:.9e}",
            file=sys.stderr,
        )
        return EXIT_DOMAIN
    return EXIT_OK


def cmd_serve(config: ArmConfig, args) -> int:
    from .service import serve_forever

    try:
        serve_forever(config, host=args.host, port=args.port)
    except OSError as exc:
        print(f"cannot start service on {args.host}:{args.port}: {exc}", file=sys.stderr)
        return 1
    return EXIT_OK


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        config = _load(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    handlers = {"fk": cmd_fk, "ik": cmd_ik, "sweep": cmd_sweep, "serve": cmd_serve}
    try:
        return handlers[args.command](config, args)
    except (DomainError, ReachabilityError, SingularityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
