"""Command-line front end.

Exit codes: 0 success, 1 invalid scenario, 2 unphysical rapidity without
``--allow-unphysical-r``, 3 numerical failure (including a failed ``check``).
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import checks
from .linalg import ConvergenceError
from .sweep import (
    REPLICAS,
    ScenarioError,
    TrendError,
    load_scenario,
    parse_number,
    parse_scenario_text,
    render_audit,
    rows_to_csv,
    run_audit,
    run_replica,
    run_sweep,
    run_trend_report,
    scenario_from_mapping,
    trend_preset,
)
from .unruh import UnphysicalRapidityError

EXIT_OK, EXIT_SCENARIO, EXIT_UNPHYSICAL, EXIT_NUMERICAL = 0, 1, 2, 3

log = logging.getLogger("unruh_teleport")

# flag dest -> scenario-file key
SHARED_FLAGS = {
    "p": "p", "r1": "r1", "r2": "r2", "r3": "r3", "alpha": "alpha",
    "mode": "mode", "input": "input", "steps": "steps",
}
SWEEP_ONLY_FLAGS = {"axis": "axis", "grid_from": "from", "grid_to": "to"}


def _add_shared(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", help="channel parameter in [0, 1]")
    parser.add_argument("--r1", help="Alice's channel rapidity")
    parser.add_argument("--r2", help="Bob's channel rapidity")
    parser.add_argument("--r3", help="rapidity of the teleported qubit")
    parser.add_argument("--alpha", help="input amplitude alpha in [0, 1]; beta = sqrt(1 - alpha^2)")
    parser.add_argument("--mode", choices=("canonical", "paper-literal"))
    parser.add_argument("--input", choices=("accelerated", "nonaccelerated"))
    parser.add_argument("--steps", help="grid points (>= 2)")
    parser.add_argument("--out", help="output file or directory")
    parser.add_argument("--allow-unphysical-r", action="store_true", default=None,
                        help="admit rapidities above pi/4")
    parser.add_argument("--scenario", action="append", default=[],
                        help="key=value scenario file (flags override its values)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unruh-teleport",
        description="Teleportation fidelity over Unruh-accelerated two-qubit channels.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sweep", help="run one scenario and write CSV")
    _add_shared(p)
    p.add_argument("--axis", choices=("alpha", "r1", "r2", "r3", "p"))
    p.add_argument("--from", dest="grid_from")
    p.add_argument("--to", dest="grid_to")

    for name in REPLICAS:
        f = sub.add_parser(name, help=f"write the {name} replica datasets")
        _add_shared(f)

    a = sub.add_parser("audit", help="compare printed channel elements with the canonical channel")
    _add_shared(a)

    t = sub.add_parser("trends", help="monotonicity verdicts for the qualitative claims")
    _add_shared(t)
    t.add_argument("--preset", choices=("fig2", "fig3", "fig4", "p-sweep"))

    c = sub.add_parser("check", help="run the built-in acceptance checks")
    c.add_argument("--out", help="also write the result lines to this file")
    return parser


def _overrides(args, include_sweep_only: bool = False) -> dict:
    flags = dict(SHARED_FLAGS)
    if include_sweep_only:
        flags.update(SWEEP_ONLY_FLAGS)
    values = {key: getattr(args, dest) for dest, key in flags.items()
              if getattr(args, dest, None) is not None}
    if args.allow_unphysical_r:
        values["allow_unphysical_r"] = True
    return values


def _emit(text: str, out) -> None:
    if out:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        Path(out).write_bytes(text.encode("utf-8"))
    else:
        sys.stdout.write(text)


def cmd_sweep(args) -> int:
    values = {}
    for path in args.scenario:
        values.update(parse_scenario_text(Path(path).read_text()))
    values.update(_overrides(args, include_sweep_only=True))
    scenario = scenario_from_mapping(values)
    _emit(rows_to_csv(run_sweep(scenario)), args.out)
    return EXIT_OK


def cmd_replica(args) -> int:
    if args.scenario:
        raise ScenarioError(f"{args.command} encodes its own scenarios; use flags to override")
    overrides = _overrides(args)
    steps = int(overrides.pop("steps", 101))
    outdir = Path(args.out or f"{args.command}_out")
    paths = run_replica(args.command, outdir, steps=steps, overrides=overrides)
    for path in paths:
        print(path)
    return EXIT_OK


def cmd_audit(args) -> int:
    values = {}
    for path in args.scenario:
        values.update(parse_scenario_text(Path(path).read_text()))
    values.update(_overrides(args))
    p = parse_number(values.get("p", 0.0))
    r1 = parse_number(values.get("r1", 0.0))
    r2 = parse_number(values.get("r2", 0.0))
    # range checks go through the scenario validator
    scenario_from_mapping({"p": p, "r1": r1, "r2": r2,
                           "allow_unphysical_r": values.get("allow_unphysical_r", False)}).validate()
    record = run_audit(p, r1, r2, out=args.out)
    if not args.out:
        sys.stdout.write(render_audit(record))
    return EXIT_OK


def cmd_trends(args) -> int:
    if args.preset and args.scenario:
        raise ScenarioError("give either --preset or --scenario files, not both")
    steps = int(args.steps) if args.steps else 101
    if args.preset:
        scenarios = trend_preset(args.preset, steps=steps)
    elif args.scenario:
        scenarios = [load_scenario(path) for path in args.scenario]
    else:
        raise ScenarioError("trends needs --preset or at least one --scenario file")
    _emit(run_trend_report(scenarios).render(), args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    results = []
    # the checks sweep unphysical and unnormalized scenarios on purpose
    level = log.level
    log.setLevel(logging.ERROR)
    try:
        for check in checks.ALL_CHECKS:
            result = check()
            results.append(result)
            print(result.line(), flush=True)
    finally:
        log.setLevel(level)
    if args.out:
        _emit("".join(r.line() + "\n" for r in results), args.out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_NUMERICAL


COMMANDS = {"sweep": cmd_sweep, "audit": cmd_audit, "trends": cmd_trends, "check": cmd_check}


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="warning: %(message)s", stream=sys.stderr)
    args = build_parser().parse_args(argv)
    handler = COMMANDS.get(args.command, cmd_replica)
    if args.command in REPLICAS and args.command in ("fig2", "fig4"):
        log.warning("%s replica uses r = 0.8 > pi/4; unphysical rapidities allowed", args.command)
    try:
        return handler(args)
    except UnphysicalRapidityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNPHYSICAL
    except (ScenarioError, TrendError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCENARIO
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
