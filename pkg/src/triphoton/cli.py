"""Command-line interface.

Subcommands mirror the library surface: `state` prints decay-state
amplitudes for a geometry, `tangle-scan` maps the entanglement landscape,
`mermin extremize`/`mermin sweep` drive the Bell-type analysis, `strength
table`/`strength sweep` report trials-to-refute, and `simulate` plays the
likelihood-ratio game. Every command writes csv (default) or json, to
stdout or to --output, and is deterministic for fixed arguments: rerunning
with any --workers value yields byte-identical output.

Exit codes: 0 success, 2 invalid arguments or values, 3 infeasible geometry.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import __version__
from .invariants import tangle_scan
from .kinematics import FeasibilityError, geometry_from_angles
from .mermin import mermin_delta_sweep, mermin_extremize
from .serialize import Table, format_number, rows_to_csv, _json_cell
from .simulate import run_batch
from .states import delta_family_state, ortho_state
from .strength import best_lr_model, event_probabilities, strength_delta_sweep, strength_table
from .tensor import PureState, ghz_state

_WORKERS_ENV = "TRIPHOTON_WORKERS"


def _resolve_workers(args) -> int:
    """--workers wins; the TRIPHOTON_WORKERS variable applies only when the
    flag is absent; default is one worker."""
    if getattr(args, "workers", None) is not None:
        count = args.workers
    else:
        raw = os.environ.get(_WORKERS_ENV)
        if raw is None:
            return 1
        try:
            count = int(raw)
        except ValueError:
            raise ValueError(f"{_WORKERS_ENV} must be an integer, got {raw!r}")
    if count < 1:
        raise ValueError(f"worker count must be >= 1, got {count}")
    return count


def _parse_state(label: str) -> PureState:
    name = label.strip().lower()
    if name == "mercedes":
        return delta_family_state(120.0)
    if name == "ghz":
        return ghz_state()
    if name.startswith("delta:"):
        return delta_family_state(float(name.split(":", 1)[1]))
    raise ValueError(f"unknown state {label!r}: expected mercedes, ghz, or delta:D")


def _parse_geometry(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"--geometry expects 'THETA12,THETA13', got {text!r}")
    return geometry_from_angles(float(parts[0]), float(parts[1]))


def _parse_range(text: str) -> tuple[float, float, float]:
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"expected 'START:STOP:STEP', got {text!r}")
    return float(parts[0]), float(parts[1]), float(parts[2])


def _basis_label(index: int) -> str:
    return "".join("-" if (index >> shift) & 1 else "+" for shift in (2, 1, 0))


def _emit(args, text: str) -> int:
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_state(args) -> int:
    geometry = _parse_geometry(args.geometry)
    state = ortho_state(geometry, spin_z=args.sz)
    entries = [
        (_basis_label(i), amp.real, amp.imag) for i, amp in enumerate(state.amplitudes)
    ]
    if args.format == "json":
        lines = ["{"]
        lines.append(f'  "theta12_deg": {_json_cell(geometry.theta12_deg)},')
        lines.append(f'  "theta13_deg": {_json_cell(geometry.theta13_deg)},')
        lines.append(f'  "spin_z": {args.sz},')
        lines.append('  "amplitudes": [')
        for pos, (basis, re, im) in enumerate(entries):
            comma = "," if pos < len(entries) - 1 else ""
            lines.append(
                f'    {{"basis": "{basis}", "re": {_json_cell(re)}, "im": {_json_cell(im)}}}{comma}'
            )
        lines.append("  ]")
        lines.append("}")
        text = "\n".join(lines) + "\n"
    else:
        text = rows_to_csv(("basis", "amplitude_re", "amplitude_im"), entries)
    return _emit(args, text)


def _cmd_tangle_scan(args) -> int:
    grid = tangle_scan(step_deg=args.step, workers=_resolve_workers(args))
    text = grid.to_json() if args.format == "json" else grid.to_csv()
    return _emit(args, text)


def _cmd_mermin_extremize(args) -> int:
    state = _parse_state(args.state)
    result = mermin_extremize(state, starts=args.starts, seed=args.seed)
    rows = tuple(
        (p.value,) + p.angles_deg + (p.stationary, p.gradient_norm)
        for p in result.points
    )
    table = Table(
        column_names=(
            "value",
            "theta_deg",
            "phi_deg",
            "theta_prime_deg",
            "phi_prime_deg",
            "stationary",
            "gradient_norm",
        ),
        rows=rows,
    )
    text = table.to_json() if args.format == "json" else table.to_csv()
    return _emit(args, text)


def _cmd_mermin_sweep(args) -> int:
    start, stop, step = _parse_range(args.delta)
    grid = mermin_delta_sweep(start, stop, step)
    text = grid.to_json() if args.format == "json" else grid.to_csv()
    return _emit(args, text)


def _cmd_strength_table(args) -> int:
    table = strength_table()
    text = table.to_json() if args.format == "json" else table.to_csv()
    return _emit(args, text)


def _cmd_strength_sweep(args) -> int:
    start, stop, step = _parse_range(args.delta)
    grid = strength_delta_sweep(start, stop, step)
    text = grid.to_json() if args.format == "json" else grid.to_csv()
    return _emit(args, text)


def _cmd_simulate(args) -> int:
    explicit = args.q is not None or args.r is not None
    if explicit and args.delta is not None:
        raise ValueError("pass either --q/--r or --delta, not both")
    if explicit:
        if args.q is None or args.r is None:
            raise ValueError("--q and --r must be given together")
        q, r = args.q, args.r
    elif args.delta is not None:
        model = event_probabilities(delta_family_state(args.delta))
        report = best_lr_model(model, target_exponent=args.target_exponent)
        if not report.violated:
            raise ValueError(
                f"delta = {format_number(args.delta)} deg stays within the "
                "local-realism bound; there is no model to refute"
            )
        q, r = model.q1, report.r1
    else:
        raise ValueError("either --q/--r or --delta is required")
    batch = run_batch(
        q,
        r,
        runs=args.runs,
        seed=args.seed,
        target_exponent=args.target_exponent,
        workers=_resolve_workers(args),
    )
    table = batch.to_table()
    text = table.to_json() if args.format == "json" else table.to_csv()
    return _emit(args, text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("csv", "json"), default="csv", help="output format"
    )
    common.add_argument("--output", metavar="PATH", help="write to file instead of stdout")
    common.add_argument(
        "--workers",
        type=int,
        metavar="N",
        help=f"thread count for parallel work (default: ${_WORKERS_ENV} or 1)",
    )

    parser = argparse.ArgumentParser(
        prog="triphoton",
        description="Three-photon decay states, entanglement, and local-realism tests.",
    )
    parser.add_argument(
        "--version", action="version", version=f"triphoton {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_state = sub.add_parser(
        "state", parents=[common], help="decay-state amplitudes for a geometry"
    )
    p_state.add_argument(
        "--geometry",
        required=True,
        metavar="T12,T13",
        help="opening angles photon1-photon2,photon1-photon3 in degrees",
    )
    p_state.add_argument(
        "--sz",
        type=int,
        choices=(0, 1, -1),
        default=0,
        help="spin projection branch (default 0)",
    )
    p_state.set_defaults(handler=_cmd_state)

    p_scan = sub.add_parser(
        "tangle-scan", parents=[common], help="tangle over the geometry grid"
    )
    p_scan.add_argument(
        "--step", type=float, default=1.0, metavar="DEG", help="grid step in degrees"
    )
    p_scan.set_defaults(handler=_cmd_tangle_scan)

    p_mermin = sub.add_parser("mermin", help="Mermin functional analysis")
    mermin_sub = p_mermin.add_subparsers(dest="subcommand", required=True)

    p_ext = mermin_sub.add_parser(
        "extremize", parents=[common], help="stationary points over symmetric settings"
    )
    p_ext.add_argument(
        "--state",
        default="mercedes",
        metavar="NAME",
        help="mercedes, ghz, or delta:D (default mercedes)",
    )
    p_ext.add_argument("--starts", type=int, default=64, help="multistart count")
    p_ext.add_argument("--seed", type=int, default=0, help="start-point seed")
    p_ext.set_defaults(handler=_cmd_mermin_extremize)

    p_msweep = mermin_sub.add_parser(
        "sweep", parents=[common], help="Mermin value across the delta family"
    )
    p_msweep.add_argument(
        "--delta", required=True, metavar="A:B:S", help="delta range start:stop:step"
    )
    p_msweep.set_defaults(handler=_cmd_mermin_sweep)

    p_strength = sub.add_parser("strength", help="statistical strength reports")
    strength_sub = p_strength.add_subparsers(dest="subcommand", required=True)

    p_table = strength_sub.add_parser(
        "table", parents=[common], help="trials-to-refute comparison table"
    )
    p_table.set_defaults(handler=_cmd_strength_table)

    p_ssweep = strength_sub.add_parser(
        "sweep", parents=[common], help="trials-to-refute across the delta family"
    )
    p_ssweep.add_argument(
        "--delta", required=True, metavar="A:B:S", help="delta range start:stop:step"
    )
    p_ssweep.set_defaults(handler=_cmd_strength_sweep)

    p_sim = sub.add_parser(
        "simulate", parents=[common], help="likelihood-ratio refutation runs"
    )
    p_sim.add_argument("--q", type=float, help="event probability (with --r)")
    p_sim.add_argument("--r", type=float, help="model probability (with --q)")
    p_sim.add_argument(
        "--delta",
        type=float,
        help="derive q and r from the delta-family state instead of --q/--r",
    )
    p_sim.add_argument("--runs", type=int, default=10, help="number of runs")
    p_sim.add_argument("--seed", type=int, default=0, help="stream seed")
    p_sim.add_argument(
        "--target-exponent",
        type=float,
        default=4.0,
        metavar="E",
        help="stop once the likelihood ratio falls below 10^-E",
    )
    p_sim.set_defaults(handler=_cmd_simulate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return int(code) if code is not None else 0
    try:
        return args.handler(args)
    except FeasibilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
