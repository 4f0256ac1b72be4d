"""Command-line interface: JSON experiment configs in, CSV tables out.

Subcommands:
    sweep        per-(modulation index, method) operating-point table
    max-mi       feasibility ceiling across a harmonic-ratio grid
    phase-sweep  fundamental rotor-current phase across a load grid
    solve        one-shot angle solve for a single operating point

Every subcommand reads ``--config <json>`` and writes ``--out <csv>``.
Exit codes: 0 success (flagged rows included), 2 configuration error,
3 empty result (no operating point solved; the CSV is still written).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .angles import classic_angles, fourier_amplitude, solve_ratio, solve_she_pwm
from .errors import ConfigError, EmptyResultError, InfeasibleError, SheTorqueError
from .motor import motor_from_dict
from .phasors import MethodVariant
from .sweep import (
    ExperimentConfig,
    run_max_mi_curve,
    run_phase_sweep,
    run_sweep,
    write_max_mi_csv,
    write_phase_csv,
    write_sweep_csv,
)

TWO_PI = 2.0 * math.pi

SOLVE_COLUMNS = (
    "mi", "method", "alpha1_deg", "alpha2_deg", "v1", "v5", "v7",
    "residual", "branch",
)


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON in {path!r}: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError(f"config root must be a JSON object in {path!r}")
    return data


def _load_config(args, *, motor_override: bool) -> dict:
    data = _load_json(args.config)
    if motor_override and getattr(args, "motor", None):
        data["motor"] = _load_json(args.motor)
    return data


def _require(data: dict, key: str, context: str):
    if key not in data:
        raise ConfigError(f"{context} config requires {key!r}")
    return data[key]


def _reject_unknown(data: dict, allowed: set, context: str) -> None:
    unknown = set(data) - allowed
    if unknown:
        raise ConfigError(f"unknown {context} config keys: {sorted(unknown)}")


def _parse_variant(raw, context: str) -> MethodVariant:
    try:
        return MethodVariant[str(raw)]
    except KeyError:
        names = [m.name for m in MethodVariant]
        raise ConfigError(
            f"{context} config: unknown method {raw!r}; expected one of {names}"
        ) from None


def _cmd_sweep(args) -> int:
    config = ExperimentConfig.from_dict(_load_config(args, motor_override=True))
    try:
        rows = run_sweep(config)
    except EmptyResultError as exc:
        write_sweep_csv(exc.rows, args.out)
        print(f"empty result: {exc}", file=sys.stderr)
        return 3
    write_sweep_csv(rows, args.out)
    return 0


def _cmd_max_mi(args) -> int:
    data = _load_config(args, motor_override=False)
    _reject_unknown(
        data, {"variant", "ratio_grid", "v_dc", "frequency_hz"}, "max-mi"
    )
    variant = _parse_variant(_require(data, "variant", "max-mi"), "max-mi")
    ratio_grid = _require(data, "ratio_grid", "max-mi")
    v_dc = float(data.get("v_dc", 560.0))
    frequency_hz = float(data.get("frequency_hz", 50.0))
    if not frequency_hz > 0.0:
        raise ConfigError(f"frequency_hz must be > 0, got {frequency_hz!r}")
    try:
        rows = run_max_mi_curve(
            variant, ratio_grid, v_dc=v_dc, omega_s=TWO_PI * frequency_hz
        )
    except InfeasibleError as exc:
        print(f"empty result: {exc}", file=sys.stderr)
        return 3
    write_max_mi_csv(rows, args.out)
    return 0


def _cmd_phase_sweep(args) -> int:
    data = _load_config(args, motor_override=True)
    _reject_unknown(
        data, {"motor", "frequency_hz", "load_grid", "v1"}, "phase-sweep"
    )
    try:
        motor = motor_from_dict(_require(data, "motor", "phase-sweep"))
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad motor block: {exc}") from exc
    load_grid = _require(data, "load_grid", "phase-sweep")
    frequency_hz = float(data.get("frequency_hz", 50.0))
    kwargs = {}
    if "v1" in data:
        kwargs["v1"] = float(data["v1"])
    rows = run_phase_sweep(motor, frequency_hz, load_grid, **kwargs)
    write_phase_csv(rows, args.out)
    if all(row.status != "ok" for row in rows):
        print("empty result: no load point below breakdown", file=sys.stderr)
        return 3
    return 0


def _cmd_solve(args) -> int:
    data = _load_config(args, motor_override=False)
    _reject_unknown(
        data, {"mi", "method", "ratio_target", "v_dc", "frequency_hz"}, "solve"
    )
    mi = float(_require(data, "mi", "solve"))
    method = _parse_variant(_require(data, "method", "solve"), "solve")
    v_dc = float(data.get("v_dc", 560.0))
    frequency_hz = float(data.get("frequency_hz", 50.0))
    if not frequency_hz > 0.0:
        raise ConfigError(f"frequency_hz must be > 0, got {frequency_hz!r}")
    omega_s = TWO_PI * frequency_hz
    ratio_target = data.get("ratio_target")

    try:
        if method is MethodVariant.SHE_PWM:
            if ratio_target is not None:
                raise ConfigError("SHE_PWM takes no ratio_target")
            report = solve_she_pwm(mi, v_dc=v_dc, omega_s=omega_s)
        elif method is MethodVariant.CLASSIC:
            kwargs = {}
            if ratio_target is not None:
                kwargs["ratio"] = float(ratio_target)
            report = classic_angles(mi, v_dc=v_dc, omega_s=omega_s, **kwargs)
        else:
            if ratio_target is None:
                raise ConfigError(f"{method.name} requires ratio_target")
            report = solve_ratio(
                mi, float(ratio_target), method, v_dc=v_dc, omega_s=omega_s
            )
    except InfeasibleError as exc:
        print(f"empty result: {exc}", file=sys.stderr)
        return 3

    pattern = report.pattern
    values = (
        mi,
        method.name,
        math.degrees(pattern.alpha1),
        math.degrees(pattern.alpha2),
        fourier_amplitude(pattern, 1),
        fourier_amplitude(pattern, 5),
        fourier_amplitude(pattern, 7),
        max(report.residuals),
        report.branch,
    )
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(SOLVE_COLUMNS) + "\n")
        fh.write(
            ",".join(v if isinstance(v, str) else f"{v:.12g}" for v in values)
            + "\n"
        )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="she-torque",
        description=(
            "Two-angle harmonic-elimination switching patterns and their "
            "6th-harmonic torque performance: sweeps, feasibility curves, "
            "phase curves, and one-shot solves."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    specs = (
        ("sweep", _cmd_sweep, True,
         "Run a (modulation index, method) sweep from an experiment config."),
        ("max-mi", _cmd_max_mi, False,
         "Trace the maximum modulation index across a harmonic-ratio grid."),
        ("phase-sweep", _cmd_phase_sweep, True,
         "Trace the fundamental rotor-current phase across a load grid."),
        ("solve", _cmd_solve, False,
         "Solve one operating point and emit its angles and amplitudes."),
    )
    for name, handler, takes_motor, help_text in specs:
        cmd = sub.add_parser(name, help=help_text, description=help_text)
        cmd.add_argument(
            "--config", required=True, help="path to the JSON configuration"
        )
        cmd.add_argument(
            "--out", required=True, help="path of the CSV file to write"
        )
        if takes_motor:
            cmd.add_argument(
                "--motor",
                help="path to a JSON motor block overriding the config's",
            )
        cmd.set_defaults(handler=handler)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except SheTorqueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
