"""Command-line front end.

Subcommands: constants, energy, sweep, crossover, equilibrium,
oracle-check.  Energies print in eV (SI joules added under --si);
angles are radians or the literals 'perp'/'par'.

Exit codes: 0 success, 2 usage or validation error, 3 no solution
(no root / no crossover), 4 oracle failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys

from . import analysis, oracle
from .constants import CODATA2018, joule_to_ev
from .hydrogen import derived_constants
from .interaction import FieldConfig, Geometry, radial_force, total_energy

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NO_SOLUTION = 3
EXIT_ORACLE = 4

CONFIG_KEYS = ("field", "field_prime", "theta", "format", "si")


def parse_theta(text: str) -> float:
    if text == "perp":
        return math.pi / 2
    if text == "par":
        return 0.0
    try:
        return float(text)
    except ValueError as exc:
        raise ValueError(f"theta must be a number in radians, 'perp', or 'par'; got {text!r}") from exc


def load_config(path: str) -> dict:
    """Parse a plain-text 'key = value' file; unknown keys are an error."""
    values = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value', got {raw.strip()!r}")
            key, _, value = (part.strip() for part in line.partition("="))
            if key not in CONFIG_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown config key {key!r}")
            values[key] = value
    return values


def _nine_digits(value: float) -> float:
    return float(f"{value:.9g}")


def _emit(text: str, output_path: str | None):
    if output_path:
        with open(output_path, "w", encoding="utf-8") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _kv_text(pairs) -> str:
    width = max(len(k) for k, _ in pairs)
    return "\n".join(f"{k:<{width}}  {analysis._format_value(v)}" for k, v in pairs)


def _constants_payload(si: bool) -> dict:
    data = derived_constants()
    payload = {
        "constants": {
            "hbar_Js": CODATA2018.hbar,
            "c_m_per_s": CODATA2018.c,
            "eps0_C2_per_Jm": CODATA2018.eps0,
            "q_e_C": CODATA2018.q_e,
            "a0_m": CODATA2018.a0,
            "m_e_kg": CODATA2018.m_e,
        },
        "hydrogen": {
            "E1_eV": joule_to_ev(data.E1),
            "E2_eV": joule_to_ev(data.E2),
            "transition_energy_eV": joule_to_ev(data.E2 - data.E1),
            "k0_per_m": data.k0,
            "mu_eg_Cm": data.mu_eg,
            "gamma_Cm_per_J": data.gamma,
            "alpha_C2m2_per_J": data.alpha,
            "beta_C2m3_per_J": data.beta,
            "Ebar_eV": joule_to_ev(data.Ebar),
        },
    }
    if si:
        payload["hydrogen"]["E1_J"] = data.E1
        payload["hydrogen"]["E2_J"] = data.E2
        payload["hydrogen"]["Ebar_J"] = data.Ebar
    return payload


def cmd_constants(args) -> int:
    payload = _constants_payload(args.si)
    if args.format == "json":
        rounded = {
            section: {k: (_nine_digits(v) if isinstance(v, float) else v) for k, v in body.items()}
            for section, body in payload.items()
        }
        _emit(json.dumps(rounded, indent=2), args.output)
    else:
        pairs = [(k, v) for body in payload.values() for k, v in body.items()]
        _emit(_kv_text(pairs), args.output)
    return EXIT_OK


def _breakdown_row(r: float, theta: float, e_field: float, e_prime: float) -> dict:
    geometry = Geometry(r, theta)
    fields = FieldConfig(e_field, e_prime)
    breakdown = total_energy(geometry, fields)
    force = radial_force(geometry, fields)
    return {
        "r_m": r,
        "theta_rad": theta,
        "E_Vpm": fields.E,
        "Eprime_Vpm": fields.Eprime,
        "field_eV": joule_to_ev(breakdown.field_component),
        "vdw_eV": joule_to_ev(breakdown.vdw_component),
        "total_eV": joule_to_ev(breakdown.total),
        "force_N": force,
        "regime": breakdown.regime,
        "warnings": ";".join(breakdown.warnings),
    }


def _row_with_si(row: dict) -> dict:
    from .constants import ev_to_joule

    enriched = dict(row)
    for key in ("field_eV", "vdw_eV", "total_eV"):
        enriched[key.replace("_eV", "_J")] = ev_to_joule(row[key])
    return enriched


def _emit_rows(rows: list[dict], args) -> None:
    if args.format == "csv":
        _emit(analysis.rows_to_csv(rows), args.output)
    elif args.format == "json":
        rows = [_row_with_si(r) for r in rows] if args.si else rows
        payload = [
            {k: (_nine_digits(v) if isinstance(v, float) else v) for k, v in row.items()}
            for row in rows
        ]
        _emit(json.dumps(payload, indent=2), args.output)
    else:
        rows = [_row_with_si(r) for r in rows] if args.si else rows
        blocks = ["\n".join(f"{k:<12} {analysis._format_value(v)}" for k, v in row.items()) for row in rows]
        _emit("\n\n".join(blocks), args.output)


def cmd_energy(args) -> int:
    row = _breakdown_row(args.r, args.theta, args.field, args.field_prime)
    _emit_rows([row], args)
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.spec_file:
        spec = _sweep_spec_from_file(args.spec_file)
    else:
        field_min = args.field_min if args.field_min is not None else 1e5
        field_max = args.field_max if args.field_max is not None else field_min
        spec = analysis.SweepSpec(
            r_range=(args.r_min, args.r_max, args.r_count, args.r_spacing),
            theta=args.theta,
            field_range=(field_min, field_max, args.field_count, args.field_spacing),
            field_mode=args.field_mode,
        )
    rows = analysis.sweep(spec)
    _emit_rows(rows, args)
    return EXIT_OK


_SWEEP_FILE_KEYS = {
    "r_min": float,
    "r_max": float,
    "r_count": int,
    "r_spacing": str,
    "theta": parse_theta,
    "field_min": float,
    "field_max": float,
    "field_count": int,
    "field_spacing": str,
    "field_mode": str,
}


def _sweep_spec_from_file(path: str) -> analysis.SweepSpec:
    raw = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            stripped = line.split("#", 1)[0].strip()
            if not stripped:
                continue
            key, _, value = (part.strip() for part in stripped.partition("="))
            if key not in _SWEEP_FILE_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown sweep key {key!r}")
            raw[key] = _SWEEP_FILE_KEYS[key](value)
    missing = {"r_min", "r_max", "r_count"} - raw.keys()
    if missing:
        raise ValueError(f"sweep spec file is missing keys: {sorted(missing)}")
    return analysis.SweepSpec(
        r_range=(raw["r_min"], raw["r_max"], raw["r_count"], raw.get("r_spacing", "linear")),
        theta=raw.get("theta", math.pi / 2),
        field_range=(
            raw.get("field_min", 1e5),
            raw.get("field_max", raw.get("field_min", 1e5)),
            raw.get("field_count", 1),
            raw.get("field_spacing", "linear"),
        ),
        field_mode=raw.get("field_mode", "equal"),
    )


def _root_result_payload(result: analysis.RootResult, unit: str) -> list:
    return [
        (f"value_{unit}", result.value),
        ("residual", result.residual),
        ("bracket_lo", result.bracket[0]),
        ("bracket_hi", result.bracket[1]),
        ("stability", result.stability),
        ("iterations", result.iterations),
        ("flags", ";".join(result.flags)),
    ]


def _emit_root(result: analysis.RootResult, unit: str, args) -> None:
    pairs = _root_result_payload(result, unit)
    if args.format == "json":
        payload = {k: (_nine_digits(v) if isinstance(v, float) else v) for k, v in pairs}
        _emit(json.dumps(payload, indent=2), args.output)
    elif args.format == "csv":
        header = ",".join(k for k, _ in pairs)
        line = ",".join(analysis._format_value(v) for _, v in pairs)
        _emit(f"{header}\n{line}", args.output)
    else:
        _emit(_kv_text(pairs), args.output)


def cmd_crossover(args) -> int:
    result = analysis.crossover_field(args.r, args.theta)
    _emit_root(result, "Vpm", args)
    return EXIT_OK


def cmd_equilibrium(args) -> int:
    result = analysis.equilibrium_distance(
        args.theta, args.field, args.field_prime, (args.bracket_lo, args.bracket_hi)
    )
    _emit_root(result, "m", args)
    return EXIT_OK


def cmd_oracle_check(args) -> int:
    names = list(oracle.SUITES) if args.suite == "all" else [args.suite]
    reports = oracle.run_suites(names)
    if args.format == "json":
        payload = [dataclasses.asdict(r) for r in reports]
        _emit(json.dumps(payload, indent=2, default=str), args.output)
    else:
        lines = [f"{'suite':<10} {'status':<6} {'max_rel_error':<14} threshold"]
        for rep in reports:
            status = "pass" if rep.passed else "FAIL"
            lines.append(f"{rep.suite:<10} {status:<6} {rep.max_rel_error:<14.3e} {rep.threshold:.0e}")
        _emit("\n".join(lines), args.output)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_ORACLE


def _add_common_options(parser: argparse.ArgumentParser, within_subcommand: bool) -> None:
    # Global options are legal both before and after the subcommand; the
    # subcommand copies use SUPPRESS so they never clobber earlier values.
    default = argparse.SUPPRESS if within_subcommand else None
    parser.add_argument("--format", choices=("text", "csv", "json"), default=default)
    parser.add_argument("--output", default=default, help="write results to this file instead of stdout")
    parser.add_argument("--config", default=default, help="key = value file with defaults")
    parser.add_argument("--si", action="store_true", default=default, help="include SI (J) energies")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starkvdw",
        description="Dispersion interaction between ground-state hydrogen atoms in static fields.",
    )
    _add_common_options(parser, within_subcommand=False)

    sub = parser.add_subparsers(dest="command", required=True)

    constants_cmd = sub.add_parser("constants", help="print the constant set and derived hydrogen data")
    _add_common_options(constants_cmd, within_subcommand=True)

    energy = sub.add_parser("energy", help="energy breakdown and force at one point")
    _add_common_options(energy, within_subcommand=True)
    energy.add_argument("--r", type=float, required=True, help="separation in m")
    energy.add_argument("--theta", type=parse_theta, default=None)
    energy.add_argument("--field", type=float, default=None, help="field at atom A in V/m")
    energy.add_argument("--field-prime", type=float, default=None, help="field at atom B in V/m")

    sweep_cmd = sub.add_parser("sweep", help="tabulate energies over a grid")
    _add_common_options(sweep_cmd, within_subcommand=True)
    sweep_cmd.add_argument("--spec-file", default=None)
    sweep_cmd.add_argument("--r-min", type=float, default=None)
    sweep_cmd.add_argument("--r-max", type=float, default=None)
    sweep_cmd.add_argument("--r-count", type=int, default=None)
    sweep_cmd.add_argument("--r-spacing", choices=("linear", "log"), default="log")
    sweep_cmd.add_argument("--theta", type=parse_theta, default=None)
    sweep_cmd.add_argument("--field-min", type=float, default=None)
    sweep_cmd.add_argument("--field-max", type=float, default=None)
    sweep_cmd.add_argument("--field-count", type=int, default=1)
    sweep_cmd.add_argument("--field-spacing", choices=("linear", "log"), default="linear")
    sweep_cmd.add_argument("--field-mode", choices=("equal", "opposite"), default="equal")

    crossover = sub.add_parser("crossover", help="field strength matching the baseline magnitude")
    _add_common_options(crossover, within_subcommand=True)
    crossover.add_argument("--r", type=float, required=True)
    crossover.add_argument("--theta", type=parse_theta, default=None)

    equilibrium = sub.add_parser("equilibrium", help="distance of vanishing total force")
    _add_common_options(equilibrium, within_subcommand=True)
    equilibrium.add_argument("--theta", type=parse_theta, default=None)
    equilibrium.add_argument("--field", type=float, default=None)
    equilibrium.add_argument("--field-prime", type=float, default=None)
    equilibrium.add_argument("--bracket-lo", type=float, required=True)
    equilibrium.add_argument("--bracket-hi", type=float, required=True)

    oracle_cmd = sub.add_parser("oracle-check", help="run the independent validator suites")
    _add_common_options(oracle_cmd, within_subcommand=True)
    oracle_cmd.add_argument(
        "suite", nargs="?", default="all", choices=("specfun", "kspace", "matrix", "stark", "all")
    )
    return parser


def _apply_config(args) -> None:
    config = load_config(args.config) if args.config else {}
    defaults = {
        "field": 0.0,
        "field_prime": 0.0,
        "theta": math.pi / 2,
        "format": "text",
        "si": False,
    }

    def resolve(name, parse):
        current = getattr(args, name, None)
        if current is not None:
            return
        if name in config:
            setattr(args, name, parse(config[name]))
        elif hasattr(args, name):
            setattr(args, name, defaults[name])

    resolve("format", str)
    resolve("si", lambda v: v.lower() in ("1", "true", "yes", "on"))
    resolve("theta", parse_theta)
    resolve("field", float)
    resolve("field_prime", float)
    if args.format not in ("text", "csv", "json"):
        raise ValueError(f"format must be text, csv, or json; got {args.format!r}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "constants": cmd_constants,
        "energy": cmd_energy,
        "sweep": cmd_sweep,
        "crossover": cmd_crossover,
        "equilibrium": cmd_equilibrium,
        "oracle-check": cmd_oracle_check,
    }
    try:
        _apply_config(args)
        if args.command == "sweep" and not args.spec_file:
            missing = [n for n in ("r_min", "r_max", "r_count") if getattr(args, n) is None]
            if missing:
                raise ValueError(f"sweep requires --spec-file or {', '.join('--' + m.replace('_', '-') for m in missing)}")
        return handlers[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except analysis.NoSolutionError as exc:
        print(f"no solution: {exc}", file=sys.stderr)
        return EXIT_NO_SOLUTION
    except oracle.OracleFailure as exc:
        print(f"oracle failure: {exc}", file=sys.stderr)
        return EXIT_ORACLE


if __name__ == "__main__":
    sys.exit(main())
