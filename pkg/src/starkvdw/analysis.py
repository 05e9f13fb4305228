"""Derived quantities: crossover fields, equilibrium distances, sweeps.

The crossover field is closed form because the field-assisted energy
is exactly bilinear in the two field strengths.  Equilibrium distances
are found by bracketing root solving on the analytic radial force,
with brackets split at the baseline branch switch k0*r = 1 so the
solver never iterates across that documented discontinuity.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from .constants import joule_to_ev
from .hydrogen import HydrogenData, derived_constants
from .interaction import (
    FieldConfig,
    Geometry,
    delta_E_general,
    radial_force,
    total_energy,
    vdw_baseline,
)

CSV_COLUMNS = (
    "r_m",
    "theta_rad",
    "E_Vpm",
    "Eprime_Vpm",
    "field_eV",
    "vdw_eV",
    "total_eV",
    "force_N",
    "regime",
    "warnings",
)


class NoSolutionError(Exception):
    """Requested root or crossover does not exist for this configuration."""


@dataclass(frozen=True)
class SweepSpec:
    """Grid description for a parameter sweep.

    Ranges are (min, max, count, spacing) with spacing 'linear' or
    'log'; ``field_mode`` fixes E' = +E ('equal') or E' = -E
    ('opposite').  Grid values are snapped to 9 significant digits so
    serialized tables round-trip exactly through the CSV/JSON formats.
    """

    r_range: tuple
    theta: float = math.pi / 2
    field_range: tuple = (1e5, 1e5, 1)
    field_mode: str = "equal"
    outputs: tuple = ("field_component", "vdw", "total", "force", "regime")

    def __post_init__(self):
        _validate_range(self.r_range, "r_range")
        _validate_range(self.field_range, "field_range")
        if self.field_mode not in ("equal", "opposite"):
            raise ValueError(f"field_mode must be 'equal' or 'opposite', got {self.field_mode!r}")
        known = {"field_component", "vdw", "total", "force", "regime"}
        unknown = set(self.outputs) - known
        if unknown:
            raise ValueError(f"unknown sweep outputs: {sorted(unknown)}")


@dataclass(frozen=True)
class RootResult:
    """A solved root with enough context to audit it."""

    value: float
    residual: float
    bracket: tuple
    stability: str = "n/a"
    iterations: int = 0
    flags: tuple = field(default_factory=tuple)


def _validate_range(rng, name: str):
    if len(rng) not in (3, 4):
        raise ValueError(f"{name} must be (min, max, count[, spacing])")
    lo, hi, count = float(rng[0]), float(rng[1]), int(rng[2])
    spacing = rng[3] if len(rng) == 4 else "linear"
    if count < 1:
        raise ValueError(f"{name} count must be >= 1")
    if count > 1 and not (hi > lo):
        raise ValueError(f"{name} needs max > min for count > 1")
    if spacing not in ("linear", "log"):
        raise ValueError(f"{name} spacing must be 'linear' or 'log', got {spacing!r}")
    if spacing == "log" and lo <= 0:
        raise ValueError(f"{name} log spacing requires positive endpoints")


def _grid(rng) -> np.ndarray:
    lo, hi, count = float(rng[0]), float(rng[1]), int(rng[2])
    spacing = rng[3] if len(rng) == 4 else "linear"
    if count == 1:
        values = np.array([lo])
    elif spacing == "log":
        values = np.geomspace(lo, hi, count)
    else:
        values = np.linspace(lo, hi, count)
    # snap to 9 significant digits so serialization is lossless
    return np.array([float(f"{v:.9g}") for v in values])


def crossover_field(r: float, theta: float, data: HydrogenData | None = None) -> RootResult:
    """Field strength E = E' at which |field term| equals |baseline|.

    Exactly quadratic in the common field strength, so the root is
    closed form and carries zero solver iterations.
    """
    data = data or derived_constants()
    unit = delta_E_general(r, theta, 1.0, 1.0, data)
    scale = abs(delta_E_general(r, math.pi / 2, 1.0, 1.0, data)) + abs(
        delta_E_general(r, 0.0, 1.0, 1.0, data)
    )
    if abs(unit) < 1e-12 * scale:
        raise NoSolutionError(
            f"field term vanishes at theta = {theta:.6f} for r = {r:.3e} m; no crossover exists"
        )
    vdw, _ = vdw_baseline(r, data)
    value = math.sqrt(abs(vdw) / abs(unit))
    residual = abs(abs(delta_E_general(r, theta, value, value, data)) - abs(vdw))
    return RootResult(
        value=value,
        residual=residual,
        bracket=(value, value),
        stability="n/a",
        iterations=0,
    )


def _force_stability(force, r_star: float) -> str:
    # dF/dr > 0 at the root means displacement grows: unstable.
    step = 1e-5 * r_star
    slope = (force(r_star + step) - force(r_star - step)) / (2.0 * step)
    return "unstable" if slope > 0 else "stable"


def equilibrium_distance(
    theta: float,
    E: float,
    Eprime: float,
    bracket: tuple,
    data: HydrogenData | None = None,
    rtol: float = 1e-9,
) -> RootResult:
    """Distance at which the total radial force vanishes, by bracketing.

    The bracket is split at the baseline branch switch; if the only
    sign change straddles that discontinuity the result is returned
    flagged instead of solved.
    """
    data = data or derived_constants()
    lo, hi = float(bracket[0]), float(bracket[1])
    if not (0 < lo < hi):
        raise ValueError(f"bracket must satisfy 0 < lo < hi, got {bracket}")
    fields = FieldConfig(E, Eprime)

    def force(r: float) -> float:
        return radial_force(Geometry(r, theta), fields, data)

    r_switch = 1.0 / data.k0
    if lo < r_switch < hi:
        segments = [(lo, r_switch * (1.0 - 1e-12)), (r_switch * (1.0 + 1e-12), hi)]
    else:
        segments = [(lo, hi)]

    for seg_lo, seg_hi in segments:
        f_lo, f_hi = force(seg_lo), force(seg_hi)
        if f_lo == 0.0:
            return RootResult(seg_lo, 0.0, (seg_lo, seg_hi), _force_stability(force, seg_lo), 0)
        if f_hi == 0.0:
            return RootResult(seg_hi, 0.0, (seg_lo, seg_hi), _force_stability(force, seg_hi), 0)
        if f_lo * f_hi < 0:
            root, info = brentq(
                force, seg_lo, seg_hi, xtol=1e-16 * seg_hi, rtol=rtol, full_output=True
            )
            return RootResult(
                value=float(root),
                residual=abs(force(float(root))),
                bracket=(seg_lo, seg_hi),
                stability=_force_stability(force, float(root)),
                iterations=int(info.iterations),
            )

    if len(segments) == 2:
        inner_hi = segments[0][1]
        outer_lo = segments[1][0]
        if force(inner_hi) * force(outer_lo) < 0:
            # sign change sits exactly on the baseline model discontinuity
            return RootResult(
                value=r_switch,
                residual=min(abs(force(inner_hi)), abs(force(outer_lo))),
                bracket=(inner_hi, outer_lo),
                stability="n/a",
                iterations=0,
                flags=("vdw_branch_switch",),
            )
    raise NoSolutionError(
        f"no force sign change inside bracket ({lo:.3e}, {hi:.3e}) m for "
        f"theta = {theta:.6f}, E = {E:.3e}, E' = {Eprime:.3e}"
    )


def sweep(spec: SweepSpec, data: HydrogenData | None = None) -> list[dict]:
    """Dense table over the grid, r-major then field, deterministic order."""
    data = data or derived_constants()
    rows = []
    theta = float(f"{spec.theta:.9g}")
    sign = 1.0 if spec.field_mode == "equal" else -1.0
    for r in _grid(spec.r_range):
        geometry = Geometry(float(r), theta)
        for e_val in _grid(spec.field_range):
            fields = FieldConfig(float(e_val), sign * float(e_val))
            breakdown = total_energy(geometry, fields, data)
            force = radial_force(geometry, fields, data)
            rows.append(
                {
                    "r_m": float(r),
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
            )
    return rows


def _format_value(value):
    if isinstance(value, float):
        return f"{value:.9g}"
    return str(value)


def rows_to_csv(rows: list[dict]) -> str:
    """Serialize sweep rows with the fixed column schema, 9 significant digits."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([_format_value(row[col]) for col in CSV_COLUMNS])
    return buffer.getvalue()


def rows_to_json(rows: list[dict]) -> str:
    """Serialize sweep rows as a JSON array with the same keys as the CSV."""
    payload = [
        {col: (float(_format_value(row[col])) if isinstance(row[col], float) else row[col]) for col in CSV_COLUMNS}
        for row in rows
    ]
    return json.dumps(payload, indent=2)
