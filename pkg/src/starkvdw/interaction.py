"""Field-assisted dispersion energies, the unperturbed baseline, and forces.

The closed-form field-assisted energies are exact at every distance;
regime labels (near/intermediate/far in x = k0*r) are attached for
reporting only.  The unperturbed baseline is a piecewise asymptotic
model (r^-6 near zone, r^-7 far zone) switched at k0*r = 1, with a
documented discontinuity there; consumers are warned inside
k0*r in [0.1, 10] where that model carries error.

Geometry: theta is the angle between the interatomic axis and the
common field axis z.  The general-angle energy reduces to
sin^2(theta) * perpendicular + cos^2(theta) * parallel, which follows
from splitting the tensor derivative of f(k0 r)/r into transverse and
longitudinal parts; the k-space oracle validates it at general angles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .constants import CODATA2018
from .hydrogen import (
    STARK_HARD_RATIO,
    STARK_WARN_RATIO,
    HydrogenData,
    derived_constants,
    stark_validity,
)
from .specfun import DEFAULT_THRESHOLDS, RegimeThresholds, _aux_pair, classify_regime

# Below ~10 Bohr radii the point-dipole model of the atoms fails.
R_MIN = 10.0 * CODATA2018.a0

# vdW baseline branch switch and the window flagged as model-limited.
VDW_SWITCH_X = 1.0
VDW_FLAG_WINDOW = (0.1, 10.0)


def _check_r(r: float) -> float:
    r = float(r)
    if not math.isfinite(r) or r < R_MIN:
        raise ValueError(
            f"r must be at least 10*a0 = {R_MIN:.6e} m (dipole approximation), got {r}"
        )
    return r


def _check_theta(theta: float) -> float:
    theta = float(theta)
    if not math.isfinite(theta) or not (0.0 <= theta <= math.pi):
        raise ValueError(f"theta must lie in [0, pi], got {theta}")
    return theta


def _check_field(E: float, name: str = "field") -> float:
    E = float(E)
    if not math.isfinite(E):
        raise ValueError(f"{name} must be finite, got {E}")
    return E


@dataclass(frozen=True)
class Geometry:
    """Separation r (m) and angle theta (rad) between atom axis and field axis."""

    r: float
    theta: float = math.pi / 2

    def __post_init__(self):
        _check_r(self.r)
        _check_theta(self.theta)


@dataclass(frozen=True)
class FieldConfig:
    """Signed static field strengths along +z at atom A and atom B (V/m)."""

    E: float
    Eprime: float

    def __post_init__(self):
        _check_field(self.E, "E")
        _check_field(self.Eprime, "Eprime")


@dataclass(frozen=True)
class InteractionBreakdown:
    """Energy decomposition in J plus regime label and validity warnings."""

    field_component: float
    vdw_component: float
    total: float
    regime: str
    warnings: tuple = field(default_factory=tuple)


# --- dimensionless kernels (energy = beta * E * E' * kernel(x) / r) ---

def perp_kernel(x: float) -> float:
    """Exact kernel for atoms aligned perpendicular to the field axis."""
    f, g = _aux_pair(x)
    return f * (1.0 / x ** 2 - 1.0) + (g + 1.0) / x


def par_kernel(x: float) -> float:
    """Exact kernel for atoms aligned along the field axis."""
    f, g = _aux_pair(x)
    return -2.0 * (f / x ** 2 + g / x)


def general_kernel(x: float, theta: float) -> float:
    """sin^2(theta) * perpendicular + cos^2(theta) * parallel."""
    st2 = math.sin(theta) ** 2
    return st2 * perp_kernel(x) + (1.0 - st2) * par_kernel(x)


def perp_kernel_prime(x: float) -> float:
    """d/dx of perp_kernel, from f' = -g and g' = f - 1/x."""
    f, g = _aux_pair(x)
    return g - 2.0 * g / x ** 2 - 2.0 * f / x ** 3 + f / x - 2.0 / x ** 2


def par_kernel_prime(x: float) -> float:
    """d/dx of par_kernel."""
    f, g = _aux_pair(x)
    return -2.0 * f / x + 4.0 * g / x ** 2 + 4.0 * f / x ** 3 + 2.0 / x ** 2


def asymptotic_kernel(x: float, orientation: str, regime: str) -> float:
    """Leading near/far-zone kernels: pi/(2x^2), 4/x^3 and -pi/x^2, -4/x^3."""
    if orientation not in ("perp", "par"):
        raise ValueError(f"orientation must be 'perp' or 'par', got {orientation!r}")
    if regime not in ("near", "far"):
        raise ValueError(f"regime must be 'near' or 'far', got {regime!r}")
    if orientation == "perp":
        return math.pi / (2.0 * x ** 2) if regime == "near" else 4.0 / x ** 3
    return -math.pi / x ** 2 if regime == "near" else -4.0 / x ** 3


# --- SI-level field-assisted energies ---

def delta_E_perp(r: float, E: float, Eprime: float, data: HydrogenData | None = None) -> float:
    """Exact field-assisted energy (J) for atoms perpendicular to the field."""
    data = data or derived_constants()
    r = _check_r(r)
    return data.beta * _check_field(E) * _check_field(Eprime) * perp_kernel(data.k0 * r) / r


def delta_E_par(r: float, E: float, Eprime: float, data: HydrogenData | None = None) -> float:
    """Exact field-assisted energy (J) for atoms aligned along the field."""
    data = data or derived_constants()
    r = _check_r(r)
    return data.beta * _check_field(E) * _check_field(Eprime) * par_kernel(data.k0 * r) / r


def delta_E_general(
    r: float, theta: float, E: float, Eprime: float, data: HydrogenData | None = None
) -> float:
    """Exact field-assisted energy (J) at a general alignment angle."""
    data = data or derived_constants()
    r = _check_r(r)
    theta = _check_theta(theta)
    kern = general_kernel(data.k0 * r, theta)
    return data.beta * _check_field(E) * _check_field(Eprime) * kern / r


def delta_E_asymptotic(
    r: float,
    orientation: str,
    regime: str,
    E: float,
    Eprime: float,
    data: HydrogenData | None = None,
) -> float:
    """Leading near- or far-zone approximation of the field-assisted energy (J)."""
    data = data or derived_constants()
    r = _check_r(r)
    kern = asymptotic_kernel(data.k0 * r, orientation, regime)
    return data.beta * _check_field(E) * _check_field(Eprime) * kern / r


# --- unperturbed dispersion baseline ---

def vdw_coefficients(data: HydrogenData | None = None) -> tuple[float, float]:
    """(C6, C7) of the baseline model: -C6/r^6 near zone, -C7/r^7 far zone."""
    data = data or derived_constants()
    eps0 = CODATA2018.eps0
    c6 = 3.0 * data.Ebar * data.alpha ** 2 / (64.0 * math.pi ** 2 * eps0 ** 2)
    c7 = 23.0 * CODATA2018.hbar * CODATA2018.c * data.alpha ** 2 / (64.0 * math.pi ** 3 * eps0 ** 2)
    return c6, c7


def vdw_model_energy(r: float, data: HydrogenData | None = None) -> tuple[float, str]:
    """Piecewise baseline energy (J, branch) without the distance guard."""
    data = data or derived_constants()
    c6, c7 = vdw_coefficients(data)
    if data.k0 * r <= VDW_SWITCH_X:
        return -c6 / r ** 6, "near"
    return -c7 / r ** 7, "far"


def vdw_baseline(r: float, data: HydrogenData | None = None) -> tuple[float, str]:
    """Unperturbed dispersion energy (J) with its regime annotation."""
    data = data or derived_constants()
    r = _check_r(r)
    return vdw_model_energy(r, data)


# --- totals and forces ---

def _check_stark_hard(fields: FieldConfig, data: HydrogenData) -> float:
    ratio = stark_validity(max(abs(fields.E), abs(fields.Eprime)), data)
    if ratio > STARK_HARD_RATIO:
        raise ValueError(
            f"field exceeds the perturbative validity limit: Stark ratio {ratio:.3e} > {STARK_HARD_RATIO:.0e}"
        )
    return ratio


def total_energy(
    geometry: Geometry,
    fields: FieldConfig,
    data: HydrogenData | None = None,
    thresholds: RegimeThresholds = DEFAULT_THRESHOLDS,
) -> InteractionBreakdown:
    """Field-assisted component plus baseline, with regime and validity flags."""
    data = data or derived_constants()
    x = data.k0 * geometry.r
    stark_ratio = _check_stark_hard(fields, data)
    field_component = delta_E_general(geometry.r, geometry.theta, fields.E, fields.Eprime, data)
    vdw_component, _ = vdw_baseline(geometry.r, data)

    warnings = []
    if VDW_FLAG_WINDOW[0] <= x <= VDW_FLAG_WINDOW[1]:
        warnings.append("vdw_baseline_intermediate")
    if stark_ratio > STARK_WARN_RATIO:
        warnings.append("stark_soft_limit")

    return InteractionBreakdown(
        field_component=field_component,
        vdw_component=vdw_component,
        total=field_component + vdw_component,
        regime=classify_regime(x, thresholds),
        warnings=tuple(warnings),
    )


def radial_force(
    geometry: Geometry, fields: FieldConfig, data: HydrogenData | None = None
) -> float:
    """-d(total)/dr in N; positive values are repulsive.

    Uses the analytic kernel derivatives; exactly at the baseline
    branch switch k0*r = 1 the near-side branch applies.
    """
    data = data or derived_constants()
    _check_stark_hard(fields, data)
    r, theta = geometry.r, geometry.theta
    x = data.k0 * r
    st2 = math.sin(theta) ** 2
    kern = st2 * perp_kernel(x) + (1.0 - st2) * par_kernel(x)
    kern_prime = st2 * perp_kernel_prime(x) + (1.0 - st2) * par_kernel_prime(x)
    # d/dr [beta E E' kern(k0 r)/r] = beta E E' (x kern' - kern)/r^2
    field_slope = data.beta * fields.E * fields.Eprime * (x * kern_prime - kern) / r ** 2

    c6, c7 = vdw_coefficients(data)
    if x <= VDW_SWITCH_X:
        vdw_slope = 6.0 * c6 / r ** 7
    else:
        vdw_slope = 7.0 * c7 / r ** 8
    return -(field_slope + vdw_slope)
