"""Dispersion interaction between ground-state hydrogen atoms in static electric fields.

Exact closed-form field-assisted energies, near/far asymptotics, the
unperturbed dispersion baseline, analytic forces, and crossover and
equilibrium analysis, validated throughout by independent numerical
oracles (quadrature representations, a regularized wavenumber-integral
evaluation, and exact diagonalization of the Stark-coupled basis).
"""

from .analysis import (
    NoSolutionError,
    RootResult,
    SweepSpec,
    crossover_field,
    equilibrium_distance,
    sweep,
)
from .constants import CODATA2018, PhysicalConstants, ev_to_joule, joule_to_ev
from .hydrogen import (
    HydrogenData,
    StateCoefficients,
    derived_constants,
    induced_dipole,
    stark_ground_state,
    stark_validity,
    transition_dipole,
)
from .interaction import (
    R_MIN,
    FieldConfig,
    Geometry,
    InteractionBreakdown,
    delta_E_asymptotic,
    delta_E_general,
    delta_E_par,
    delta_E_perp,
    radial_force,
    total_energy,
    vdw_baseline,
)
from .oracle import (
    OracleFailure,
    OracleReport,
    QuadratureSpec,
    aux_fg_quadrature,
    degenerate_pt_check,
    kspace_shift,
    matrix_element_check,
)
from .specfun import (
    RegimeThresholds,
    aux_f,
    aux_f_prime,
    aux_g,
    aux_g_prime,
    cosine_integral,
    sine_integral,
)

__version__ = "0.1.0"

__all__ = [
    "CODATA2018",
    "FieldConfig",
    "Geometry",
    "HydrogenData",
    "InteractionBreakdown",
    "NoSolutionError",
    "OracleFailure",
    "OracleReport",
    "PhysicalConstants",
    "QuadratureSpec",
    "R_MIN",
    "RegimeThresholds",
    "RootResult",
    "StateCoefficients",
    "SweepSpec",
    "aux_f",
    "aux_f_prime",
    "aux_fg_quadrature",
    "aux_g",
    "aux_g_prime",
    "cosine_integral",
    "crossover_field",
    "degenerate_pt_check",
    "delta_E_asymptotic",
    "delta_E_general",
    "delta_E_par",
    "delta_E_perp",
    "derived_constants",
    "equilibrium_distance",
    "ev_to_joule",
    "induced_dipole",
    "joule_to_ev",
    "kspace_shift",
    "matrix_element_check",
    "radial_force",
    "sine_integral",
    "stark_ground_state",
    "stark_validity",
    "sweep",
    "total_energy",
    "transition_dipole",
    "vdw_baseline",
]
