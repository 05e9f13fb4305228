"""Hydrogen atomic data in the n <= 2 basis.

Energies, transition dipoles, static-field mixing coefficients, the
n=2-only polarizability and the composite coupling constant used by
every interaction formula.  The basis truncation at n = 2 is a hard
API boundary, not a configurable option: every stored constant assumes
it.

Sign conventions: the dipole operator is mu_z = q*z with q the
positive elementary charge, so the 2p-1s transition dipole is positive
along z.  The ground-state energy is pinned to the textbook value
E1 = -13.6057 eV rather than recomputed from the constant set, so all
derived numbers are reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from scipy.integrate import quad

from .constants import CODATA2018, PhysicalConstants, ev_to_joule

E1_EV = -13.6057

# Perturbative-validity policy for the external field: ratio of the
# quadratic Stark shift to the transition energy.
STARK_WARN_RATIO = 1e-6
STARK_HARD_RATIO = 1e-2


@dataclass(frozen=True)
class HydrogenData:
    """Derived hydrogen quantities shared by the interaction formulas (SI)."""

    E1: float      # J, ground-level energy (negative)
    E2: float      # J, first excited level (= E1/4)
    k0: float      # 1/m, wavenumber of twice the 1s-2p transition energy
    mu_eg: float   # C m, <210|mu_z|100>
    gamma: float   # C m / J, field-mixing scale (negative)
    alpha: float   # C^2 m^2 / J, static polarizability (n=2 only)
    beta: float    # C^2 m^3 / J, coupling constant of the closed-form energies
    Ebar: float    # J, average excitation energy


@dataclass(frozen=True)
class StateCoefficients:
    """Amplitudes of the two-atom ground state dressed by both static fields."""

    c_gg: float   # |100,100>
    c_eA: float   # |210,100>
    c_eB: float   # |100,210>
    c_ee: float   # |210,210>
    c_sA: float   # |200,100>
    c_sB: float   # |100,200>


@lru_cache(maxsize=None)
def derived_constants(consts: PhysicalConstants = CODATA2018) -> HydrogenData:
    """Populate HydrogenData from the stored constant set."""
    E1 = ev_to_joule(E1_EV)
    E2 = E1 / 4.0
    k0 = 2.0 * abs(E2 - E1) / (consts.hbar * consts.c)
    mu_eg = 2.0 ** 7.5 / 3.0 ** 5 * consts.q_e * consts.a0
    gamma = 2.0 ** 9 * consts.q_e * consts.a0 / (3.0 ** 6 * E1)
    alpha = 2.0 * mu_eg ** 2 / (3.0 * (E2 - E1))
    beta = 2.0 * gamma ** 2 * k0 ** 2 * mu_eg ** 2 / (math.pi ** 2 * consts.eps0)
    return HydrogenData(
        E1=E1,
        E2=E2,
        k0=k0,
        mu_eg=mu_eg,
        gamma=gamma,
        alpha=alpha,
        beta=beta,
        Ebar=(E2 - E1) / 2.0,
    )


def _validate_state(state) -> tuple[int, int, int]:
    try:
        n, l, m = (int(v) for v in state)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"state must be a (n, l, m) triple, got {state!r}") from exc
    if n < 1 or l < 0 or l >= n or abs(m) > l:
        raise ValueError(f"invalid quantum numbers (n, l, m) = {(n, l, m)}")
    if n > 2:
        raise ValueError(f"n = {n} states are outside the supported n <= 2 basis")
    return n, l, m


def _radial(n: int, l: int):
    # Dimensionless radial parts: R_nl(r) = a0^(-3/2) * Rt(u), u = r/a0.
    if (n, l) == (1, 0):
        return lambda u: 2.0 * math.exp(-u)
    if (n, l) == (2, 0):
        return lambda u: (2.0 - u) * math.exp(-u / 2.0) / (2.0 * math.sqrt(2.0))
    if (n, l) == (2, 1):
        return lambda u: u * math.exp(-u / 2.0) / (2.0 * math.sqrt(6.0))
    raise ValueError(f"no radial function for (n, l) = {(n, l)}")


def _theta_part(l: int, m: int):
    # Normalized polar parts: integral of Theta^2 sin(theta) dtheta = 1.
    if (l, abs(m)) == (0, 0):
        return lambda t: math.sqrt(0.5)
    if (l, abs(m)) == (1, 0):
        return lambda t: math.sqrt(1.5) * math.cos(t)
    if (l, abs(m)) == (1, 1):
        return lambda t: math.sqrt(0.75) * math.sin(t)
    raise ValueError(f"no angular function for (l, m) = {(l, m)}")


def transition_dipole(state1, state2, consts: PhysicalConstants = CODATA2018) -> float:
    """<state1| mu_z |state2> in C m, by numerical quadrature.

    Both states must lie in the n <= 2 basis.  The integrals are done
    numerically from the closed-form wavefunctions, independently of
    the stored ``mu_eg`` constant, so this routine doubles as its
    cross-check.
    """
    n1, l1, m1 = _validate_state(state1)
    n2, l2, m2 = _validate_state(state2)
    if m1 != m2:
        return 0.0  # mu_z is diagonal in m

    R1, R2 = _radial(n1, l1), _radial(n2, l2)
    T1, T2 = _theta_part(l1, m1), _theta_part(l2, m2)
    radial, _ = quad(lambda u: R1(u) * R2(u) * u ** 3, 0.0, 60.0, limit=200)
    angular, _ = quad(lambda t: T1(t) * math.cos(t) * T2(t) * math.sin(t), 0.0, math.pi, limit=200)
    return consts.q_e * consts.a0 * radial * angular


def stark_validity(E: float, data: HydrogenData | None = None) -> float:
    """Quadratic Stark shift magnitude over the transition energy.

    Callers compare against STARK_WARN_RATIO / STARK_HARD_RATIO.
    """
    data = data or derived_constants()
    E = float(E)
    if not math.isfinite(E):
        raise ValueError(f"field strength must be finite, got {E}")
    return 1.5 * data.alpha * E ** 2 / (data.E2 - data.E1)


def stark_ground_state(E: float, Eprime: float, data: HydrogenData | None = None) -> StateCoefficients:
    """Dressed two-atom ground-state amplitudes through second order in the fields."""
    data = data or derived_constants()
    ratio = stark_validity(max(abs(E), abs(Eprime)), data)
    if ratio > STARK_HARD_RATIO:
        raise ValueError(
            f"field exceeds the perturbative validity limit: Stark ratio {ratio:.3e} > {STARK_HARD_RATIO:.0e}"
        )
    g = data.gamma
    second = (3.0 / 2.0) ** 6 / math.sqrt(2.0)
    return StateCoefficients(
        c_gg=1.0 - g ** 2 * (E ** 2 + Eprime ** 2),
        c_eA=-math.sqrt(2.0) * g * E,
        c_eB=-math.sqrt(2.0) * g * Eprime,
        c_ee=2.0 * g ** 2 * E * Eprime,
        c_sA=-second * g ** 2 * E ** 2,
        c_sB=-second * g ** 2 * Eprime ** 2,
    )


def induced_dipole(E: float, data: HydrogenData | None = None) -> float:
    """Permanent dipole moment acquired by one atom in a static field (C m)."""
    data = data or derived_constants()
    return -2.0 * math.sqrt(2.0) * data.gamma * data.mu_eg * float(E)
