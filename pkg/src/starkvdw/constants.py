"""Physical constants (CODATA 2018) and unit conversions.

All library APIs work in SI internally; electron volts appear only at
presentation boundaries.  The values are stored literally rather than
recomputed from each other, so every derived number in the test suite
is reproducible bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class PhysicalConstants:
    """CODATA 2018 constant set in SI units."""

    hbar: float = 1.054571817e-34    # J s
    c: float = 2.99792458e8          # m/s
    eps0: float = 8.8541878128e-12   # C^2/(J m)
    q_e: float = 1.602176634e-19     # C, elementary charge (positive)
    a0: float = 5.29177210903e-11    # m, Bohr radius
    m_e: float = 9.1093837015e-31    # kg

    def __post_init__(self):
        for name in ("hbar", "c", "eps0", "q_e", "a0", "m_e"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ValueError(f"constant {name} must be finite and positive, got {value}")


CODATA2018 = PhysicalConstants()


def ev_to_joule(x: float) -> float:
    """Convert an energy from eV to J."""
    return x * CODATA2018.q_e


def joule_to_ev(x: float) -> float:
    """Convert an energy from J to eV."""
    return x / CODATA2018.q_e
