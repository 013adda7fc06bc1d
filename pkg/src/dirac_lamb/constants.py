"""Physical constants and the reduced-mass quantities derived from them.

Lengths everywhere in this package are measured in reduced Bohr radii
(a0 = hbar / (Z alpha c mu) = 1), energies in eV and frequencies in MHz.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from pathlib import Path

# CODATA 2018
ALPHA = 7.2973525693e-3
ELECTRON_REST_ENERGY_EV = 510998.95000
PROTON_ELECTRON_MASS_RATIO = 1836.15267343
PLANCK_H_EV_S = 4.135667696e-15

# Documentation only: the infinite-mass Bohr radius in metres. Internally a0 = 1.
BOHR_RADIUS_M = 5.29177210903e-11

_CONFIG_KEYS = {
    "alpha": "alpha",
    "electron_rest_energy_ev": "electron_rest_energy",
    "nuclear_mass_ratio": "nuclear_mass_ratio",
    "planck_h_ev_s": "planck_h",
    "Z": "Z",
}


@dataclass(frozen=True)
class PhysicalConstants:
    """Immutable bundle of the constants every calculation is parameterised by.

    Parameters
    ----------
    alpha : float
        Fine-structure constant.
    electron_rest_energy : float
        m c^2 in eV.
    nuclear_mass_ratio : float
        M/m, nuclear over electron mass.
    planck_h : float
        Planck constant in eV s.
    Z : int
        Nuclear charge number.
    """

    alpha: float = ALPHA
    electron_rest_energy: float = ELECTRON_REST_ENERGY_EV
    nuclear_mass_ratio: float = PROTON_ELECTRON_MASS_RATIO
    planck_h: float = PLANCK_H_EV_S
    Z: int = 1

    def __post_init__(self):
        for name in ("alpha", "electron_rest_energy", "nuclear_mass_ratio", "planck_h"):
            value = getattr(self, name)
            if not (value > 0 and math.isfinite(value)):
                raise ValueError(f"{name} must be positive and finite, got {value!r}")
        if isinstance(self.Z, bool) or int(self.Z) != self.Z or self.Z < 1:
            raise ValueError(f"Z must be a positive integer, got {self.Z!r}")
        object.__setattr__(self, "Z", int(self.Z))

    @property
    def za(self) -> float:
        """Z alpha."""
        return self.Z * self.alpha

    @property
    def mu_ratio(self) -> float:
        return reduced_mass_ratio(self)

    @property
    def reduced_rest_energy(self) -> float:
        """mu c^2 in eV."""
        return self.mu_ratio * self.electron_rest_energy

    def scaled_alpha(self, s: float) -> PhysicalConstants:
        """Copy with alpha replaced by s * alpha (used for nonrelativistic limits)."""
        return dataclasses.replace(self, alpha=s * self.alpha)


HYDROGEN = PhysicalConstants()


def reduced_mass_ratio(c: PhysicalConstants) -> float:
    """mu/m = 1 / (1 + m/M)."""
    return 1.0 / (1.0 + 1.0 / c.nuclear_mass_ratio)


def hartree_log_argument(c: PhysicalConstants) -> float:
    """Electron rest energy over the reduced Hartree energy, m / (mu (Z alpha)^2)."""
    return 1.0 / (reduced_mass_ratio(c) * c.za**2)


def ev_to_mhz(energy, c: PhysicalConstants = HYDROGEN):
    """Convert an energy in eV to a frequency in MHz via E/h."""
    return energy / c.planck_h * 1e-6


def load_constants(path) -> PhysicalConstants:
    """Read a ``key = value`` file and override the CODATA defaults.

    Blank lines and ``#`` comments are ignored. Recognised keys are
    ``alpha``, ``electron_rest_energy_ev``, ``nuclear_mass_ratio``,
    ``planck_h_ev_s`` and ``Z``.
    """
    overrides = {}
    text = Path(path).read_text()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or key not in _CONFIG_KEYS:
            raise ValueError(f"{path}:{lineno}: unrecognised line {raw!r}")
        overrides[_CONFIG_KEYS[key]] = int(value) if key == "Z" else float(value)
    return PhysicalConstants(**overrides)
