"""Nondegenerate Dirac hydrogen atom with the Lamb shift."""

from dirac_lamb.constants import HYDROGEN, PhysicalConstants, ev_to_mhz, hartree_log_argument, reduced_mass_ratio
from dirac_lamb.lamb import BetheLogMissing, BetheTable, LambBreakdown, angular_expectation, bethe_log, lamb_lambda
from dirac_lamb.quad import QuadResult, integrate_semi_infinite, norm_check
from dirac_lamb.radial import (
    RadialSolution,
    laguerre,
    normalization,
    radial_eval,
    radial_probability,
    schrodinger_radial,
    solve,
)
from dirac_lamb.spectra import EnergyLevel, energy, transition
from dirac_lamb.states import AtomicState, DiracNumbers, DomainError, StateError, dirac_numbers, kappa, parse_state, x_of_r

__all__ = [
    "HYDROGEN",
    "AtomicState",
    "BetheLogMissing",
    "BetheTable",
    "DiracNumbers",
    "DomainError",
    "EnergyLevel",
    "LambBreakdown",
    "PhysicalConstants",
    "QuadResult",
    "RadialSolution",
    "StateError",
    "angular_expectation",
    "bethe_log",
    "dirac_numbers",
    "energy",
    "ev_to_mhz",
    "hartree_log_argument",
    "integrate_semi_infinite",
    "kappa",
    "lamb_lambda",
    "laguerre",
    "norm_check",
    "normalization",
    "parse_state",
    "radial_eval",
    "radial_probability",
    "reduced_mass_ratio",
    "schrodinger_radial",
    "solve",
    "transition",
    "x_of_r",
]
