"""Nondegenerate energy levels and transition frequencies."""

from __future__ import annotations

import math
from dataclasses import dataclass

from dirac_lamb.constants import PhysicalConstants, ev_to_mhz
from dirac_lamb.lamb import BetheTable, lamb_lambda
from dirac_lamb.states import AtomicState, dirac_numbers


@dataclass(frozen=True)
class EnergyLevel:
    """Binding energy of a state (eV, rest mass excluded) and the lambda it was built with."""

    state: AtomicState
    binding_energy: float
    lambda_used: float
    w_total: float


def w_minus_one(state: AtomicState, c: PhysicalConstants) -> float:
    """w - 1 = 1/sqrt(1 + q^2) - 1 with q = Z alpha / (g + u/2), without cancellation."""
    nums = dirac_numbers(state, c)
    q = c.za / (nums.g + nums.u / 2)
    s = math.sqrt(1.0 + q * q)
    return -q * q / (s * (1.0 + s))


def energy(
    state: AtomicState,
    c: PhysicalConstants,
    table: BetheTable | None = None,
    lam: float | None = None,
) -> EnergyLevel:
    """Energy level of ``state`` including the Lamb shift.

    By default lambda comes from :func:`lamb_lambda`; pass ``lam=0.0`` for the
    degenerate fine-structure level or any other value to override it.
    """
    if lam is None:
        lam = lamb_lambda(state, c, table).lam
    wm1 = w_minus_one(state, c)
    mc2 = c.reduced_rest_energy
    return EnergyLevel(
        state=state,
        binding_energy=mc2 * wm1 + mc2 * lam,
        lambda_used=lam,
        w_total=1.0 + wm1 + lam,
    )


def transition(
    a: AtomicState,
    b: AtomicState,
    c: PhysicalConstants,
    table: BetheTable | None = None,
    lam_zero: bool = False,
) -> float:
    """(E(a) - E(b)) / h in MHz."""
    lam = 0.0 if lam_zero else None
    ea = energy(a, c, table, lam).binding_energy
    eb = energy(b, c, table, lam).binding_energy
    return ev_to_mhz(ea - eb, c)
