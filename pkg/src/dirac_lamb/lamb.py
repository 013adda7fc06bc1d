"""Dimensionless Lamb-shift parameter and its per-contribution ledger.

All contributions share the prefactor

    P = 4 alpha (Z alpha)^4 mu^2 / (3 pi n^3 m^2)

and are converted to MHz through lambda * mu c^2 / h.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Mapping

from dirac_lamb.constants import PhysicalConstants, ev_to_mhz
from dirac_lamb.states import AtomicState

# Ordered as the columns of the contribution table.
CONTRIBUTIONS = (
    "uehling",
    "brem_f1",
    "f2_delta",
    "f2_clj",
    "bethe",
    "ue2",
    "vert2",
)

_UEHLING = -1.0 / 5.0
_F2_DELTA = 3.0 / 8.0
# bremsstrahlung + F1 without the Uehling and F2 pieces: 5/6 - 3/8 + log
_BREM_F1_CONST = 5.0 / 6.0 - 3.0 / 8.0
_UE2 = 5.0 / 192.0
_VERT2 = 1.0 + 11.0 / 128.0 - math.log(2.0) / 2.0

DEFAULT_BETHE = {
    (1, 0): 2.984128555,
    (2, 0): 2.811769893,
    (2, 1): -0.030016708,
}


class BetheLogMissing(LookupError):
    """No Bethe logarithm is tabulated for the requested (n, l)."""

    def __init__(self, n, l):
        super().__init__(f"Bethe logarithm not tabulated for n={n}, l={l}")
        self.n = n
        self.l = l


@dataclass(frozen=True)
class BetheTable:
    """Bethe logarithms keyed by (n, l), each tagged with provenance 'published' or 'user'."""

    entries: Mapping[tuple[int, int], float]
    provenance: Mapping[tuple[int, int], str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "entries", MappingProxyType(dict(self.entries)))
        prov = {key: self.provenance.get(key, "user") for key in self.entries}
        object.__setattr__(self, "provenance", MappingProxyType(prov))

    @classmethod
    def default(cls) -> BetheTable:
        return cls(DEFAULT_BETHE, {key: "published" for key in DEFAULT_BETHE})

    def extended(self, extra: Mapping[tuple[int, int], float]) -> BetheTable:
        entries = dict(self.entries)
        prov = dict(self.provenance)
        for key, value in extra.items():
            entries[key] = float(value)
            prov[key] = "user"
        return BetheTable(entries, prov)

    def __contains__(self, key):
        return key in self.entries


def load_bethe_table(path, base: BetheTable | None = None) -> BetheTable:
    """Extend ``base`` (default table) with whitespace-separated ``n l beta`` lines."""
    extra = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(f"{path}:{lineno}: expected 'n l beta', got {raw!r}")
        extra[(int(parts[0]), int(parts[1]))] = float(parts[2])
    return (base or BetheTable.default()).extended(extra)


def bethe_log(n: int, l: int, table: BetheTable | None = None) -> float:
    table = table or BetheTable.default()
    try:
        return table.entries[(n, l)]
    except KeyError:
        raise BetheLogMissing(n, l) from None


def angular_expectation(l: int, j: float, mu_ratio: float = 1.0) -> float:
    """Leading spin-orbit expectation c_lj; exactly zero for s states.

    ``mu_ratio`` is mu/m, entering as the 3m/(8 mu) prefactor.
    """
    if l == 0:
        return 0.0
    num = j * (j + 1) - l * (l + 1) - 0.75
    return 3.0 / (8.0 * mu_ratio) * num / ((2 * l + 1) * l * (l + 1))


@dataclass(frozen=True)
class LambBreakdown:
    """Lamb shift of one state, split by contribution, in MHz, plus the dimensionless total."""

    state: AtomicState
    uehling_mhz: float
    brem_f1_mhz: float
    f2_delta_mhz: float
    f2_clj_mhz: float
    bethe_mhz: float
    ue2_mhz: float
    vert2_mhz: float
    total_mhz: float
    lam: float

    def contributions(self) -> dict[str, float]:
        return {name: getattr(self, f"{name}_mhz") for name in CONTRIBUTIONS}


def lamb_prefactor(n: int, c: PhysicalConstants) -> float:
    mu = c.mu_ratio
    return 4.0 * c.alpha * c.za**4 * mu**2 / (3.0 * math.pi * n**3)


def lamb_terms(state: AtomicState, c: PhysicalConstants, table: BetheTable | None = None) -> dict[str, float]:
    """Dimensionless contributions to lambda, keyed like CONTRIBUTIONS."""
    beta = bethe_log(state.n, state.l, table)
    p = lamb_prefactor(state.n, c)
    terms = dict.fromkeys(CONTRIBUTIONS, 0.0)
    if state.l == 0:
        log_arg = 1.0 / (c.mu_ratio * c.za**2)
        two_photon = 3.0 * math.pi * c.za
        terms["uehling"] = p * _UEHLING
        terms["brem_f1"] = p * (_BREM_F1_CONST + math.log(log_arg))
        terms["f2_delta"] = p * _F2_DELTA
        terms["ue2"] = p * two_photon * _UE2
        terms["vert2"] = p * two_photon * _VERT2
    else:
        terms["f2_clj"] = p * angular_expectation(state.l, state.j, c.mu_ratio)
    terms["bethe"] = -p * beta
    return terms


def lamb_lambda(state: AtomicState, c: PhysicalConstants, table: BetheTable | None = None) -> LambBreakdown:
    """Assemble lambda and its MHz ledger for ``state``.

    Raises
    ------
    BetheLogMissing
        If ``table`` has no entry for (n, l).
    """
    terms = lamb_terms(state, c, table)
    lam = math.fsum(terms.values())
    to_mhz = ev_to_mhz(c.reduced_rest_energy, c)
    mhz = {name: value * to_mhz for name, value in terms.items()}
    return LambBreakdown(
        state=state,
        **{f"{name}_mhz": value for name, value in mhz.items()},
        total_mhz=math.fsum(mhz.values()),
        lam=lam,
    )
