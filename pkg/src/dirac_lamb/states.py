"""Quantum numbers of a hydrogenic state and its Dirac kinematics.

The Dirac parameters (k, g, u, v, w) depend only on (n, l, j) and Z alpha;
the Lamb shift never enters them.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from dirac_lamb.constants import PhysicalConstants

MAX_N = 50

L_LETTERS = "spdfg"

_LABEL_RE = re.compile(r"^([0-9]+)([spdfg])(1|3|5|7|9)/2$")


class StateError(ValueError):
    """Invalid or unparsable set of quantum numbers."""


class DomainError(ValueError):
    """Parameters outside the range where the closed-form solution exists."""


@dataclass(frozen=True, order=True)
class AtomicState:
    """Bound state (n, l, j) with j stored as the integer ``twice_j``."""

    n: int
    l: int
    twice_j: int

    def __post_init__(self):
        if self.n < 1:
            raise StateError(f"n must be >= 1, got {self.n}")
        if self.n > MAX_N:
            raise StateError(f"n = {self.n} exceeds the supported maximum {MAX_N}")
        if self.l < 0:
            raise StateError(f"l must be >= 0, got {self.l}")
        if self.l >= self.n:
            raise StateError(f"l = {self.l} must be smaller than n = {self.n}")
        if self.twice_j < 1:
            raise StateError(f"j = {self.twice_j}/2 is below 1/2")
        if self.twice_j not in (2 * self.l - 1, 2 * self.l + 1):
            raise StateError(
                f"j = {self.twice_j}/2 is not l +- 1/2 for l = {self.l}"
            )

    @classmethod
    def from_nlj(cls, n: int, l: int, j: float) -> AtomicState:
        twice_j = round(2 * j)
        if twice_j != 2 * j:
            raise StateError(f"j = {j} is not a half-integer")
        return cls(n, l, twice_j)

    @property
    def j(self) -> float:
        return self.twice_j / 2

    @property
    def label(self) -> str:
        letter = L_LETTERS[self.l] if self.l < len(L_LETTERS) else f"[l={self.l}]"
        return f"{self.n}{letter}{self.twice_j}/2"

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class DiracNumbers:
    """Lambda-free Dirac parameters of a state.

    Attributes
    ----------
    k : int
        Dirac quantum number, +-(j + 1/2).
    g : int
        Radial quantum number n - |k|, the Laguerre degree.
    u : float
        2 sqrt(k^2 - (Z alpha)^2).
    v : float
        Apparent principal quantum number sqrt((g + u/2)^2 + (Z alpha)^2).
    w : float
        (g + u/2) / v, the reduced energy excluding the Lamb shift.
    """

    k: int
    g: int
    u: float
    v: float
    w: float

    @property
    def w_plus(self) -> float:
        """W+ = sqrt((1 + w) / (1 - w))."""
        return math.sqrt((1 + self.w) / (1 - self.w))

    @property
    def w_minus(self) -> float:
        """W- = sqrt((1 - w) / (1 + w))."""
        return math.sqrt((1 - self.w) / (1 + self.w))


def parse_state(label: str) -> AtomicState:
    """Parse spectroscopic notation such as ``"2p1/2"``, ``"2p_{3/2}"`` or ``"1s_1/2"``."""
    cleaned = label.strip()
    for ch in "_{}":
        cleaned = cleaned.replace(ch, "")
    m = _LABEL_RE.match(cleaned)
    if m is None:
        raise StateError(f"malformed state label {label!r}; expected e.g. '2p3/2'")
    n, letter, numerator = int(m.group(1)), m.group(2), int(m.group(3))
    l = L_LETTERS.index(letter)
    if l >= n:
        raise StateError(f"{label!r}: l = {l} must be smaller than n = {n}")
    if numerator not in (2 * l - 1, 2 * l + 1):
        raise StateError(f"{label!r}: j = {numerator}/2 is not l +- 1/2 for l = {l}")
    return AtomicState(n, l, numerator)


def kappa(state: AtomicState) -> int:
    """Dirac k: -(j + 1/2) when j = l + 1/2, +(j + 1/2) when j = l - 1/2."""
    magnitude = (state.twice_j + 1) // 2
    return -magnitude if state.twice_j == 2 * state.l + 1 else magnitude


def dirac_numbers_za(state: AtomicState, za: float) -> DiracNumbers:
    """Dirac parameters for an explicit Z alpha, which may be zero."""
    if not 0 <= za < 1:
        raise DomainError(f"Z alpha = {za} outside [0, 1); supercritical or negative charge")
    k = kappa(state)
    g = state.n - abs(k)
    u = 2.0 * math.sqrt(k * k - za * za)
    half = g + u / 2
    v = math.hypot(half, za)
    return DiracNumbers(k=k, g=g, u=u, v=v, w=half / v)


def dirac_numbers(state: AtomicState, c: PhysicalConstants) -> DiracNumbers:
    return dirac_numbers_za(state, c.za)


def x_of_r(r, v: float):
    """Dimensionless radius x = 2r/v, r in units of a0."""
    return 2.0 * r / v
