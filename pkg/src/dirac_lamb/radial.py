"""Dirac radial eigenfunctions in closed form.

    R+- = N+- sqrt(exp(-x) x^(u-2)) [ +-(v-k) L_g^u(x) - (g+u) L_{g-1}^u(x) ]

with x = 2r/v and

    N+- = sqrt( 2 (1 +- w) Gamma(1+g) / (v^4 (v-k) Gamma(1+g+u)) ),

lengths in units of a0. The Lamb shift does not appear anywhere here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from dirac_lamb.constants import PhysicalConstants
from dirac_lamb.states import AtomicState, DiracNumbers, DomainError, StateError, dirac_numbers


def laguerre(g: int, u: float, x):
    """Generalized Laguerre polynomial L_g^u(x) by upward recurrence.

    L_{-1}^u is defined as 0 so the two-term bracket of the radial
    function is well defined for g = 0. Accepts scalar or array ``x``.
    """
    if g < -1:
        raise DomainError(f"Laguerre degree must be >= -1, got {g}")
    x = np.asarray(x, dtype=float)
    prev = np.zeros_like(x)
    if g == -1:
        return prev if prev.ndim else float(prev)
    cur = np.ones_like(x)
    for m in range(g):
        prev, cur = cur, ((2 * m + u + 1 - x) * cur - (m + u) * prev) / (m + 1)
    return cur if cur.ndim else float(cur)


def laguerre_derivative_identity_residual(g: int, u: float, x):
    """x dL_g^u/dx - [g L_g^u - (g+u) L_{g-1}^u], using dL_g^u/dx = -L_{g-1}^{u+1}."""
    lhs = -x * laguerre(g - 1, u + 1, x)
    rhs = g * laguerre(g, u, x) - (g + u) * laguerre(g - 1, u, x)
    return lhs - rhs


def _normalization(nums: DiracNumbers, shift_f: float = 0.0) -> tuple[float, float]:
    v, k, g, u, w = nums.v, nums.k, nums.g, nums.u, nums.w
    if v - k <= 0:
        raise DomainError(
            f"v - k = {v - k} is not positive; use schrodinger_radial for the alpha -> 0 limit"
        )
    vf = v + shift_f
    if vf <= 0:
        raise DomainError(f"shifted scale v + f = {vf} must be positive")
    log_gamma = math.lgamma(1 + g) - math.lgamma(1 + g + u)
    base = 2.0 * math.exp(log_gamma) / (v * vf**3 * (v - k))
    return math.sqrt(base * (1 + w)), math.sqrt(base * (1 - w))


def normalization(state: AtomicState, c: PhysicalConstants) -> tuple[float, float]:
    """Large and small component normalization factors (N+, N-) in a0^(-3/2)."""
    return _normalization(dirac_numbers(state, c))


@dataclass(frozen=True)
class RadialSolution:
    state: AtomicState
    numbers: DiracNumbers
    n_plus: float
    n_minus: float
    shift_f: float = 0.0

    @classmethod
    def from_numbers(cls, state: AtomicState, numbers: DiracNumbers, shift_f: float = 0.0) -> RadialSolution:
        n_plus, n_minus = _normalization(numbers, shift_f)
        return cls(state, numbers, n_plus, n_minus, shift_f)

    def __call__(self, r):
        return radial_eval(self, r)


def solve(state: AtomicState, c: PhysicalConstants, shift_f: float = 0.0) -> RadialSolution:
    """Build the radial solution of ``state``.

    ``shift_f`` is a signed offset applied to the length scale, x = 2r/(v+f),
    with v^4 replaced by v (v+f)^3 in the normalization. Pass a negative
    value for the minus branch. Unit norm is not guaranteed when f != 0.
    """
    return RadialSolution.from_numbers(state, dirac_numbers(state, c), shift_f)


def _envelope(x, u):
    # sqrt(exp(-x) x^(u-2)), finite at x = 0 only for u >= 2
    with np.errstate(divide="ignore"):
        logx = np.log(x)
    out = np.exp((-x + (u - 2.0) * logx) / 2.0)
    if u == 2.0:
        out = np.where(x == 0, 1.0, out)
    return out


def radial_eval(sol: RadialSolution, r):
    """Large and small radial components (R+, R-) at radius ``r`` (a0 units).

    Raises
    ------
    ValueError
        For negative ``r``.
    DomainError
        At ``r = 0`` when u < 2, where the functions diverge.
    """
    nums = sol.numbers
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr < 0):
        raise ValueError("radius must be non-negative")
    if nums.u < 2 and np.any(r_arr == 0):
        raise DomainError(f"R is singular at r = 0 for u = {nums.u} < 2; evaluate at r > 0")
    x = 2.0 * r_arr / (nums.v + sol.shift_f)
    env = _envelope(x, nums.u)
    lg = laguerre(nums.g, nums.u, x)
    lg1 = laguerre(nums.g - 1, nums.u, x)
    vk = nums.v - nums.k
    tail = (nums.g + nums.u) * lg1
    r_plus = sol.n_plus * env * (vk * lg - tail)
    r_minus = sol.n_minus * env * (-vk * lg - tail)
    if r_arr.ndim == 0:
        return float(r_plus), float(r_minus)
    return r_plus, r_minus


def radial_probability(sol: RadialSolution, r):
    """r^2 (R+^2 + R-^2), the radial probability density in 1/a0."""
    r_plus, r_minus = radial_eval(sol, r)
    r = np.asarray(r, dtype=float)
    out = r**2 * (np.square(r_plus) + np.square(r_minus))
    return float(out) if out.ndim == 0 else out


def schrodinger_radial(n: int, l: int, r):
    """Nonrelativistic hydrogen radial function, with the overall minus sign kept.

    -sqrt(4 (n-l-1)! / (n^4 (n+l)!)) sqrt(exp(-x) x^(2l)) L_{n-l-1}^{2l+1}(x), x = 2r/n.
    """
    if n < 1 or not 0 <= l < n:
        raise StateError(f"invalid (n, l) = ({n}, {l})")
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr < 0):
        raise ValueError("radius must be non-negative")
    x = 2.0 * r_arr / n
    norm = math.sqrt(4.0 * math.exp(math.lgamma(n - l) - math.lgamma(n + l + 1)) / n**4)
    out = -norm * np.exp(-x / 2) * x**l * laguerre(n - l - 1, 2 * l + 1, x)
    return float(out) if r_arr.ndim == 0 else out


def sample_grid(sol: RadialSolution, r_max: float, points: int):
    """Uniform samples over [0, r_max]: (r, R+, R-, density) arrays.

    When the functions are singular at the origin (u < 2) the first
    sample is reported as NaN rather than evaluated.
    """
    if r_max <= 0:
        raise ValueError("r_max must be positive")
    if points < 2:
        raise ValueError("need at least two grid points")
    r = np.linspace(0.0, r_max, points)
    r_plus = np.full(points, np.nan)
    r_minus = np.full(points, np.nan)
    density = np.zeros(points)
    ok = r > 0 if sol.numbers.u < 2 else np.ones(points, dtype=bool)
    r_plus[ok], r_minus[ok] = radial_eval(sol, r[ok])
    density[ok] = r[ok] ** 2 * (r_plus[ok] ** 2 + r_minus[ok] ** 2)
    return r, r_plus, r_minus, density
