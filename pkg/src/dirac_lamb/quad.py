"""Adaptive Gauss-Legendre quadrature on [0, infinity).

Used as an oracle independent of the closed-form normalization. Panels are
open rules, so the integrand is never evaluated at r = 0.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from dirac_lamb.radial import RadialSolution, radial_probability

_LOW_ORDER = 15
_HIGH_ORDER = 31
_INITIAL_PANELS = 8
_MAX_CUT = 2.0**20


class QuadratureError(RuntimeError):
    """Raised when the evaluation budget runs out; ``best`` holds the last estimate."""

    def __init__(self, message, best):
        super().__init__(message)
        self.best = best


@dataclass(frozen=True)
class QuadResult:
    value: float
    abs_error_estimate: float
    evaluations: int


@lru_cache(maxsize=None)
def _rule(order):
    nodes, weights = np.polynomial.legendre.leggauss(order)
    return nodes, weights


def _panel(f, a, b):
    half = (b - a) / 2
    mid = (a + b) / 2
    values = []
    for order in (_LOW_ORDER, _HIGH_ORDER):
        nodes, weights = _rule(order)
        fx = np.asarray(f(mid + half * nodes), dtype=float)
        values.append(half * math.fsum(weights * fx))
    low, high = values
    return high, abs(high - low)


def _adaptive(f, a, b, rel_tol, budget):
    """Bisect the worst panel until the summed error estimate meets rel_tol."""
    per_panel = _LOW_ORDER + _HIGH_ORDER
    edges = np.linspace(a, b, _INITIAL_PANELS + 1)
    heap = []
    evaluations = 0
    for lo, hi in zip(edges[:-1], edges[1:]):
        value, err = _panel(f, lo, hi)
        evaluations += per_panel
        heap.append((-err, lo, hi, value))
    heapq.heapify(heap)
    while True:
        value = math.fsum(item[3] for item in heap)
        err = math.fsum(-item[0] for item in heap)
        if err <= max(rel_tol * abs(value), 1e-300):
            return QuadResult(value, err, evaluations)
        if evaluations + 2 * per_panel > budget:
            raise QuadratureError(
                f"no convergence on [{a}, {b}] within {budget} evaluations "
                f"(value {value!r}, error {err:.3g})",
                QuadResult(value, err, evaluations),
            )
        _, lo, hi, _ = heapq.heappop(heap)
        mid = (lo + hi) / 2
        for sub_lo, sub_hi in ((lo, mid), (mid, hi)):
            sub_value, sub_err = _panel(f, sub_lo, sub_hi)
            heapq.heappush(heap, (-sub_err, sub_lo, sub_hi, sub_value))
        evaluations += 2 * per_panel


def integrate_semi_infinite(f, rel_tol: float = 1e-10, r_cut: float | None = None, max_evals: int = 500_000) -> QuadResult:
    """Integrate ``f`` over [0, infinity).

    ``f`` must accept a numpy array of radii and decay at least
    exponentially. With ``r_cut`` given the integral is truncated there;
    otherwise the cut is doubled until the last added shell contributes
    less than ``rel_tol`` of the running total.
    """
    if not 1e-12 <= rel_tol <= 1e-3:
        raise ValueError(f"rel_tol must lie in [1e-12, 1e-3], got {rel_tol}")
    if r_cut is not None:
        return _adaptive(f, 0.0, float(r_cut), rel_tol, max_evals)

    # shells are integrated to a tighter tolerance so their errors do not accumulate
    shell_tol = rel_tol / 4
    cut = 16.0
    result = _adaptive(f, 0.0, cut, shell_tol, max_evals)
    values, errors, evaluations = [result.value], [result.abs_error_estimate], result.evaluations
    while True:
        if cut > _MAX_CUT:
            best = QuadResult(math.fsum(values), math.fsum(errors), evaluations)
            raise QuadratureError("integrand does not decay fast enough", best)
        shell = _adaptive(f, cut, 2 * cut, shell_tol, max_evals - evaluations)
        values.append(shell.value)
        errors.append(shell.abs_error_estimate)
        evaluations += shell.evaluations
        cut *= 2
        total = math.fsum(values)
        if abs(shell.value) <= 0.01 * rel_tol * abs(total):
            err = math.fsum(errors) + abs(shell.value)
            return QuadResult(total, err, evaluations)


def norm_check(sol: RadialSolution, rel_tol: float = 1e-12) -> QuadResult:
    """Integrate r^2 (R+^2 + R-^2) of an unshifted radial solution up to 60 v."""
    if sol.shift_f != 0:
        raise ValueError("norm_check applies to unshifted solutions (f = 0) only")
    return integrate_semi_infinite(
        lambda r: radial_probability(sol, r), rel_tol=rel_tol, r_cut=60.0 * sol.numbers.v
    )
