import inspect
import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dirac_lamb.constants import HYDROGEN
from dirac_lamb.radial import (
    RadialSolution,
    laguerre,
    laguerre_derivative_identity_residual,
    normalization,
    radial_eval,
    radial_probability,
    sample_grid,
    schrodinger_radial,
    solve,
)
from dirac_lamb.states import AtomicState, DomainError, StateError, dirac_numbers, dirac_numbers_za, parse_state


def laguerre_series(g, u, x):
    """Explicit sum L_g^u(x) = sum_i (-1)^i binom(g+u, g-i) x^i / i! at the caller's precision."""
    u, x = mpmath.mpf(u), mpmath.mpf(x)
    return sum((-1) ** i * mpmath.binomial(g + u, g - i) * x**i / mpmath.factorial(i) for i in range(g + 1))


# -- Laguerre polynomials ----------------------------------------------------


@pytest.mark.parametrize("u", [0.0, 1.5, 3.0])
@pytest.mark.parametrize("x", [0.0, 1.0, 17.5])
def test_laguerre_minus_one_is_zero(u, x):
    assert laguerre(-1, u, x) == 0.0


def test_laguerre_low_order_examples():
    assert laguerre(0, 3.0, 1.0) == 1.0
    assert laguerre(1, 3.0, 1.0) == 3.0
    assert laguerre(2, 3.0, 1.0) == 5.5


@pytest.mark.parametrize("u", [0.0, 0.5, 1.0, 2.0, 3.0])
@pytest.mark.parametrize("x", [0.0, 0.25, 1.0, 2.0, 7.0])
def test_laguerre_low_order_rows_exact(u, x):
    # dyadic inputs keep both forms exact in binary64
    assert laguerre(1, u, x) == (u + 1) - x
    assert laguerre(2, u, x) == ((u + 1) * (u + 2) - 2 * (u + 2) * x + x * x) / 2


def test_laguerre_rejects_negative_degree():
    with pytest.raises(DomainError):
        laguerre(-2, 1.0, 1.0)


def test_laguerre_array_input():
    xs = np.array([0.0, 0.5, 3.0])
    out = laguerre(3, 1.2, xs)
    assert out.shape == xs.shape
    assert out[1] == laguerre(3, 1.2, 0.5)


@settings(max_examples=200)
@given(st.integers(0, 10), st.floats(-0.9, 8.0), st.floats(0.0, 50.0))
def test_laguerre_matches_series(g, u, x):
    # terms of the series bound the attainable accuracy
    with mpmath.workdps(40):
        exact = laguerre_series(g, u, x)
        scale = sum(abs(mpmath.binomial(g + u, g - i)) * mpmath.mpf(x) ** i / mpmath.factorial(i) for i in range(g + 1))
    assert abs(laguerre(g, u, x) - float(exact)) <= 1e-13 * float(scale) + 1e-300


def test_laguerre_satisfies_differential_equation():
    # x y'' + (u + 1 - x) y' + g y = 0 with derivatives from the 40-digit series
    for g, u in [(3, 1.99994), (5, 3.7), (1, 0.4)]:
        for x in (0.3, 2.0, 9.0):
            with mpmath.workdps(40):
                f = lambda t: laguerre_series(g, u, t)
                y1 = mpmath.diff(f, x)
                y2 = mpmath.diff(f, x, 2)
                value = f(x)
                resid = x * y2 + (mpmath.mpf(u) + 1 - x) * y1 + g * value
            assert abs(float(resid)) < 1e-25
            assert float(value) == pytest.approx(laguerre(g, u, x), rel=1e-12)


@pytest.mark.parametrize(
    "g, u, x, tol",
    [(1, 2.0, 3.0, 1e-14), (2, 1.5, 0.7, 1e-12), (5, 1.99, 10.0, 1e-12)],
)
def test_derivative_identity_examples(g, u, x, tol):
    assert abs(laguerre_derivative_identity_residual(g, u, x)) <= tol
    # the same residual from the explicit series is zero to working precision
    with mpmath.workdps(40):
        u = mpmath.mpf(u)
        lhs = -x * laguerre_series(g - 1, u + 1, x)
        rhs = g * laguerre_series(g, u, x) - (g + u) * laguerre_series(g - 1, u, x)
        assert abs(lhs - rhs) < 1e-30


def test_derivative_identity_term_scaled():
    """Residual is at rounding level of its own terms for g <= 10, x <= 50."""
    xs = np.linspace(0.0, 50.0, 201)
    for g in range(1, 11):
        for u in (0.5, 1.0, 1.99, 3.99994, 5.5):
            res = laguerre_derivative_identity_residual(g, u, xs)
            scale = (
                np.abs(xs * laguerre(g - 1, u + 1, xs))
                + np.abs(g * laguerre(g, u, xs))
                + np.abs((g + u) * laguerre(g - 1, u, xs))
            )
            assert np.all(np.abs(res) <= 1e-13 * (1 + scale))


# -- normalization -------------------------------------------------------------


def test_normalization_ratio(table_state, hydrogen):
    n_plus, n_minus = normalization(table_state, hydrogen)
    w = dirac_numbers(table_state, hydrogen).w
    assert n_plus > 0 and n_minus >= 0
    assert n_minus / n_plus == pytest.approx(math.sqrt((1 - w) / (1 + w)), rel=1e-12)


def test_normalization_1s_direct_gamma(hydrogen):
    d = dirac_numbers(parse_state("1s1/2"), hydrogen)
    n_plus, n_minus = normalization(parse_state("1s1/2"), hydrogen)
    # v = 1, v - k = 2, g = 0: N^2 = 2 (1 +- w) / (2 Gamma(1 + u))
    assert n_plus == pytest.approx(math.sqrt((1 + d.w) / math.gamma(1 + d.u)), rel=1e-14)
    assert n_minus == pytest.approx(math.sqrt((1 - d.w) / math.gamma(1 + d.u)), rel=1e-14)


def test_normalization_large_n_no_overflow(hydrogen):
    n_plus, n_minus = normalization(AtomicState(50, 49, 99), hydrogen)
    assert 0 < n_minus < n_plus < math.inf


@pytest.mark.parametrize("n, l", [(1, 0), (2, 0), (2, 1), (3, 1), (4, 3)])
def test_normalization_nonrelativistic_limit(n, l):
    for twice_j in (2 * l - 1, 2 * l + 1):
        if twice_j < 1:
            continue
        state = AtomicState(n, l, twice_j)
        sol = RadialSolution.from_numbers(state, dirac_numbers_za(state, 0.0))
        assert sol.n_minus == 0.0
        schrodinger = math.sqrt(4 * math.factorial(n - l - 1) / (n**4 * math.factorial(n + l)))
        # N+ times the constant of the bracket reproduces the textbook constant
        bracket_scale = (sol.numbers.v - sol.numbers.k) if sol.numbers.g == 0 else None
        if bracket_scale is not None:
            assert sol.n_plus * bracket_scale == pytest.approx(schrodinger, rel=1e-14)


def test_normalization_guard():
    d = dirac_numbers_za(parse_state("2p1/2"), 0.0)
    bad = type(d)(k=2, g=0, u=4.0, v=2.0, w=1.0)
    with pytest.raises(DomainError, match="schrodinger_radial"):
        RadialSolution.from_numbers(parse_state("2p1/2"), bad)


# -- radial functions -------------------------------------------------------------


def test_ground_state_has_no_second_laguerre(hydrogen):
    sol = solve(parse_state("1s1/2"), hydrogen)
    d = sol.numbers
    for r in (0.1, 1.0, 5.0):
        x = 2 * r / d.v
        env = math.sqrt(math.exp(-x) * x ** (d.u - 2))
        r_plus, r_minus = radial_eval(sol, r)
        assert r_plus == pytest.approx(sol.n_plus * env * (d.v - d.k), rel=1e-13)
        assert r_minus == pytest.approx(-sol.n_minus * env * (d.v - d.k), rel=1e-13)


def test_no_lambda_in_signature():
    for func in (solve, normalization, radial_eval):
        params = set(inspect.signature(func).parameters)
        assert not params & {"lam", "lambda_", "table", "bethe"}


def test_radial_errors(hydrogen):
    sol = solve(parse_state("2s1/2"), hydrogen)
    with pytest.raises(ValueError):
        radial_eval(sol, -1.0)
    with pytest.raises(DomainError, match="singular"):
        radial_eval(sol, 0.0)
    # u > 2: origin is regular
    assert radial_eval(solve(parse_state("2p3/2"), hydrogen), 0.0) == (0.0, 0.0)


def test_radial_probability_zero_at_origin(hydrogen):
    assert radial_probability(solve(parse_state("2p3/2"), hydrogen), 0.0) == 0.0
    r, _, _, density = sample_grid(solve(parse_state("1s1/2"), hydrogen), 16.0, 2000)
    assert r[0] == 0.0 and density[0] == 0.0


def test_peak_1s(hydrogen):
    sol = solve(parse_state("1s1/2"), hydrogen)
    target = math.sqrt(1 - hydrogen.za**2)
    fine = np.linspace(target - 1e-4, target + 1e-4, 201)
    peak = fine[np.argmax(radial_probability(sol, fine))]
    assert abs(peak - target) <= fine[1] - fine[0]
    assert peak < 1.0


def test_peak_2p3_2(hydrogen):
    sol = solve(parse_state("2p3/2"), hydrogen)
    target = 2 * math.sqrt(4 - hydrogen.za**2)
    fine = np.linspace(target - 1e-4, target + 1e-4, 201)
    peak = fine[np.argmax(radial_probability(sol, fine))]
    assert abs(peak - target) <= fine[1] - fine[0]


def test_2s_node_lifted(hydrogen):
    sol = solve(parse_state("2s1/2"), hydrogen)
    fine = np.linspace(1.99, 2.01, 20001)
    density = radial_probability(sol, fine)
    assert density.min() > 0
    assert radial_probability(sol, 2.0) > 1e3 * 4 * schrodinger_radial(2, 0, 2.0) ** 2


def _log_slope(func, r_lo, r_hi):
    return (math.log(abs(func(r_hi))) - math.log(abs(func(r_lo)))) / math.log(r_hi / r_lo)


@pytest.mark.parametrize("label", ["1s1/2", "2s1/2", "2p1/2", "2p3/2", "3d3/2", "3d5/2"])
def test_small_r_exponent(label, hydrogen):
    sol = solve(parse_state(label), hydrogen)
    d = sol.numbers
    for idx in (0, 1):
        # for k > 0 the large-component bracket nearly cancels at the origin,
        # so its power law only takes over much closer in
        window = (1e-12, 1e-10) if (idx == 0 and d.k > 0) else (1e-6, 1e-4)
        slope = _log_slope(lambda r: radial_eval(sol, r)[idx], *window)
        assert slope == pytest.approx(d.u / 2 - 1, abs=1e-3)


@pytest.mark.parametrize("label", ["1s1/2", "2s1/2", "2p1/2", "2p3/2", "3s1/2", "3d3/2"])
def test_large_r_decay(label, hydrogen):
    sol = solve(parse_state(label), hydrogen)
    d = sol.numbers
    power = d.u / 2 - 1 + d.g
    for idx, sign in ((0, 1), (1, -1)):
        n_comp = (sol.n_plus, sol.n_minus)[idx]
        limit = n_comp * sign * (d.v - d.k) * (-1) ** d.g / math.factorial(d.g) * (2 / d.v) ** power

        def ratio(r):
            return radial_eval(sol, r)[idx] * math.exp(r / d.v) * r**-power / limit - 1

        near, far = ratio(20 * d.v), ratio(40 * d.v)
        if d.g == 0:
            assert abs(near) <= 1e-2 and abs(far) <= 1e-2
        else:
            # polynomial corrections fall off as 1/r
            assert abs(far) < abs(near)
            assert near / far == pytest.approx(2.0, rel=0.1)


# -- nonrelativistic limit ---------------------------------------------------------


@pytest.mark.parametrize(
    "r, density",
    [(1.0, 4 * math.exp(-2)), (4.0, 256 / 24 * math.exp(-4))],
)
def test_schrodinger_density_values(r, density):
    n, l = (1, 0) if r == 1.0 else (2, 1)
    assert r * r * schrodinger_radial(n, l, r) ** 2 == pytest.approx(density, rel=1e-14)
    assert density == pytest.approx(0.5413 if n == 1 else 0.1954, abs=1e-4)


def test_schrodinger_2s_node():
    assert schrodinger_radial(2, 0, 2.0) == 0.0


def test_schrodinger_invalid():
    with pytest.raises(StateError):
        schrodinger_radial(2, 2, 1.0)


def _max_deviation(state, s, phase):
    r = np.linspace(0.0, 16.0, 2000)[1:]
    r_plus, _ = radial_eval(solve(state, HYDROGEN.scaled_alpha(s)), r)
    return np.max(np.abs(r_plus - phase * schrodinger_radial(state.n, state.l, r)))


@pytest.mark.parametrize("label", ["1s1/2", "2s1/2", "2p1/2", "2p3/2", "3p1/2", "3d3/2", "3d5/2"])
def test_schrodinger_convergence(label):
    state = parse_state(label)
    k = dirac_numbers(state, HYDROGEN).k
    phase = 1 if k > 0 else -1
    ratio = _max_deviation(state, 1e-2, phase) / _max_deviation(state, 1e-3, phase)
    assert 60 <= ratio <= 140


def test_sign_convention_in_limit():
    r = np.linspace(0.05, 16.0, 500)
    for label in ("2p1/2", "3d3/2"):
        state = parse_state(label)
        sol = RadialSolution.from_numbers(state, dirac_numbers_za(state, 0.0))
        np.testing.assert_allclose(radial_eval(sol, r)[0], schrodinger_radial(state.n, state.l, r), rtol=1e-12, atol=1e-15)
    for label in ("1s1/2", "2s1/2", "2p3/2"):
        state = parse_state(label)
        sol = RadialSolution.from_numbers(state, dirac_numbers_za(state, 0.0))
        np.testing.assert_allclose(radial_eval(sol, r)[0], -schrodinger_radial(state.n, state.l, r), rtol=1e-12, atol=1e-15)


# -- shifted length scale ---------------------------------------------------------


def test_shift_f_zero_is_default(hydrogen):
    a = solve(parse_state("2s1/2"), hydrogen)
    b = solve(parse_state("2s1/2"), hydrogen, shift_f=0.0)
    assert a == b


def test_shift_f_rescales(hydrogen):
    state = parse_state("1s1/2")
    base = solve(state, hydrogen)
    f = 1e-3
    shifted = solve(state, hydrogen, shift_f=f)
    v = base.numbers.v
    assert shifted.n_plus == pytest.approx(base.n_plus * math.sqrt(v**3 / (v + f) ** 3), rel=1e-14)
    r = 1.3
    r_scaled = r * v / (v + f)
    # same x gives the same shape, scaled by the normalization ratio
    expected = radial_eval(base, r_scaled)[0] * shifted.n_plus / base.n_plus
    assert radial_eval(shifted, r)[0] == pytest.approx(expected, rel=1e-13)
    assert solve(state, hydrogen, shift_f=-f).n_plus > base.n_plus


def test_shift_f_invalid(hydrogen):
    with pytest.raises(DomainError):
        solve(parse_state("1s1/2"), hydrogen, shift_f=-2.0)


def test_sample_grid_shape(hydrogen):
    r, r_plus, r_minus, density = sample_grid(solve(parse_state("2p3/2"), hydrogen), 10.0, 2)
    assert list(r) == [0.0, 10.0]
    assert len(r_plus) == len(r_minus) == len(density) == 2
    with pytest.raises(ValueError):
        sample_grid(solve(parse_state("2p3/2"), hydrogen), 10.0, 1)
