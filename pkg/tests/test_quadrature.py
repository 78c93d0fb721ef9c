"""Adaptive engine against closed forms and independent oracles."""

import math

import mpmath
import numpy as np
import pytest

from osctun import specfun
from osctun.quadrature import (DEFAULT_CONFIG, NonConvergenceError,
                               QuadratureConfig, TruncationFailureError,
                               integrate_finite, integrate_semi_infinite,
                               tunneling_exact)


class CountingIntegrand:
    def __init__(self, fn):
        self.fn = fn
        self.calls = 0
        self.points = 0

    def __call__(self, x):
        x = np.asarray(x)
        self.calls += 1
        self.points += x.size
        return self.fn(x)


class TestConfig:
    def test_defaults(self):
        cfg = QuadratureConfig()
        assert cfg.rel_tol == 1e-11
        assert cfg.abs_tol == 1e-15
        assert cfg.max_subdivisions == 2000
        assert cfg.tail_cutoff_decades == 20.0

    @pytest.mark.parametrize("kw", [
        {"rel_tol": 0.0}, {"rel_tol": -1e-3}, {"abs_tol": 0.0},
        {"max_subdivisions": 9}, {"tail_cutoff_decades": 0.0},
        {"semi_infinite_strategy": "laplace"},
    ])
    def test_rejects_bad_config(self, kw):
        with pytest.raises(ValueError):
            QuadratureConfig(**kw)


class TestFinite:
    def test_polynomial_needs_single_panel(self):
        f = CountingIntegrand(lambda x: x * x)
        val, err = integrate_finite(f, 0.0, 1.0)
        assert abs(val - 1.0 / 3.0) < 1e-15
        assert f.points == 15
        assert 0.0 <= err <= 1e-11

    def test_rule_degree(self):
        # The embedded pair integrates degree-22 polynomials exactly.
        val, _ = integrate_finite(lambda x: x ** 22, 0.0, 1.0)
        assert abs(val - 1.0 / 23.0) < 1e-15

    def test_gaussian(self):
        val, err = integrate_finite(lambda x: np.exp(-x * x), 0.0, 10.0)
        want = math.sqrt(math.pi) / 2.0
        assert abs(val - want) <= max(err, 1e-13)

    def test_kink_with_breakpoint(self):
        f = CountingIntegrand(np.abs)
        val, _ = integrate_finite(f, -1.0, 1.0, breakpoints=[0.0])
        assert abs(val - 1.0) < 1e-14
        assert f.points == 30

    def test_empty_and_reversed_interval(self):
        assert integrate_finite(lambda x: x, 2.0, 2.0) == (0.0, 0.0)
        with pytest.raises(ValueError):
            integrate_finite(lambda x: x, 3.0, 2.0)
        with pytest.raises(ValueError):
            integrate_finite(lambda x: x, 0.0, float("inf"))

    def test_nonfinite_integrand_rejected(self):
        with np.errstate(divide="ignore"):
            with pytest.raises(ValueError):
                integrate_finite(lambda x: x / 0.0, 0.0, 1.0)

    def test_budget_exhaustion_carries_best_estimate(self):
        tight = QuadratureConfig(rel_tol=1e-13, abs_tol=1e-16,
                                 max_subdivisions=10)
        want = 2.0 * (math.sqrt(0.7) + math.sqrt(0.3))
        with pytest.raises(NonConvergenceError) as ei:
            integrate_finite(lambda x: 1.0 / np.sqrt(np.abs(x - 0.3)),
                             0.0, 1.0, tight)
        assert abs(ei.value.value - want) < 0.05
        assert ei.value.err_estimate > 0.0

    def test_oscillatory(self):
        val, err = integrate_finite(np.sin, 0.0, 20.0 * math.pi)
        assert abs(val) <= max(err, 1e-10)


class TestSemiInfinite:
    def test_exponential_both_strategies(self):
        want = math.exp(-1.0)
        for strat in ("truncation", "substitution"):
            cfg = QuadratureConfig(semi_infinite_strategy=strat)
            val, err = integrate_semi_infinite(lambda x: np.exp(-x), 1.0, cfg)
            assert abs(val - want) <= max(err, 1e-12), strat

    def test_airy_squared_integral(self):
        val, err = integrate_semi_infinite(
            lambda t: specfun.airy_ai_values(t) ** 2, 0.0)
        want = specfun.GAMMA.ai_prime_zero ** 2
        assert abs(val - want) < 1e-9

    def test_weighted_airy_antiderivative_identity(self):
        # d/dx [(x^2 Ai^2 - x Ai'^2 + Ai Ai')/3] = x Ai^2, so the integral
        # from 0 equals -Ai(0)Ai'(0)/3.
        val, err = integrate_semi_infinite(
            lambda t: t * specfun.airy_ai_values(t) ** 2, 0.0)
        want = -specfun.GAMMA.ai_zero * specfun.GAMMA.ai_prime_zero / 3.0
        assert abs(val - want) < 1e-9

    def test_zero_integrand(self):
        val, err = integrate_semi_infinite(lambda x: 0.0 * x, 5.0)
        assert val == 0.0 and err == 0.0

    def test_slow_decay_fails_truncation(self):
        with pytest.raises(TruncationFailureError):
            integrate_semi_infinite(lambda x: 1.0 / (1.0 + x * x), 0.0)

    def test_strategies_agree_on_tunneling(self):
        for n in (0, 5, 50):
            sub = QuadratureConfig(semi_infinite_strategy="substitution")
            a = tunneling_exact(n).value
            b = tunneling_exact(n, sub).value
            assert abs(a - b) < 1e-9


def mp_tunneling(n):
    mpmath.mp.dps = 30
    nu = mpmath.sqrt(2 * n + 1)
    norm = mpmath.sqrt(mpmath.sqrt(mpmath.pi) * 2 ** n * mpmath.factorial(n))

    def dens(x):
        return (mpmath.hermite(n, x) * mpmath.exp(-x * x / 2) / norm) ** 2

    return float(2 * mpmath.quad(dens, [nu, nu + 2, nu + 10, mpmath.inf]))


class TestTunneling:
    def test_ground_state_is_erfc_one(self):
        r = tunneling_exact(0)
        assert r.method == "exact"
        assert r.n == 0
        assert abs(r.value - math.erfc(1.0)) < 1e-9
        assert r.err_estimate >= 0.0

    @pytest.mark.parametrize("n", [1, 2, 7])
    def test_low_levels_against_mpmath(self, n):
        want = mp_tunneling(n)
        got = tunneling_exact(n).value
        assert abs(got - want) < 1e-10

    def test_value_in_unit_interval_and_decreasing(self):
        vals = [tunneling_exact(n).value for n in range(0, 51)]
        assert all(0.0 < v < 1.0 for v in vals)
        assert all(a > b for a, b in zip(vals, vals[1:]))

    @pytest.mark.parametrize("n", [0, 10, 100, 1000])
    def test_budget_doubling_stays_within_estimate(self, n):
        base = tunneling_exact(n)
        wide = QuadratureConfig(max_subdivisions=4000)
        again = tunneling_exact(n, wide)
        assert abs(base.value - again.value) <= max(base.err_estimate, 1e-14)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            tunneling_exact(-1)
