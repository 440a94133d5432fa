"""
Tests for the costmodel module
"""

import math

import numpy as np
import pytest

from frobeval.costmodel import (
    CostParams, applicable_cost, cost_row, default_sweep_limit, g_general, g_prime_coeffs,
    g_subfield, horner_cost, min_cost_general, min_cost_subfield, optimal_L, power_weight,
    split_cost, split_cost_approx, sweep
)
from frobeval.config import COST_CSV_COLUMNS
from frobeval.utils import CostModelError


def divisors(m):
    return [d for d in range(1, m + 1) if m % d == 0]


GRID = [
    (p, m, d, n)
    for p in (2, 3, 5)
    for m in range(1, 11)
    for d in divisors(m)
    for n in (1, 10, 254, 1000, 10 ** 4, 10 ** 6)
]


class TestPowerWeight:
    """Test power_weight."""

    @pytest.mark.parametrize("p, w", [(2, 1), (3, 2), (5, 4), (7, 4), (11, 6)])
    def test_values(self, p, w):
        """1 for p = 2, 2*floor(log2 p) otherwise."""
        assert power_weight(p) == w
        assert CostParams(10, p, 1).w == w


class TestCostParams:
    """Test CostParams validation."""

    def test_d_defaults_to_m(self):
        """An omitted d means coefficients anywhere in the field."""
        assert CostParams(100, 2, 8).d == 8

    @pytest.mark.parametrize("args", [
        (10, 4, 2, None),
        (10, 1, 2, None),
        (10, 2, 0, None),
        (10, 2, 8, 3),
        (-1, 2, 8, None),
    ])
    def test_rejected(self, args):
        with pytest.raises(CostModelError):
            CostParams(*args)


class TestCostFunctions:
    """Hand-evaluated costs."""

    def test_depth_zero_prime_field(self):
        """At L = 0 over GF(2) the cost is n."""
        assert g_prime_coeffs(0, CostParams(8, 2, 1)) == 8

    def test_prime_coefficients_binary(self):
        """p = 2, n = 48, L = 2: 3*4 - 3 + 48/4 = 21."""
        assert g_prime_coeffs(2, CostParams(48, 2, 8)) == pytest.approx(21)

    def test_prime_coefficients_ternary(self):
        """p = 3, n = 27, L = 1: 2*(9 - 3)/2 + 2 + 9*2 = 26."""
        assert g_prime_coeffs(1, CostParams(27, 3, 4)) == pytest.approx(26)

    def test_gf16_coefficients_in_gf256(self):
        """p = 2, m = 8, d = 4, n = 254 at L = 4 and L = 5."""
        params = CostParams(254, 2, 8, 4)
        assert g_subfield(4, params) == pytest.approx(334.125)
        assert g_subfield(5, params) == pytest.approx(311.0625)

    @pytest.mark.parametrize("p, m", [(2, 8), (3, 4), (5, 3), (2, 1)])
    def test_degenerate_divisors(self, p, m):
        """d = m is the general formula, d = 1 the prime-coefficient one."""
        for n in (1, 100, 5000):
            for L in range(0, m + 2):
                assert g_subfield(L, CostParams(n, p, m, m)) == g_general(L, CostParams(n, p, m))
                assert g_subfield(L, CostParams(n, p, m, 1)) == g_prime_coeffs(L, CostParams(n, p, m))

    def test_applicable_cost_dispatch(self):
        """applicable_cost follows d."""
        assert applicable_cost(3, CostParams(500, 2, 8, 1)) == g_prime_coeffs(3, CostParams(500, 2, 8))
        assert applicable_cost(3, CostParams(500, 2, 8, 4)) == g_subfield(3, CostParams(500, 2, 8, 4))
        assert applicable_cost(3, CostParams(500, 2, 8)) == g_general(3, CostParams(500, 2, 8))


class TestOptimalDepth:
    """Test optimal_L."""

    def test_tiny_n_clamps_to_zero(self):
        """When the optimum is below zero the depth is 0."""
        depth = optimal_L(CostParams(1, 2, 8, 1))
        assert depth.L_star == 0.0
        assert depth.L_int == 0

    def test_binary_prime_coefficients(self):
        """p = 2, d = 1: L* = log2 sqrt(n/3), exactly 5 at n = 3 * 2^10."""
        params = CostParams(3 * 2 ** 10, 2, 1, 1)
        depth = optimal_L(params)
        assert depth.L_star == pytest.approx(5)
        assert depth.L_int == 5
        costs = dict(sweep(params, 12))
        assert costs[5] == min(costs.values())

    def test_gf16_coefficients_prefer_five(self):
        """p = 2, m = 8, d = 4, n = 254: L* is about 4.65 and L = 5 wins."""
        depth = optimal_L(CostParams(254, 2, 8, 4))
        assert 4 < depth.L_star < 5
        assert depth.L_int == 5

    def test_gf256_general_matches_sweep(self):
        """p = 2, m = 8, n = 254: L_int is the exhaustive argmin over [0, 8]."""
        params = CostParams(254, 2, 8)
        costs = dict(sweep(params, 8))
        best = min(costs, key=lambda L: (costs[L], L))
        assert optimal_L(params).L_int == best

    def test_grid_integer_optimum(self):
        """The floor/ceil choice is never beaten by any depth in the sweep."""
        for p, m, d, n in GRID:
            params = CostParams(n, p, m, d)
            chosen = applicable_cost(optimal_L(params).L_int, params)
            best = min(cost for _, cost in sweep(params))
            assert chosen <= best * (1 + 1e-12)

    def test_zero_degree_rejected(self):
        """n < 1 has no optimum."""
        with pytest.raises(CostModelError):
            optimal_L(CostParams(0, 2, 8))


class TestMinimumCost:
    """Test the closed-form minima."""

    def test_matches_cost_at_optimum(self):
        """min_cost_general equals g_general at L* whenever L* > 0."""
        rng = np.random.default_rng(2024)
        checked = 0
        while checked < 100:
            p = int(rng.choice([2, 3, 5, 7]))
            m = int(rng.integers(1, 9))
            n = float(rng.integers(1, 10 ** 6))
            params = CostParams(n, p, m)
            depth = optimal_L(params)
            if depth.L_star <= 0:
                continue
            assert min_cost_general(params) == pytest.approx(g_general(depth.L_star, params), rel=1e-9)
            checked += 1

    @pytest.mark.parametrize("n", [3, 16, 100, 3072, 10 ** 6])
    def test_prime_coefficients_bound(self, n):
        """p = 2, d = 1: the minimum is 2 sqrt(3n) - 3, below 2 sqrt(3n)."""
        value = min_cost_subfield(CostParams(n, 2, 8, 1))
        assert value == pytest.approx(2 * math.sqrt(3 * n) - 3)
        assert value < 2 * math.sqrt(3 * n)

    def test_integer_depth_within_seven_percent(self):
        """Rounding the depth costs at most 7% over the continuous 2 sqrt(3n)."""
        for n in [16, 17, 64, 100, 777, 3072, 4096, 50000, 10 ** 6]:
            params = CostParams(n, 2, 1, 1)
            integer_cost = g_prime_coeffs(optimal_L(params).L_int, params)
            bound = 2 * math.sqrt(3 * n)
            assert bound - 3 - 1e-9 <= integer_cost <= 1.07 * bound - 3

    @pytest.mark.parametrize("m", [12, 14, 16, 18, 20, 22, 24])
    def test_split_against_approximation(self, m):
        """Two half-field evaluations at n = 2^m stay within 25% of 2 sqrt(2) n^(3/4) sqrt(log2 n)."""
        n = 2 ** m
        ratio = split_cost(n, 2, m) / split_cost_approx(n)
        assert 0.75 <= ratio <= 1.25

    @pytest.mark.parametrize("m", range(14, 25))
    def test_approximation_below_n(self, m):
        """From m = 14 on, 2 sqrt(2) n^(3/4) sqrt(log2 n) at n = 2^m is below n."""
        assert split_cost_approx(2 ** m) < 2 ** m

    @pytest.mark.parametrize("m", [16, 18, 20, 22, 24])
    def test_split_cost_below_n(self, m):
        """The exact split cost at n = 2^m is below n from m = 16 on."""
        assert split_cost(2 ** m, 2, m) < 2 ** m

    def test_split_cost_at_fourteen(self):
        """At m = 14 the exact split cost still exceeds n; only the approximation is below."""
        n = 2 ** 14
        assert split_cost(n, 2, 14) == pytest.approx(17315.8, abs=0.1)
        assert split_cost(n, 2, 14) > n > split_cost_approx(n)

    def test_split_is_twice_half_field(self):
        """split_cost is two subfield minima at d = m/2."""
        assert split_cost(1000, 3, 4) == pytest.approx(2 * min_cost_subfield(CostParams(1000, 3, 4, 2)))

    def test_split_needs_even_m(self):
        with pytest.raises(CostModelError):
            split_cost(1000, 2, 7)

    def test_approximation_needs_positive_n(self):
        with pytest.raises(CostModelError):
            split_cost_approx(0)


class TestUnimodality:
    """The discrete costs fall and then rise."""

    def test_single_sign_change(self):
        """Over the grid, consecutive differences change sign at most once, downward to upward."""
        for p, m, d, n in GRID:
            params = CostParams(n, p, m, d)
            costs = [cost for _, cost in sweep(params)]
            diffs = [b - a for a, b in zip(costs, costs[1:])]
            for before, after in zip(diffs, diffs[1:]):
                assert not (before > 0 and after < 0)


class TestHornerAndRows:
    """Test horner_cost, sweep and cost_row."""

    @pytest.mark.parametrize("n", [0, 254, 1000])
    def test_horner_cost(self, n):
        """n multiplications and n additions."""
        assert horner_cost(n) == (n, n)
        assert horner_cost(n).mul == n

    def test_horner_negative(self):
        with pytest.raises(CostModelError):
            horner_cost(-1)

    def test_sweep_limit(self):
        """ceil(log_p n) + 2."""
        assert default_sweep_limit(CostParams(254, 2, 8)) == 10
        assert default_sweep_limit(CostParams(1, 2, 8)) == 2
        assert default_sweep_limit(CostParams(27, 3, 4)) == 5
        assert len(sweep(CostParams(254, 2, 8))) == 11

    @pytest.mark.parametrize("n", [16, 17, 100, 1000, 3072, 10 ** 6])
    def test_crossover_binary_prime_coefficients(self, n):
        """With coefficients in GF(2) and n >= 16 the chosen depth beats Horner."""
        row = cost_row(CostParams(n, 2, 1, 1))
        assert row["crossover"] is True
        assert row["g_L_int"] < row["horner_mul"]

    def test_row_keys(self):
        """Stable keys; split_cost is None for odd m, the approximation is always present."""
        row = cost_row(CostParams(254, 2, 8, 4))
        assert set(row) == {
            "p", "m", "d", "n", "L_star", "L_int", "g_L_int", "min_closed_form",
            "horner_mul", "crossover", "split_cost", "split_cost_approx"
        }
        assert row["L_int"] == 5
        assert row["g_L_int"] == pytest.approx(311.0625)
        assert row["split_cost"] is not None
        assert cost_row(CostParams(254, 3, 5))["split_cost"] is None
        assert row["split_cost_approx"] == pytest.approx(split_cost_approx(254))
        assert set(row) == set(COST_CSV_COLUMNS)
