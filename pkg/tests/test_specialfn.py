import math
from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given

from logsine import (
    accelerate_alternating,
    alt_euler_sum_H,
    bernoulli,
    compensated_sum,
    eval_numeric,
    euler_sum_H,
    harmonic,
    hypergeom_1s2s,
    pochhammer,
    polygamma_int,
    polygamma_real,
    shifted_binom_series,
    sym_pi,
    sym_zeta_bar1,
    zeta_bar1_numeric,
    zeta_even,
)
from logsine import sym_zeta_odd
from logsine.specialfn import eta_value
from logsine.symbolic import SymbolicValue


def _rat(q):
    return SymbolicValue.rational(q)


class TestBernoulli:
    @pytest.mark.parametrize(
        "n,value",
        [(0, Fraction(1)), (1, Fraction(-1, 2)), (2, Fraction(1, 6)), (12, Fraction(-691, 2730))],
    )
    def test_values(self, n, value):
        assert bernoulli(n) == value

    def test_odd_vanish(self):
        assert all(bernoulli(2 * k + 1) == 0 for k in range(1, 16))


class TestHarmonic:
    def test_empty_sum(self):
        assert harmonic(0, 1) == 0

    def test_examples(self):
        assert harmonic(4, 1) == Fraction(25, 12)
        assert harmonic(3, 2) == Fraction(49, 36)

    @given(st.integers(1, 200), st.integers(1, 4))
    def test_recurrence(self, m, r):
        assert harmonic(m, r) == harmonic(m - 1, r) + Fraction(1, m**r)


class TestPolygammaInt:
    def test_at_one(self):
        assert polygamma_int(1, 1) == zeta_even(1)
        assert polygamma_int(2, 1) == -2 * sym_zeta_odd(3)

    def test_shifted(self):
        assert polygamma_int(1, 3) == zeta_even(1) - _rat(Fraction(5, 4))

    def test_order_zero_is_harmonic_difference(self):
        # psi(z) - psi(1), the only gamma-free digamma combination here
        assert polygamma_int(0, 4) == _rat(harmonic(3))

    def test_domain(self):
        with pytest.raises(ValueError):
            polygamma_int(1, 0)

    @pytest.mark.parametrize("order", range(1, 6))
    @pytest.mark.parametrize("z", range(1, 7))
    def test_against_numeric_polygamma(self, order, z, cfg):
        sym = eval_numeric(polygamma_int(order, z), cfg)
        num = polygamma_real(order, float(z))
        assert abs(sym - num) < 1e-9


def _harmonic_sum_oracle(n: int, terms: int = 10**6) -> float:
    """Brute-force sum of H_k / k^n plus an integral tail estimate."""
    acc = []
    h = 0.0
    for k in range(1, terms + 1):
        h += 1.0 / k
        acc.append(h / float(k) ** n)
    head = compensated_sum(acc)
    gamma = -polygamma_real(0, 1.0)
    a = terms + 0.5
    tail = (math.log(a) + gamma) * a ** (1 - n) / (n - 1) + a ** (1 - n) / (n - 1) ** 2
    tail += a**-n / (2 * n)  # from H_x ~ log x + gamma + 1/(2x)
    return head + tail


class TestEulerSums:
    def test_weight_two(self):
        assert euler_sum_H(2) == 2 * sym_zeta_odd(3)

    def test_weight_three_reduces_to_pi4(self):
        assert euler_sum_H(3) == sym_pi(4, Fraction(1, 72))

    def test_weight_four(self):
        expected = 3 * sym_zeta_odd(5) - zeta_even(1) * sym_zeta_odd(3)
        assert euler_sum_H(4) == expected

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_against_brute_force(self, n, cfg):
        got = eval_numeric(euler_sum_H(n), cfg)
        assert abs(got - _harmonic_sum_oracle(n)) < 1e-6

    def test_rejects_small_weight(self):
        with pytest.raises(ValueError):
            euler_sum_H(1)


class TestAlternatingEulerSums:
    def test_weight_three(self):
        assert alt_euler_sum_H(3) == sym_zeta_bar1(3) - Fraction(7, 8) * zeta_even(2)

    def test_weight_five(self):
        assert alt_euler_sum_H(5) == sym_zeta_bar1(5) - Fraction(31, 32) * zeta_even(3)

    def test_rejects_even_weight(self):
        with pytest.raises(ValueError):
            alt_euler_sum_H(4)

    @pytest.mark.parametrize("n", [3, 5, 7])
    def test_against_accelerated_series(self, n, cfg):
        got = eval_numeric(alt_euler_sum_H(n), cfg)
        harm = [0.0]

        def magnitude(k: int) -> float:
            while len(harm) <= k:
                harm.append(harm[-1] + 1.0 / len(harm))
            return harm[k] / float(k) ** n

        # sum (-1)^k H_k / k^n = -(alternating series with positive first term)
        want = -accelerate_alternating(magnitude, cfg)
        assert abs(got - want) < 1e-9


class TestZetaBar1:
    def test_double_sum_oracle(self, cfg):
        # independent summation order: partial sums of (-1)^k H_{k-1}/k^3
        # bracket the limit, so the midpoint of the final bracket is an oracle
        h = 0.0
        s = 0.0
        partials = []
        for k in range(1, 100001):
            if k >= 2:
                s += (-1) ** k * h / k**3
                partials.append(s)
            h += 1.0 / k
        oracle = (partials[-1] + partials[-2]) / 2.0
        assert abs(zeta_bar1_numeric(3, cfg) - oracle) < 1e-10

    def test_alternating_envelope(self):
        h = 0.0
        s = 0.0
        partials = []
        for k in range(1, 40):
            if k >= 2:
                s += (-1) ** k * h / k**3
                partials.append(s)
            h += 1.0 / k
        limit = zeta_bar1_numeric(3)
        for a, b in zip(partials, partials[1:]):
            assert min(a, b) <= limit <= max(a, b)

    def test_catalog_consistency_weight_five(self, cfg):
        harm = [0.0]

        def magnitude(k: int) -> float:
            while len(harm) <= k:
                harm.append(harm[-1] + 1.0 / len(harm))
            return harm[k] / float(k) ** 5

        alt_sum = -accelerate_alternating(magnitude, cfg)
        want = zeta_bar1_numeric(5, cfg) - (1 - 2.0**-5) * eval_numeric(zeta_even(3), cfg)
        assert abs(alt_sum - want) < 1e-9

    def test_rejects_even(self):
        with pytest.raises(ValueError):
            zeta_bar1_numeric(4)


class TestPochhammer:
    def test_factorial_case(self):
        assert pochhammer(1, 4) == 24

    @given(st.fractions(min_value=-10, max_value=10, max_denominator=12))
    def test_empty_product(self, a):
        assert pochhammer(a, 0) == 1

    def test_half(self):
        assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)


class TestHypergeometricReduction:
    def test_zeta2_at_one(self, cfg):
        assert abs(hypergeom_1s2s(2, 1.0, cfg) - math.pi**2 / 6) < 1e-10

    def test_eta2_at_minus_one(self, cfg):
        assert abs(hypergeom_1s2s(2, -1.0, cfg) - math.pi**2 / 12) < 1e-10

    def test_three_quarters_zeta3(self, cfg):
        want = 0.75 * 1.2020569031595943
        assert abs(hypergeom_1s2s(3, -1.0, cfg) - want) < 1e-10

    def test_interior_matches_polylog_series(self, cfg):
        z = 0.5
        direct = sum(z**k / (k + 1) ** 2 for k in range(200))
        assert abs(hypergeom_1s2s(2, z, cfg) - direct) < 1e-12

    def test_divergent_corner(self):
        with pytest.raises(ValueError):
            hypergeom_1s2s(1, 1.0)


class TestShiftedBinomSeries:
    def test_single_term(self):
        assert shifted_binom_series(1, 0, 1.0) == 1.0

    def test_alternating_two_terms(self):
        assert shifted_binom_series(2, 1, -1.0) == 3.5

    def test_three_terms(self):
        want = 15 + 6 / 4 + 1 / 9
        assert abs(shifted_binom_series(3, 2, 1.0) - want) < 1e-12

    def test_matches_hypergeometric_identity(self, cfg):
        # finite sum side equals binom(2m, m+1) * (q+2)F(q+1)-style series side,
        # evaluated through the polylog reduction witness at m = 1
        m, s, z = 1, 2, -0.75
        lhs = shifted_binom_series(m, s, z)
        rhs = sum(
            (z) ** (k - 1) / k**s * math.comb(2 * m, m + k) for k in range(1, m + 1)
        )
        assert abs(lhs - rhs) < 1e-14


class TestEta:
    def test_eta_values(self, cfg):
        assert eta_value(2) == Fraction(1, 2) * zeta_even(1)
        got = eval_numeric(eta_value(3), cfg)
        want = accelerate_alternating(lambda k: 1.0 / k**3, cfg)
        assert abs(got - want) < 1e-12


class TestConcurrentCaches:
    def test_harmonic_and_bernoulli_under_contention(self):
        from concurrent.futures import ThreadPoolExecutor

        def worker(seed: int):
            out = []
            for i in range(1, 40):
                out.append(harmonic(200 + (seed * i) % 150, 1 + (i % 3)))
                out.append(bernoulli(2 * ((seed + i) % 14)))
            return out

        with ThreadPoolExecutor(max_workers=8) as pool:
            results = list(pool.map(worker, range(8)))
        # every thread must observe the same exact values
        for seed, out in enumerate(results):
            assert out == worker(seed)
