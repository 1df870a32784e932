"""Weight vectors, laws, criticality normalization, and condition checks."""

import math

import numpy as np
import pytest

from mstsim import (
    ConditionThresholds,
    WeightVector,
    check_conditions,
    make_constant,
    make_powerlaw,
    normalize_critical,
    parse_law,
    sample_iid,
    stats,
)
from mstsim.weights import ShiftedExponentialLaw, TwoPointLaw, UniformLaw


class TestConstructors:
    def test_constant_small(self):
        v = make_constant(3)
        np.testing.assert_array_equal(v.weights, [1.0, 1.0, 1.0])
        assert stats(v).ell_n == 3.0

    def test_constant_single(self):
        assert stats(make_constant(1)).C == 1.0

    def test_constant_large_sums(self):
        s = stats(make_constant(10**5))
        assert s.ell_n == 10**5
        assert s.s2 == 10**5

    def test_constant_rejects_zero(self):
        with pytest.raises(ValueError):
            make_constant(0)

    def test_vector_must_be_sorted_and_positive(self):
        with pytest.raises(ValueError):
            WeightVector(np.array([1.0, 2.0]))
        with pytest.raises(ValueError):
            WeightVector(np.array([1.0, 0.0]))
        with pytest.raises(ValueError):
            WeightVector(np.array([]))


class TestSampleIid:
    def test_degenerate_two_point(self):
        v = sample_iid(4, TwoPointLaw(1.0, 1.0, 0.5), seed=1)
        np.testing.assert_array_equal(v.weights, np.ones(4))

    def test_two_point_mean(self):
        # P(W=2) = 1/3, P(W=0.5) = 2/3: mean 1, variance 1/2
        law = TwoPointLaw(0.5, 2.0, 1.0 / 3.0)
        assert law.mean() == pytest.approx(1.0)
        v = sample_iid(10_000, law, seed=5)
        se = math.sqrt(0.5 / 10_000)
        assert abs(v.weights.mean() - 1.0) < 3 * se

    def test_deterministic_given_seed(self):
        a = sample_iid(100, "two_point:0.5,2,0.3333", seed=9)
        b = sample_iid(100, "two_point:0.5,2,0.3333", seed=9)
        np.testing.assert_array_equal(a.weights, b.weights)

    def test_sorted_output(self):
        v = sample_iid(500, ShiftedExponentialLaw(0.1, 1.0), seed=2)
        assert np.all(np.diff(v.weights) <= 0)

    def test_non_positive_support_rejected(self):
        with pytest.raises(ValueError):
            TwoPointLaw(0.0, 2.0, 0.5)
        with pytest.raises(ValueError):
            UniformLaw(-1.0, 2.0)
        with pytest.raises(ValueError):
            ShiftedExponentialLaw(-0.5, 1.0)

    def test_parse_law(self):
        law = parse_law("two_point:0.5,2,0.25")
        assert isinstance(law, TwoPointLaw) and law.p_high == 0.25
        with pytest.raises(ValueError):
            parse_law("cauchy:0,1")
        with pytest.raises(ValueError):
            parse_law("uniform:1")


class TestPowerlaw:
    def test_alpha_at_or_below_three_rejected(self):
        with pytest.raises(ValueError):
            make_powerlaw(100, 3.0)
        with pytest.raises(ValueError):
            make_powerlaw(100, 2.5)

    def test_tail_exponent_via_ratios(self):
        # w_i proportional to (n/i)^(1/(alpha-1)); scaling cancels in ratios
        for alpha in (3.5, 4.0):
            v = make_powerlaw(8, alpha)
            expected = 2.0 ** (1.0 / (alpha - 1.0))
            assert v.weights[0] / v.weights[1] == pytest.approx(expected)

    def test_monotone(self):
        v = make_powerlaw(1000, 4.0)
        assert np.all(np.diff(v.weights) <= 0)

    def test_normalized_to_criticality(self):
        s = stats(make_powerlaw(1000, 3.5))
        assert abs(s.s2 / s.ell_n - 1.0) < 1e-9


class TestNormalizeCritical:
    def test_constant_two(self):
        v = normalize_critical(WeightVector(np.full(3, 2.0)))
        np.testing.assert_allclose(v.weights, np.ones(3))

    def test_fixed_point(self):
        v = normalize_critical(make_constant(3))
        np.testing.assert_array_equal(v.weights, np.ones(3))

    def test_two_values(self):
        v = normalize_critical(WeightVector(np.array([3.0, 1.0])))
        np.testing.assert_allclose(v.weights, [1.2, 0.4])
        s = stats(v)
        assert s.s2 == pytest.approx(s.ell_n) == pytest.approx(1.6)

    def test_idempotent(self, rng):
        for _ in range(20):
            w = np.sort(rng.uniform(0.1, 5.0, size=rng.integers(2, 50)))[::-1]
            once = normalize_critical(WeightVector(w))
            twice = normalize_critical(once)
            np.testing.assert_allclose(once.weights, twice.weights, rtol=1e-14)

    def test_order_preserved(self, rng):
        w = np.sort(rng.uniform(0.1, 5.0, size=30))[::-1]
        v = normalize_critical(WeightVector(w))
        assert np.all(np.diff(v.weights) <= 0)


class TestStats:
    def test_small_vector(self):
        s = stats(WeightVector(np.array([3.0, 2.0, 1.0])))
        assert s.ell_n == 6.0
        assert s.s2 == 14.0
        assert s.s3 == 36.0
        assert s.C == 6.0

    def test_constant_C(self):
        assert stats(make_constant(50)).C == 1.0

    def test_mixed(self):
        s = stats(WeightVector(np.array([2.0, 0.5, 0.5])))
        assert s.ell_n == 3.0
        assert s.s3 == 8.25
        assert s.C == 2.75

    def test_permutation_invariant(self, rng):
        w = rng.uniform(0.2, 3.0, size=40)
        a = stats(WeightVector(np.sort(w)[::-1]))
        b = stats(WeightVector(np.sort(rng.permutation(w))[::-1]))
        assert a == b


class TestConditions:
    def test_constant_all_exact_zero(self):
        report = check_conditions(make_constant(1000))
        assert [c.key for c in report.checks] == ["i", "ii", "iii", "iv", "v", "vi", "vii", "viii"]
        for c in report.checks:
            assert c.deviation == 0.0
            assert c.passed
        assert report.all_passed

    def test_powerlaw_fourth_moment_warns(self):
        # alpha = 3.5 has a divergent population fourth moment
        report = check_conditions(make_powerlaw(1000, 3.5))
        assert not report["viii"].passed
        assert "viii" in report.warnings

    def test_single_heavy_node_warns_max_weight(self):
        w = np.array([10.0] + [1.0] * 7)
        report = check_conditions(WeightVector(w))
        assert report["vii"].measured == pytest.approx(5.0)  # 10 / 8^(1/3)
        assert not report["vii"].passed

    def test_never_blocks(self):
        # wildly non-critical vector still yields a report, not an exception
        report = check_conditions(WeightVector(np.array([100.0, 1.0])))
        assert len(report.checks) == 8

    def test_thresholds_configurable(self):
        v = make_powerlaw(1000, 3.5)
        lax = check_conditions(v, ConditionThresholds(fourth_moment_share=1.0))
        assert lax["viii"].passed

    def test_unknown_key_raises(self):
        report = check_conditions(make_constant(10))
        with pytest.raises(KeyError):
            report["ix"]
