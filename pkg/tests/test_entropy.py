import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qsteer.entropy import (
    JointDistribution,
    NoDualOrderError,
    _conditional_min_entropy,
    _conditional_renyi_generic,
    _conditional_shannon,
    conditional_renyi,
    conditional_tsallis,
    dual_order,
    renyi_entropy,
    tsallis_entropy,
)

# frozen from 50-digit evaluation of the defining formulas
H2_COND_ORACLE = 0.55639334852438528749  # [[0.4,0.1],[0.1,0.4]], alpha = 2
H07_COND_ORACLE = 0.79399552418424419284  # same table, alpha = 0.7
TABLE_2X3 = [[0.15, 0.05, 0.30], [0.20, 0.10, 0.20]]
ORACLES_2X3 = {1.5: 0.95284935556083276487, 3.0: 0.91232237770163042176,
               0.6: 0.98064903686795713377}
MIN_ENTROPY_09 = 0.15200309344504998496  # -log2(0.9)


def distributions(max_size=6):
    return (
        st.lists(st.floats(0.01, 1.0), min_size=2, max_size=max_size)
        .map(lambda v: np.array(v) / np.sum(v))
    )


class TestRenyiEntropy:
    def test_uniform_is_log_d_for_every_order(self):
        for d in (2, 3, 5, 8):
            p = np.full(d, 1.0 / d)
            for alpha in (0.0, 0.3, 0.5, 1.0, 2.0, 7.5, math.inf):
                assert renyi_entropy(p, alpha) == pytest.approx(np.log2(d), abs=1e-12)

    def test_min_entropy_oracle(self):
        assert renyi_entropy([0.9, 0.1], math.inf) == pytest.approx(
            MIN_ENTROPY_09, abs=1e-14
        )

    def test_deterministic_distribution_is_zero(self):
        for alpha in (0.0, 0.5, 1.0, 2.0, math.inf):
            assert renyi_entropy([1.0, 0.0, 0.0], alpha) == 0.0

    def test_order_zero_counts_support(self):
        assert renyi_entropy([0.5, 0.5, 0.0], 0.0) == 1.0

    def test_negative_order_rejected(self):
        with pytest.raises(ValueError):
            renyi_entropy([0.5, 0.5], -0.1)

    def test_invalid_distribution_rejected(self):
        with pytest.raises(ValueError):
            renyi_entropy([0.7, 0.7], 1.0)
        with pytest.raises(ValueError):
            renyi_entropy([1.2, -0.2], 1.0)

    @given(p=distributions(), a1=st.floats(0.1, 20.0), a2=st.floats(0.1, 20.0))
    @settings(max_examples=200, deadline=None)
    def test_nonincreasing_in_order(self, p, a1, a2):
        lo, hi = min(a1, a2), max(a1, a2)
        assert renyi_entropy(p, lo) >= renyi_entropy(p, hi) - 1e-10


class TestConditionalRenyi:
    def test_alpha2_oracle(self):
        assert conditional_renyi([[0.4, 0.1], [0.1, 0.4]], 2.0) == pytest.approx(
            H2_COND_ORACLE, abs=1e-14
        )

    def test_generic_path_oracles(self):
        assert conditional_renyi([[0.4, 0.1], [0.1, 0.4]], 0.7) == pytest.approx(
            H07_COND_ORACLE, abs=1e-14
        )
        for alpha, value in ORACLES_2X3.items():
            assert conditional_renyi(TABLE_2X3, alpha) == pytest.approx(value, abs=1e-13)

    def test_perfect_correlation_min_entropy_is_zero(self):
        assert conditional_renyi([[0.5, 0.0], [0.0, 0.5]], math.inf) == 0.0

    def test_product_of_uniform_bits_max_entropy(self):
        assert conditional_renyi(np.full((2, 2), 0.25), 0.5) == pytest.approx(1.0, abs=1e-12)

    def test_zero_weight_column_skipped(self):
        with_empty = np.array([[0.5, 0.0], [0.5, 0.0]])
        assert conditional_renyi(with_empty, 1.0) == pytest.approx(1.0, abs=1e-12)

    def test_dispatch_continuity_near_one(self):
        for table in (np.array([[0.4, 0.1], [0.1, 0.4]]), np.array(TABLE_2X3)):
            shannon = _conditional_shannon(table)
            for eps in (1e-10, -1e-10):
                generic = _conditional_renyi_generic(table, 1.0 + eps)
                assert abs(generic - shannon) <= 1e-10
            # values inside the window route to the closed form
            assert conditional_renyi(table, 1.0 + 1e-12) == shannon

    def test_dispatch_continuity_near_infinity(self):
        table = np.array(TABLE_2X3)
        assert abs(
            _conditional_renyi_generic(table, 1e12) - _conditional_min_entropy(table)
        ) <= 1e-10

    def test_conditioning_reduces_entropy_small(self):
        rng = np.random.default_rng(5)
        for _ in range(50):
            cube = rng.dirichlet(np.ones(2 * 3 * 4)).reshape(2, 3, 4)
            for alpha in (0.5, 0.7, 1.0, 2.0, math.inf):
                coarse = conditional_renyi(cube.sum(axis=2), alpha)
                fine = conditional_renyi(cube.reshape(2, 12), alpha)
                assert coarse >= fine - 1e-10

    @given(
        px=distributions(4), py=distributions(4),
        alpha=st.sampled_from([0.5, 0.8, 1.0, 1.7, 3.0, math.inf]),
    )
    @settings(max_examples=150, deadline=None)
    def test_uncorrelated_limit(self, px, py, alpha):
        product = np.outer(px, py)
        assert conditional_renyi(product, alpha) == pytest.approx(
            renyi_entropy(px, alpha), abs=1e-10
        )


class TestDualOrder:
    def test_fixed_points_and_examples(self):
        assert dual_order(0.5) == math.inf
        assert dual_order(1.0) == 1.0
        assert dual_order(2.0) == pytest.approx(2.0 / 3.0, abs=1e-15)
        assert dual_order(math.inf) == 0.5

    @given(alpha=st.floats(0.5, 100.0))
    @settings(max_examples=100, deadline=None)
    def test_involutive(self, alpha):
        assert dual_order(dual_order(alpha)) == pytest.approx(alpha, rel=1e-12)

    def test_below_half_rejected(self):
        with pytest.raises(NoDualOrderError):
            dual_order(0.49)


class TestTsallis:
    def test_deterministic_is_zero(self):
        assert tsallis_entropy([1.0, 0.0], 2.0) == 0.0

    def test_uniform_q2(self):
        for d in (2, 3, 5):
            assert tsallis_entropy(np.full(d, 1.0 / d), 2.0) == pytest.approx(
                1.0 - 1.0 / d, abs=1e-14
            )

    def test_q_near_one_approaches_shannon_nats(self):
        p = np.array([0.6, 0.3, 0.1])
        shannon_nats = -np.sum(p * np.log(p))
        for q in (1.0 + 1e-6, 1.0 - 1e-6):
            assert abs(tsallis_entropy(p, q) - shannon_nats) < 1e-5

    def test_q_one_rejected(self):
        with pytest.raises(ValueError):
            tsallis_entropy([0.5, 0.5], 1.0)
        with pytest.raises(ValueError):
            tsallis_entropy([0.5, 0.5], -2.0)

    def test_perfectly_correlated_conditional_is_zero(self):
        assert conditional_tsallis([[0.5, 0.0], [0.0, 0.5]], 1.5) == 0.0

    def test_chain_rule_identity(self):
        rng = np.random.default_rng(11)
        for _ in range(30):
            joint = rng.dirichlet(np.ones(12)).reshape(3, 4)
            for q in (1.2, 1.5, 2.0):
                lhs = tsallis_entropy(joint.reshape(-1), q)
                rhs = conditional_tsallis(joint, q) + tsallis_entropy(joint.sum(axis=0), q)
                assert lhs == pytest.approx(rhs, abs=1e-12)

    def test_pseudo_additivity_for_independent(self):
        px, py = np.array([0.7, 0.3]), np.array([0.2, 0.5, 0.3])
        for q in (1.3, 2.0, 0.5):
            sx, sy = tsallis_entropy(px, q), tsallis_entropy(py, q)
            joint = tsallis_entropy(np.outer(px, py).reshape(-1), q)
            assert joint == pytest.approx(sx + sy + (1 - q) * sx * sy, abs=1e-12)

    def test_uncorrelated_limit_fails_for_q_not_one(self):
        # the one property that separates Tsallis from the Renyi family
        product = np.full((2, 2), 0.25)
        marginal = tsallis_entropy([0.5, 0.5], 2.0)
        assert marginal - conditional_tsallis(product, 2.0) > 1e-6


class TestJointDistribution:
    def test_clamps_tiny_negativity(self):
        j = JointDistribution([[0.5, -1e-13], [0.25, 0.25]])
        assert j.table.min() == 0.0

    def test_rejects_large_negativity_and_bad_sum(self):
        with pytest.raises(ValueError):
            JointDistribution([[0.5, -1e-6], [0.25, 0.25]])
        with pytest.raises(ValueError):
            JointDistribution([[0.5, 0.5], [0.5, 0.5]])

    def test_swapped_transposes(self):
        j = JointDistribution([[0.1, 0.2], [0.3, 0.4]])
        assert np.array_equal(j.swapped().table, j.table.T)

    def test_table_is_readonly(self):
        j = JointDistribution([[0.5, 0.0], [0.0, 0.5]])
        with pytest.raises(ValueError):
            j.table[0, 0] = 1.0
