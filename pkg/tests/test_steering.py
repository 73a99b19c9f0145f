import math

import numpy as np
import pytest

from qsteer.entropy import JointDistribution, NoDualOrderError
from qsteer.qobj import DensityMatrix, Povm, depolarize, max_entangled_state, mub_pair, qubit_povm
from qsteer.steering import (
    UnsupportedBoundError,
    evaluate,
    lhs_statistics,
    overlap_bound,
    sample_lhs_model,
    steering_lhs,
)

LHS_V08_ORACLE = 0.83007499855768763709  # log2(1.6) - log2(0.9), 50-digit evaluation
BOUND_60DEG = 0.41503749927884381855  # -log2 cos^2(pi/6)


class TestOverlapBound:
    @pytest.mark.parametrize("d", [2, 3, 5])
    def test_mub_pair_reaches_log_d(self, d):
        comp, four = mub_pair(d)
        assert overlap_bound(comp, four) == pytest.approx(np.log2(d), abs=1e-12)

    def test_identical_bases_give_zero(self):
        comp, _ = mub_pair(3)
        assert overlap_bound(comp, comp) == 0.0

    def test_bloch_angle_60deg(self):
        a = qubit_povm(0.0, (0, 0, 1))
        b = qubit_povm(0.0, (math.sin(math.pi / 3), 0, math.cos(math.pi / 3)))
        assert overlap_bound(a, b) == pytest.approx(BOUND_60DEG, abs=1e-12)

    def test_symmetry_is_exact(self):
        a = qubit_povm(0.0, (0, 0, 1))
        b = qubit_povm(0.0, (math.sin(1.1), 0, math.cos(1.1)))
        assert overlap_bound(a, b) == overlap_bound(b, a)

    def test_non_projective_rejected(self):
        comp, four = mub_pair(2)
        noisy = depolarize(comp, 0.7)
        with pytest.raises(UnsupportedBoundError):
            overlap_bound(noisy, four)


class TestSteeringLhs:
    def test_product_uniform_two_bits(self):
        uniform = JointDistribution(np.full((2, 2), 0.25))
        assert steering_lhs(uniform, uniform, 1.0) == pytest.approx(2.0, abs=1e-12)

    def test_perfect_correlations_zero(self):
        corr = JointDistribution(np.diag([0.5, 0.5]))
        assert steering_lhs(corr, corr, 0.5) == pytest.approx(0.0, abs=1e-12)

    def test_visibility_08_closed_form(self):
        v = 0.8
        table = np.array(
            [[(1 + v) / 4, (1 - v) / 4], [(1 - v) / 4, (1 + v) / 4]]
        )
        j = JointDistribution(table)
        assert steering_lhs(j, j, 0.5) == pytest.approx(LHS_V08_ORACLE, abs=1e-13)

    def test_alpha_below_half_rejected(self):
        j = JointDistribution(np.full((2, 2), 0.25))
        with pytest.raises(NoDualOrderError):
            steering_lhs(j, j, 0.4)


class TestEvaluate:
    def test_ideal_mubs_violate_by_one_bit(self):
        rho = max_entangled_state(2)
        comp, four = mub_pair(2)
        cert = evaluate(rho, four, comp, four, comp, 0.5)
        assert cert.violation == pytest.approx(1.0, abs=1e-10)
        assert cert.detected

    def test_zero_visibility_never_detects(self):
        rho = max_entangled_state(2)
        comp, four = mub_pair(2)
        cert = evaluate(rho, depolarize(four, 0.0), depolarize(comp, 0.0), four, comp, 0.5)
        assert cert.violation == pytest.approx(-1.0, abs=1e-10)
        assert not cert.detected

    def test_visibility_08_pipeline_matches_closed_form(self):
        rho = max_entangled_state(2)
        comp, four = mub_pair(2)
        cert = evaluate(rho, depolarize(four, 0.8), depolarize(comp, 0.8), four, comp, 0.5)
        assert cert.lhs == pytest.approx(LHS_V08_ORACLE, abs=1e-12)
        assert cert.violation == pytest.approx(1.0 - LHS_V08_ORACLE, abs=1e-12)

    def test_separable_state_never_violates(self):
        rho = DensityMatrix(np.eye(4) / 4)
        comp, four = mub_pair(2)
        tilted = qubit_povm(0.0, (math.sin(0.9), 0, math.cos(0.9)))
        for alpha in (0.5, 1.0, 2.0, math.inf):
            for bx, bz in ((four, comp), (tilted, comp)):
                cert = evaluate(rho, four, comp, bx, bz, alpha)
                assert cert.violation <= 0.0

    def test_certificate_consistency_bit_for_bit(self):
        rho = max_entangled_state(3)
        comp, four = mub_pair(3)
        cert = evaluate(rho, depolarize(four, 0.71), depolarize(comp, 0.71), four, comp, 0.7)
        assert cert.violation == cert.bound - cert.lhs
        assert cert.beta == pytest.approx(0.7 / (2 * 0.7 - 1), abs=1e-15)

    def test_monotone_in_visibility(self):
        rho = max_entangled_state(3)
        comp, four = mub_pair(3)
        for alpha in (0.5, 1.0, 2.0):
            previous = -np.inf
            for v in np.linspace(0.0, 1.0, 9):
                cert = evaluate(
                    rho, depolarize(four, v), depolarize(comp, v), four, comp, alpha
                )
                assert cert.violation >= previous - 1e-12
                previous = cert.violation


class TestLhsModel:
    def test_deterministic_in_seed(self):
        a = sample_lhs_model(123, 3, 4)
        b = sample_lhs_model(123, 3, 4)
        assert np.array_equal(a.weights, b.weights)
        for sa, sb in zip(a.hidden_states, b.hidden_states):
            assert np.array_equal(sa.matrix, sb.matrix)
        for key in a.responses:
            assert np.array_equal(a.responses[key], b.responses[key])
        c = sample_lhs_model(124, 3, 4)
        assert not np.array_equal(a.weights, c.weights)

    def test_invariants_hold_for_samples(self):
        for seed in range(20):
            model = sample_lhs_model(seed, 2, 3)  # constructor validates
            assert model.n_lambda == 3
            assert model.dim == 2

    def test_single_lambda_gives_product_statistics(self):
        model = sample_lhs_model(7, 2, 1)
        comp, four = mub_pair(2)
        jx, jz = lhs_statistics(model, four, comp)
        for j in (jx, jz):
            outer = np.outer(j.marginal_x(), j.marginal_y())
            assert np.abs(j.table - outer).max() < 1e-12

    def test_lambda_blind_responses_decouple_alice(self):
        model = sample_lhs_model(9, 2, 3)
        flat = np.tile(model.responses["x"][0], (3, 1))
        blind = type(model)(
            weights=model.weights,
            hidden_states=model.hidden_states,
            responses={"x": flat, "z": flat},
        )
        comp, four = mub_pair(2)
        jx, _ = lhs_statistics(blind, four, comp)
        outer = np.outer(jx.marginal_x(), jx.marginal_y())
        assert np.abs(jx.table - outer).max() < 1e-12

    def test_statistics_never_violate_bound(self):
        comp, four = mub_pair(2)
        bound = overlap_bound(four, comp)
        for seed in range(200):
            model = sample_lhs_model(seed, 2, [1, 2, 4, 8][seed % 4])
            jx, jz = lhs_statistics(model, four, comp)
            for alpha in (0.5, 1.0, 2.0):
                assert bound - steering_lhs(jx, jz, alpha) <= 1e-9

    def test_dimension_mismatch(self):
        model = sample_lhs_model(1, 2, 2)
        comp3, four3 = mub_pair(3)
        with pytest.raises(ValueError):
            lhs_statistics(model, four3, comp3)
