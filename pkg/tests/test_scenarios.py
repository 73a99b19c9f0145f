import math

import numpy as np
import pytest

from qsteer.entropy import dual_order
from qsteer.jointmeas import mub_jm_threshold_symmetric, renyi_mub_threshold_symmetric
from qsteer.qobj import depolarize, joint_distribution, max_entangled_state, mub_pair
from qsteer.scenarios import (
    alpha_optimality_check,
    d3_family_scan,
    fig1_scan,
    lhs_falsification_suite,
    mub_pipeline_threshold,
    qubit_angle_scan,
    qubit_random_povm_check,
)
from qsteer.steering import evaluate


class TestPipelineFormulaEquivalence:
    @pytest.mark.parametrize("d", [2, 3, 5])
    @pytest.mark.parametrize("v", [0.0, 0.3, 0.7071, 1.0])
    def test_conditionals_match_closed_form(self, d, v):
        rho = max_entangled_state(d)
        comp, four = mub_pair(d)
        jz = joint_distribution(rho, depolarize(comp, v), comp).table
        expected = np.full((d, d), (1 - v) / d**2)
        expected[np.arange(d), np.arange(d)] += v / d
        assert np.abs(jz - expected).max() < 1e-12

        jx = joint_distribution(rho, depolarize(four, v), four).table
        expected = np.full((d, d), (1 - v) / d**2)
        expected[np.arange(d), (-np.arange(d)) % d] += v / d
        assert np.abs(jx - expected).max() < 1e-12

    @pytest.mark.parametrize("d", [2, 3, 5])
    def test_pipeline_reproduces_formula_threshold(self, d):
        pipeline = mub_pipeline_threshold(d, 0.5, tol=1e-7)
        formula = renyi_mub_threshold_symmetric(d, tol=1e-9)
        assert pipeline == pytest.approx(formula, abs=2e-7)


class TestFig1Scan:
    def test_structure_and_sufficiency(self):
        scan = fig1_scan(range(2, 5), [0.5, 1.0], tol=1e-6)
        assert len(scan.records) == 6
        params = [r.parameter for r in scan.records]
        assert params == sorted(params)
        for rec in scan.records:
            assert rec.gap is not None and rec.gap >= -1e-9

    def test_half_alpha_rows_are_tight(self):
        scan = fig1_scan(range(2, 6), [0.5], tol=5e-7)
        for rec in scan.records:
            assert rec.gap <= 1e-6

    def test_shannon_rows_strictly_above(self):
        scan = fig1_scan([4], [0.5, 1.0], tol=1e-6)
        by_alpha = {r.alpha: r.detected for r in scan.records}
        assert by_alpha[1.0] - by_alpha[0.5] > 1e-4

    def test_metadata_complete(self):
        scan = fig1_scan([2], [0.5], tol=1e-6)
        for key in ("scenario", "parameter_name", "alphas", "betas", "grid", "tol", "seed"):
            assert key in scan.metadata

    def test_rejects_alpha_below_half(self):
        with pytest.raises(ValueError):
            fig1_scan([2], [0.4])


class TestBisectionStability:
    @pytest.mark.parametrize("alpha", [0.5, 1.0])
    def test_threshold_stable_under_tol_halving(self, alpha):
        coarse = mub_pipeline_threshold(2, alpha, tol=1e-6)
        fine = mub_pipeline_threshold(2, alpha, tol=5e-7)
        assert abs(coarse - fine) <= 1e-6


class TestAlphaOptimality:
    def test_grid_extremes(self):
        scan = alpha_optimality_check(3, [0.5, 0.7, 1.0, 2.0, math.inf], tol=1e-6)
        by_alpha = {r.parameter: r.detected for r in scan.records}
        top = max(by_alpha.values())
        bottom = min(by_alpha.values())
        assert by_alpha[1.0] == pytest.approx(top, abs=2e-6)
        assert by_alpha[0.5] == pytest.approx(bottom, abs=2e-6)
        assert by_alpha[0.5] == pytest.approx(mub_jm_threshold_symmetric(3), abs=2e-6)

    def test_requires_anchor_orders(self):
        with pytest.raises(ValueError):
            alpha_optimality_check(3, [0.5, 1.0])  # missing inf

    def test_dual_symmetry_under_measurement_swap(self):
        rho = max_entangled_state(3)
        comp, four = mub_pair(3)
        v = 0.72
        for alpha in (0.7, 2.0, 5.0):
            direct = evaluate(
                rho, depolarize(four, v), depolarize(comp, v), four, comp, alpha
            )
            swapped = evaluate(
                rho, depolarize(comp, v), depolarize(four, v), comp, four, dual_order(alpha)
            )
            assert direct.lhs == pytest.approx(swapped.lhs, abs=1e-12)
            assert direct.violation == pytest.approx(swapped.violation, abs=1e-12)


class TestQubitAngleScan:
    def test_matches_both_formulas(self):
        thetas = np.linspace(0.0, 0.7, 6)
        scan = qubit_angle_scan(thetas, tol=1e-6)
        for rec in scan.records:
            formula = 1.0 / (math.sqrt(2.0) * math.cos(rec.parameter))
            assert rec.detected == pytest.approx(formula, abs=1e-5)
            assert rec.detected == pytest.approx(rec.exact, abs=1e-5)
            assert rec.gap >= -1e-9

    def test_theta_range_enforced(self):
        with pytest.raises(ValueError):
            qubit_angle_scan([math.pi / 4])


class TestQubitRandomPovmCheck:
    @pytest.fixture(scope="class")
    def scan(self):
        return qubit_random_povm_check(n_cases=6, seed=7, tol=1e-6)

    def test_unbiased_symmetric_cases_tight(self, scan):
        for rec, case in zip(scan.records, scan.metadata["cases"]):
            if case["kind"] == "unbiased-symmetric":
                assert rec.gap is not None and rec.gap <= 1e-5

    def test_sufficiency_on_unbiased_cases(self, scan):
        for rec, case in zip(scan.records, scan.metadata["cases"]):
            if case["kind"].startswith("unbiased"):
                assert rec.exact is not None
                assert rec.detected >= rec.exact - 1e-9

    def test_biased_cases_report_without_exact(self, scan):
        kinds = [c["kind"] for c in scan.metadata["cases"]]
        assert "biased" in kinds
        for rec, case in zip(scan.records, scan.metadata["cases"]):
            if case["kind"] == "biased":
                assert rec.exact is None

    def test_baseline_gap_reported(self, scan):
        for case in scan.metadata["cases"]:
            assert case["gap_vs_baseline"] <= 1e-9  # optimizer never loses to its start

    def test_seed_reproducible(self, scan):
        again = qubit_random_povm_check(n_cases=6, seed=7, tol=1e-6)
        for a, b in zip(scan.records, again.records):
            assert a.detected == b.detected and a.exact == b.exact


class TestD3FamilyScan:
    @pytest.fixture(scope="class")
    def scan(self):
        return d3_family_scan(np.linspace(0.0, 0.5, 6), tol=1e-6)

    def test_mub_endpoint(self, scan):
        assert scan.records[0].detected == pytest.approx(
            mub_jm_threshold_symmetric(3), abs=1e-5
        )

    def test_coincident_endpoint_never_detects(self, scan):
        last = scan.records[-1]
        assert last.saturated and last.detected == 1.0 and last.exact == 1.0

    def test_detected_nondecreasing(self, scan):
        detected = [r.detected for r in scan.records]
        assert all(b >= a - 2e-6 for a, b in zip(detected, detected[1:]))

    def test_interior_exact_unknown(self, scan):
        for rec in scan.records[1:-1]:
            assert rec.exact is None

    def test_refinement_never_hurts(self):
        grid = [0.2]
        plain = d3_family_scan(grid, tol=1e-5)
        refined = d3_family_scan(grid, tol=1e-5, refine_bob=True, refine_restarts=1)
        assert refined.records[0].detected <= plain.records[0].detected + 1e-5

    def test_grid_validation(self):
        with pytest.raises(ValueError):
            d3_family_scan([0.7])


class TestLhsFalsification:
    def test_no_violations_and_reproducible(self):
        report = lhs_falsification_suite(seed=42, n_models=400)
        assert report.max_violation <= 1e-9
        again = lhs_falsification_suite(seed=42, n_models=400)
        assert report.max_violation == again.max_violation
        assert report.worst_case == again.worst_case

    def test_single_deterministic_model_has_margin(self):
        report = lhs_falsification_suite(seed=1, n_models=1, dims=(2,))
        assert report.max_violation < 0.0

    def test_dims_split(self):
        report = lhs_falsification_suite(seed=3, n_models=10)
        assert report.n_models == 10
        assert report.dims == (2, 3)
