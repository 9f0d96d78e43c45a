"""CHSH statistic, settings optimization, and the violation contrast."""

import math

import numpy as np
import pytest

from eprsim import (
    AnalyzerPair,
    ChshSettings,
    EnsembleGeometry,
    TSIRELSON_BOUND,
    averaged_correlation_model,
    chsh_value,
    cosine_optimal_settings,
    entangled_correlation_model,
    mc_average_correlation,
    optimize_settings,
    violation_report,
)

SQRT2 = math.sqrt(2.0)


def scaled_model(k):
    def model(a, b):
        return -k * float(np.dot(a, b))

    return model


def grid_oracle_max(k, points=60):
    """Independent brute-force planar grid search for E = -k cos."""
    angles = np.linspace(0.0, 2 * math.pi, points, endpoint=False)
    best = 0.0
    e = -k * np.cos(angles[:, None] - angles[None, :])
    for ia in range(points):
        for iap in range(points):
            s = (
                e[ia, :, None]
                - e[ia, None, :]
                + e[iap, :, None]
                + e[iap, None, :]
            )
            best = max(best, float(np.max(np.abs(s))))
    return best


class TestChshValue:
    def test_entangled_at_reference_planar_angles(self):
        # Angle set located by an independent grid search: (0, pi/2) against
        # (pi/4, 3pi/4) extremizes |S| for the singlet.
        settings = ChshSettings.from_planar_angles(
            0.0, math.pi / 2.0, math.pi / 4.0, 3.0 * math.pi / 4.0
        )
        s = chsh_value(entangled_correlation_model(), settings)
        assert abs(s) == pytest.approx(2.0 * SQRT2, abs=1e-9)

    def test_disentangled_at_the_same_angles(self):
        settings = ChshSettings.from_planar_angles(
            0.0, math.pi / 2.0, math.pi / 4.0, 3.0 * math.pi / 4.0
        )
        model = averaged_correlation_model(EnsembleGeometry.transverse_circle())
        assert abs(chsh_value(model, settings)) == pytest.approx(SQRT2, abs=1e-9)

    def test_cosine_optimal_settings_give_positive_s(self):
        s = chsh_value(entangled_correlation_model(), cosine_optimal_settings())
        assert s == pytest.approx(2.0 * SQRT2, abs=1e-9)

    def test_degenerate_settings_cannot_exceed_two(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            t1, t2 = rng.uniform(0, 2 * math.pi, size=2)
            settings = ChshSettings.from_planar_angles(t1, t1, t2, t2)
            s = chsh_value(entangled_correlation_model(), settings)
            assert abs(s) <= 2.0 + 1e-12
            pair = AnalyzerPair(settings.a, settings.b)
            assert s == pytest.approx(-2.0 * pair.cos_theta_ab, abs=1e-12)


class TestOptimizer:
    @pytest.mark.parametrize("k,target", [(1.0, 2.0 * SQRT2), (0.5, SQRT2), (1.0 / 3.0, 2.0 * SQRT2 / 3.0)])
    def test_scaled_cosine_models(self, k, target):
        _, s_max = optimize_settings(scaled_model(k))
        assert s_max == pytest.approx(target, abs=1e-6)

    def test_matches_independent_grid_oracle(self):
        oracle = grid_oracle_max(1.0)
        _, s_max = optimize_settings(scaled_model(1.0))
        assert s_max >= oracle - 1e-9
        assert oracle == pytest.approx(2.0 * SQRT2, abs=0.02)

    def test_entangled_and_disentangled_library_models(self):
        _, s_ent = optimize_settings(entangled_correlation_model())
        assert s_ent == pytest.approx(2.0 * SQRT2, abs=1e-6)
        photon = averaged_correlation_model(EnsembleGeometry.transverse_circle())
        _, s_dis = optimize_settings(photon)
        assert s_dis == pytest.approx(SQRT2, abs=1e-6)
        sphere = averaged_correlation_model(EnsembleGeometry.sphere())
        _, s_fermion = optimize_settings(sphere)
        assert s_fermion == pytest.approx(2.0 * SQRT2 / 3.0, abs=1e-6)

    def test_linearity_of_the_optimum_in_the_scale(self):
        _, base = optimize_settings(scaled_model(1.0))
        for k in (0.5, 1.0 / 3.0):
            _, scaled = optimize_settings(scaled_model(k))
            assert scaled == pytest.approx(k * base, abs=1e-6)

    def test_never_exceeds_tsirelson(self):
        _, s_max = optimize_settings(scaled_model(1.0))
        assert s_max <= TSIRELSON_BOUND + 1e-6

    def test_unrestricted_refinement_reaches_the_same_optimum(self):
        _, s_max = optimize_settings(entangled_correlation_model(), restricted_to_plane=False)
        assert s_max == pytest.approx(2.0 * SQRT2, abs=1e-6)


class TestViolationReport:
    def test_entangled_violates(self):
        report = violation_report(entangled_correlation_model(), cosine_optimal_settings())
        assert report.violates
        assert report.classical_bound == 2.0
        assert report.tsirelson_bound == pytest.approx(2.0 * SQRT2)

    def test_disentangled_does_not_violate(self):
        model = averaged_correlation_model(EnsembleGeometry.transverse_circle())
        report = violation_report(model, cosine_optimal_settings())
        assert not report.violates
        assert abs(report.s) == pytest.approx(SQRT2, abs=1e-9)

    def test_null_model(self):
        report = violation_report(lambda a, b: 0.0, cosine_optimal_settings())
        assert report.s == 0.0
        assert not report.violates


class TestMcConsistency:
    def test_chsh_from_mc_estimates_matches_analytic(self):
        geometry = EnsembleGeometry.transverse_circle()
        model = averaged_correlation_model(geometry)
        settings = cosine_optimal_settings()
        pairs = [
            (settings.a, settings.b),
            (settings.a, settings.b_prime),
            (settings.a_prime, settings.b),
            (settings.a_prime, settings.b_prime),
        ]
        signs = (1.0, -1.0, 1.0, 1.0)
        s_mc = 0.0
        variance = 0.0
        for index, ((va, vb), sign) in enumerate(zip(pairs, signs)):
            est = mc_average_correlation(
                AnalyzerPair(va, vb), geometry, 10**6, seed=710 + index
            )
            s_mc += sign * est.mean
            variance += est.std_error**2
        s_analytic = chsh_value(model, settings)
        assert abs(s_mc - s_analytic) < 4.0 * math.sqrt(variance)
