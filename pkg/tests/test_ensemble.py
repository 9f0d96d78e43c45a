"""Axis sampling, closed-form ensemble averages, and the seeded Monte Carlo
estimators that must converge to them."""

import math

import numpy as np
import pytest

from eprsim import (
    AnalyzerPair,
    EnsembleGeometry,
    analytic_average_correlation,
    averaged_correlation_model,
    correlation,
    disentangled_joint_probabilities_fixed_axis,
    mc_average_correlation,
    mc_average_singles,
    sample_axis,
    sample_axis_vectors,
)
from eprsim._rng import substream

N_BIG = 10**6


def planar_pair(theta):
    return AnalyzerPair([1, 0, 0], [math.cos(theta), math.sin(theta), 0])


class TestSampling:
    def test_sphere_component_means_vanish(self):
        rng = substream(2024, 0)
        vecs = sample_axis_vectors(EnsembleGeometry.sphere(), rng, N_BIG)
        # Law of large numbers: component means are 0 with std 1/sqrt(3n).
        band = 4.0 / math.sqrt(3 * N_BIG)
        assert np.all(np.abs(vecs.mean(axis=0)) < band)

    def test_sphere_z_squared_mean_is_one_third(self):
        rng = substream(2024, 1)
        vecs = sample_axis_vectors(EnsembleGeometry.sphere(), rng, N_BIG)
        z2 = vecs[:, 2] ** 2
        band = 4.0 * z2.std() / math.sqrt(N_BIG)
        assert abs(z2.mean() - 1.0 / 3.0) < band

    def test_sphere_second_moment_matrix(self):
        rng = substream(2024, 2)
        vecs = sample_axis_vectors(EnsembleGeometry.sphere(), rng, N_BIG)
        for i in range(3):
            for j in range(3):
                products = vecs[:, i] * vecs[:, j]
                target = 1.0 / 3.0 if i == j else 0.0
                band = 4.0 * products.std() / math.sqrt(N_BIG)
                assert abs(products.mean() - target) < band

    def test_transverse_samples_have_exactly_zero_z(self):
        rng = substream(2024, 3)
        vecs = sample_axis_vectors(EnsembleGeometry.transverse_circle(), rng, 10**4)
        assert np.all(vecs[:, 2] == 0.0)
        np.testing.assert_allclose(np.linalg.norm(vecs, axis=1), 1.0, atol=1e-12)

    def test_transverse_second_moment_matrix(self):
        rng = substream(2024, 4)
        vecs = sample_axis_vectors(EnsembleGeometry.transverse_circle(), rng, N_BIG)
        target = 0.5 * np.diag([1.0, 1.0, 0.0])
        for i in range(3):
            for j in range(3):
                products = vecs[:, i] * vecs[:, j]
                band = 4.0 * products.std() / math.sqrt(N_BIG) + 1e-12
                assert abs(products.mean() - target[i, j]) < band

    def test_transverse_general_axis_is_orthogonal(self):
        n = np.array([1.0, 2.0, 2.0]) / 3.0
        geometry = EnsembleGeometry.transverse_circle(n)
        rng = substream(2024, 5)
        vecs = sample_axis_vectors(geometry, rng, 1000)
        assert np.max(np.abs(vecs @ n)) < 1e-12

    def test_single_draw_matches_batch_stream(self):
        geometry = EnsembleGeometry.sphere()
        axis = sample_axis(geometry, substream(99, 0))
        batch = sample_axis_vectors(geometry, substream(99, 0), 1)[0]
        np.testing.assert_array_equal(axis.unit_vector, batch)


class TestAnalyticAverage:
    def test_sphere_aligned(self):
        assert analytic_average_correlation(
            planar_pair(0.0), EnsembleGeometry.sphere()
        ) == pytest.approx(-1.0 / 3.0, abs=1e-15)

    def test_transverse_aligned(self):
        assert analytic_average_correlation(
            planar_pair(0.0), EnsembleGeometry.transverse_circle()
        ) == pytest.approx(-0.5, abs=1e-15)

    def test_perpendicular_analyzers_give_zero(self):
        pair = planar_pair(math.pi / 2)
        assert analytic_average_correlation(pair, EnsembleGeometry.sphere()) == pytest.approx(
            0.0, abs=1e-15
        )
        assert analytic_average_correlation(
            pair, EnsembleGeometry.transverse_circle()
        ) == pytest.approx(0.0, abs=1e-15)

    def test_transverse_equals_half_cosine_exactly(self):
        for theta in np.linspace(0.0, math.pi, 37):
            pair = planar_pair(float(theta))
            value = analytic_average_correlation(pair, EnsembleGeometry.transverse_circle())
            assert value == -0.5 * pair.cos_theta_ab

    def test_transverse_rejects_out_of_plane_analyzers(self):
        pair = AnalyzerPair([0, 0, 1], [1, 0, 0])
        with pytest.raises(ValueError, match="transverse"):
            analytic_average_correlation(pair, EnsembleGeometry.transverse_circle())

    def test_model_factory(self):
        model = averaged_correlation_model(EnsembleGeometry.sphere())
        assert model([1, 0, 0], [1, 0, 0]) == pytest.approx(-1.0 / 3.0, abs=1e-15)


class TestMcCorrelation:
    def test_sphere_converges_to_one_third(self):
        est = mc_average_correlation(
            planar_pair(0.0), EnsembleGeometry.sphere(), N_BIG, seed=2025
        )
        assert est.std_error < 5e-4
        assert abs(est.mean + 1.0 / 3.0) < 3.0 * est.std_error

    def test_transverse_converges_at_sixty_degrees(self):
        est = mc_average_correlation(
            planar_pair(math.pi / 3), EnsembleGeometry.transverse_circle(), N_BIG, seed=2025
        )
        assert abs(est.mean + 0.25) < 3.0 * est.std_error

    def test_single_sample_equals_fixed_axis_correlation(self):
        geometry = EnsembleGeometry.sphere()
        pair = planar_pair(1.0)
        est = mc_average_correlation(pair, geometry, 1, seed=31337)
        axis = sample_axis(geometry, substream(31337, 0))
        expected = correlation(disentangled_joint_probabilities_fixed_axis(pair, axis))
        assert est.mean == pytest.approx(expected, abs=1e-12)
        assert est.std_error == 0.0
        assert est.n_samples == 1

    def test_bitwise_deterministic_and_worker_independent(self):
        pair = planar_pair(0.7)
        geometry = EnsembleGeometry.sphere()
        baseline = mc_average_correlation(pair, geometry, 200_000, seed=8)
        rerun = mc_average_correlation(pair, geometry, 200_000, seed=8)
        threaded = mc_average_correlation(pair, geometry, 200_000, seed=8, workers=4)
        assert baseline == rerun
        assert baseline == threaded

    def test_statistical_soundness_sweep(self):
        # Normalized deviation from the closed form stays inside 4 sigma
        # across a 50-case sweep of analyzers and geometries.
        rng = np.random.default_rng(97)
        for case in range(50):
            theta = float(rng.uniform(0.0, math.pi))
            pair = planar_pair(theta)
            if case % 2 == 0:
                geometry = EnsembleGeometry.sphere()
            else:
                geometry = EnsembleGeometry.transverse_circle()
            est = mc_average_correlation(pair, geometry, 10_000, seed=1000 + case)
            target = analytic_average_correlation(pair, geometry)
            assert abs(est.mean - target) < 4.0 * est.std_error

    def test_seed_validation(self):
        with pytest.raises(ValueError, match="seed"):
            mc_average_correlation(planar_pair(0.0), EnsembleGeometry.sphere(), 10, seed=-1)
        with pytest.raises(ValueError, match="sample"):
            mc_average_correlation(planar_pair(0.0), EnsembleGeometry.sphere(), 0, seed=1)


class TestMcSingles:
    def test_sphere_average_is_exactly_zero(self):
        est = mc_average_singles(EnsembleGeometry.sphere(), [0, 0, 1], 1, 10**5, seed=5)
        assert est.mean == 0.0
        assert est.std_error == 0.0
        assert abs(est.mean) <= 3.0 * est.std_error

    def test_transverse_average_is_exactly_zero(self):
        est = mc_average_singles(
            EnsembleGeometry.transverse_circle(), [1, 0, 0], 2, 10**5, seed=5
        )
        assert est.mean == 0.0
        assert abs(est.mean) <= 3.0 * est.std_error

    def test_single_sample_mixture_marginal_is_zero(self):
        est = mc_average_singles(EnsembleGeometry.sphere(), [0, 0, 1], 1, 1, seed=5)
        assert est.mean == 0.0
