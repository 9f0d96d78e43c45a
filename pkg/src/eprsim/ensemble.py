"""Averaging over the random shared quantization axis.

A decohered pair's axis is uniform over a sphere (spin-1/2 pairs, which
are isotropic in all three directions) or over the circle transverse to
the propagation line (photon pairs, whose helicity axis lies along the
propagation direction). Closed-form ensemble averages carry the
characteristic 1/3 and 1/2 prefactors; the seeded Monte Carlo estimators
here must converge to them.

Determinism contract: every estimate is a pure function of
``(seed, n_samples, parameters)``. Worker count and scheduling never
change a single bit of the result (see ``_rng``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._rng import map_chunks, validate_seed
from .core import unit_vector3
from .correlations import AnalyzerPair
from .states import DirectionAxis

__all__ = [
    "SPHERE",
    "TRANSVERSE_CIRCLE",
    "EnsembleGeometry",
    "McEstimate",
    "sample_axis",
    "sample_axis_vectors",
    "analytic_average_correlation",
    "mc_average_correlation",
    "mc_average_singles",
    "averaged_correlation_model",
]

SPHERE = "sphere"
TRANSVERSE_CIRCLE = "transverse_circle"

_IN_PLANE_TOL = 1e-9


def _transverse_frame(n: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Orthonormal in-plane basis perpendicular to ``n``.

    The propagation axis (0, 0, 1) maps to the exact x and y unit vectors
    so that transverse samples have an exactly zero third component.
    """
    if n[0] == 0.0 and n[1] == 0.0:
        e1 = np.array([1.0, 0.0, 0.0])
        e2 = np.array([0.0, 1.0, 0.0]) * (1.0 if n[2] > 0 else -1.0)
        return e1, e2
    helper = np.array([0.0, 0.0, 1.0])
    e1 = np.cross(helper, n)
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(n, e1)
    e2 /= np.linalg.norm(e2)
    return e1, e2


@dataclass(frozen=True, eq=False)
class EnsembleGeometry:
    """Distribution of the shared axis: full sphere or transverse circle.

    ``propagation_axis`` (default z) matters only for the transverse
    circle, which samples the plane perpendicular to it.
    """

    kind: str
    propagation_axis: np.ndarray | None = None

    def __post_init__(self) -> None:
        if self.kind not in (SPHERE, TRANSVERSE_CIRCLE):
            raise ValueError(
                f"kind must be 'sphere' or 'transverse_circle', got {self.kind!r}"
            )
        axis = self.propagation_axis
        axis = np.array([0.0, 0.0, 1.0]) if axis is None else unit_vector3(
            axis, name="propagation_axis"
        )
        axis.setflags(write=False)
        object.__setattr__(self, "propagation_axis", axis)

    @classmethod
    def sphere(cls) -> "EnsembleGeometry":
        return cls(SPHERE)

    @classmethod
    def transverse_circle(cls, propagation_axis=None) -> "EnsembleGeometry":
        return cls(TRANSVERSE_CIRCLE, propagation_axis)


@dataclass(frozen=True)
class McEstimate:
    """Monte Carlo sample mean with its standard error.

    Reproducible: identical (seed, n_samples, parameters) give a
    bit-identical mean regardless of worker count.
    """

    mean: float
    std_error: float
    n_samples: int
    seed: int


def sample_axis_vectors(
    geometry: EnsembleGeometry, rng: np.random.Generator, count: int
) -> np.ndarray:
    """Draw ``count`` axis unit vectors as a (count, 3) array.

    Sphere: the polar cosine is uniform on [-1, 1] and the azimuth uniform
    on [0, 2*pi). Transverse circle: a uniform angle in the plane
    perpendicular to the propagation axis.
    """
    if geometry.kind == SPHERE:
        z = 2.0 * rng.random(count) - 1.0
        phi = 2.0 * math.pi * rng.random(count)
        r = np.sqrt(np.maximum(0.0, 1.0 - z * z))
        return np.column_stack([r * np.cos(phi), r * np.sin(phi), z])
    e1, e2 = _transverse_frame(geometry.propagation_axis)
    chi = 2.0 * math.pi * rng.random(count)
    return np.outer(np.cos(chi), e1) + np.outer(np.sin(chi), e2)


def sample_axis(geometry: EnsembleGeometry, rng: np.random.Generator) -> DirectionAxis:
    """Draw one random axis from the geometry's distribution."""
    vec = sample_axis_vectors(geometry, rng, 1)[0]
    return DirectionAxis.from_vector(vec)


def _require_transverse(vec: np.ndarray, n: np.ndarray, name: str) -> None:
    if abs(float(np.dot(vec, n))) > _IN_PLANE_TOL:
        raise ValueError(
            f"analyzer {name} must lie in the plane transverse to the propagation axis"
        )


def analytic_average_correlation(pair: AnalyzerPair, geometry: EnsembleGeometry) -> float:
    """Closed-form axis-averaged correlation.

    Sphere: -(1/3) a.b. Transverse circle: the average of the axis dyad is
    half the projector onto the transverse plane, giving -(1/2) a.b for
    in-plane analyzers; out-of-plane analyzers are rejected because the
    1/2 form assumes the longitudinal term vanishes.
    """
    if geometry.kind == SPHERE:
        return -float(np.dot(pair.a, pair.b)) / 3.0
    n = geometry.propagation_axis
    _require_transverse(pair.a, n, "a")
    _require_transverse(pair.b, n, "b")
    longitudinal = float(np.dot(pair.a, n)) * float(np.dot(n, pair.b))
    return -0.5 * (float(np.dot(pair.a, pair.b)) - longitudinal)


def _summarize(chunks: list[tuple[float, float]], n: int, seed: int) -> McEstimate:
    total = math.fsum(c[0] for c in chunks)
    total_sq = math.fsum(c[1] for c in chunks)
    mean = total / n
    if n > 1:
        variance = max(0.0, (total_sq - n * mean * mean) / (n - 1))
        std_error = math.sqrt(variance / n)
    else:
        std_error = 0.0
    return McEstimate(mean=mean, std_error=std_error, n_samples=n, seed=seed)


def mc_average_correlation(
    pair: AnalyzerPair,
    geometry: EnsembleGeometry,
    n_samples: int,
    seed: int,
    workers: int | None = None,
) -> McEstimate:
    """Monte Carlo estimate of the axis-averaged correlation.

    Each drawn axis P contributes the fixed-axis correlation
    -(a.P)(P.b); the mean converges to ``analytic_average_correlation``.
    """
    seed = validate_seed(seed)
    a = pair.a
    b = pair.b

    def chunk(rng: np.random.Generator, count: int) -> tuple[float, float]:
        axes = sample_axis_vectors(geometry, rng, count)
        values = -(axes @ a) * (axes @ b)
        return float(values.sum()), float((values * values).sum())

    return _summarize(map_chunks(chunk, n_samples, seed, workers), n_samples, seed)


def mc_average_singles(
    geometry: EnsembleGeometry,
    analyzer,
    which_particle: int,
    n_samples: int,
    seed: int,
    workers: int | None = None,
) -> McEstimate:
    """Monte Carlo estimate of the axis-averaged one-particle expectation.

    For every axis the decohered pair is an equal mixture of the two
    opposite branches, whose one-particle expectations are exactly
    opposite; the per-axis value therefore cancels to exactly zero, and so
    do the mean and standard error.
    """
    seed = validate_seed(seed)
    a = unit_vector3(analyzer, name="analyzer")
    if which_particle not in (1, 2):
        raise ValueError(f"which_particle must be 1 or 2, got {which_particle!r}")
    branch_sign = +1.0 if which_particle == 1 else -1.0

    def chunk(rng: np.random.Generator, count: int) -> tuple[float, float]:
        axes = sample_axis_vectors(geometry, rng, count)
        up_branch = branch_sign * (axes @ a)
        # Equal weights of the two opposite branches cancel exactly.
        values = 0.5 * up_branch - 0.5 * up_branch
        return float(values.sum()), float((values * values).sum())

    return _summarize(map_chunks(chunk, n_samples, seed, workers), n_samples, seed)


def averaged_correlation_model(geometry: EnsembleGeometry):
    """Correlation function E(a, b) of the axis-averaged decohered pair."""

    def model(a, b) -> float:
        return analytic_average_correlation(AnalyzerPair(a, b), geometry)

    return model
