"""CHSH statistic over any correlation model and optimal-settings search.

The statistic is S = E(a,b) - E(a,b') + E(a',b) + E(a',b'); the sign
placement is a fixed convention, equivalent to any other under relabeling
of settings. |S| <= 2 for any classical (non-interfering) model and
reaches 2*sqrt(2) for the entangled singlet; for a model of the form
E = -k cos(theta) the optimum is 2*sqrt(2)*k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.optimize import minimize

from .core import unit_vector3

__all__ = [
    "CLASSICAL_BOUND",
    "TSIRELSON_BOUND",
    "ChshSettings",
    "cosine_optimal_settings",
    "chsh_value",
    "optimize_settings",
    "ViolationReport",
    "violation_report",
]

CLASSICAL_BOUND = 2.0
TSIRELSON_BOUND = 2.0 * math.sqrt(2.0)

_VIOLATION_MARGIN = 1e-9

CorrelationModel = Callable[[np.ndarray, np.ndarray], float]


@dataclass(frozen=True, eq=False)
class ChshSettings:
    """Four analyzer settings: a, a' on one side and b, b' on the other."""

    a: np.ndarray
    a_prime: np.ndarray
    b: np.ndarray
    b_prime: np.ndarray

    def __post_init__(self) -> None:
        for name in ("a", "a_prime", "b", "b_prime"):
            vec = unit_vector3(getattr(self, name), name=name)
            vec.setflags(write=False)
            object.__setattr__(self, name, vec)

    @classmethod
    def from_planar_angles(
        cls, a: float, a_prime: float, b: float, b_prime: float
    ) -> "ChshSettings":
        """Settings in the xy-plane, each given by its angle from the x axis."""
        return cls(*(_planar_vector(t) for t in (a, a_prime, b, b_prime)))


def _planar_vector(angle: float) -> np.ndarray:
    return np.array([math.cos(angle), math.sin(angle), 0.0])


def cosine_optimal_settings() -> ChshSettings:
    """Planar settings maximizing S for any model E = -k cos(theta), k > 0."""
    return ChshSettings.from_planar_angles(
        0.0, math.pi / 2.0, 5.0 * math.pi / 4.0, 7.0 * math.pi / 4.0
    )


def chsh_value(model: CorrelationModel, settings: ChshSettings) -> float:
    """S = E(a,b) - E(a,b') + E(a',b) + E(a',b')."""
    return (
        model(settings.a, settings.b)
        - model(settings.a, settings.b_prime)
        + model(settings.a_prime, settings.b)
        + model(settings.a_prime, settings.b_prime)
    )


def _spherical_vector(theta: float, phi: float) -> np.ndarray:
    st = math.sin(theta)
    return np.array([st * math.cos(phi), st * math.sin(phi), math.cos(theta)])


def optimize_settings(
    model: CorrelationModel,
    restricted_to_plane: bool = True,
    grid_points: int = 24,
) -> tuple[ChshSettings, float]:
    """Maximize |S| over analyzer settings.

    Coarse grid search over planar (xy-plane) angles, ties broken by lowest
    grid index, followed by local refinement; with
    ``restricted_to_plane=False`` the refinement stage may leave the plane.
    Returns the best settings and s_max = |S| at them.
    """
    angles = np.linspace(0.0, 2.0 * math.pi, grid_points, endpoint=False)
    vectors = [_planar_vector(t) for t in angles]
    e = np.array([[model(va, vb) for vb in vectors] for va in vectors])
    # S over all (a, a', b, b') grid combinations via broadcasting.
    s = (
        e[:, None, :, None]
        - e[:, None, None, :]
        + e[None, :, :, None]
        + e[None, :, None, :]
    )
    flat_best = int(np.argmax(np.abs(s)))
    ia, iap, ib, ibp = np.unravel_index(flat_best, s.shape)
    start = [angles[ia], angles[iap], angles[ib], angles[ibp]]

    if restricted_to_plane:
        def objective(x: np.ndarray) -> float:
            vs = [_planar_vector(t) for t in x]
            return -abs(
                model(vs[0], vs[2])
                - model(vs[0], vs[3])
                + model(vs[1], vs[2])
                + model(vs[1], vs[3])
            )

        x0 = np.array(start)
    else:
        def objective(x: np.ndarray) -> float:
            vs = [_spherical_vector(x[2 * i], x[2 * i + 1]) for i in range(4)]
            return -abs(
                model(vs[0], vs[2])
                - model(vs[0], vs[3])
                + model(vs[1], vs[2])
                + model(vs[1], vs[3])
            )

        x0 = np.array([v for t in start for v in (math.pi / 2.0, t)])

    result = minimize(
        objective,
        x0,
        method="Nelder-Mead",
        options={"xatol": 1e-10, "fatol": 1e-13, "maxiter": 20000, "maxfev": 20000},
    )
    best = result.x if result.fun <= objective(x0) else x0
    if restricted_to_plane:
        settings = ChshSettings.from_planar_angles(*best)
    else:
        settings = ChshSettings(
            *(_spherical_vector(best[2 * i], best[2 * i + 1]) for i in range(4))
        )
    return settings, abs(chsh_value(model, settings))


@dataclass(frozen=True)
class ViolationReport:
    """CHSH statistic against the classical and quantum bounds."""

    s: float
    classical_bound: float
    tsirelson_bound: float
    violates: bool


def violation_report(model: CorrelationModel, settings: ChshSettings) -> ViolationReport:
    """Evaluate S and compare |S| with the classical bound."""
    s = chsh_value(model, settings)
    return ViolationReport(
        s=s,
        classical_bound=CLASSICAL_BOUND,
        tsirelson_bound=TSIRELSON_BOUND,
        violates=abs(s) > CLASSICAL_BOUND + _VIOLATION_MARGIN,
    )
