"""Detection probabilities and correlation functions for a separated pair.

Closed forms for the entangled singlet and for the decohered
(axis-definite) mixture, before any averaging over the random axis. The
joint-probability routines evaluate both the closed form and the Born rule
(trace against projectors) and refuse to return if the two disagree; the
dual path is the correctness check.

Particle 1 always belongs to analyzer ``a`` and particle 2 to analyzer
``b``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import tensor_product, unit_vector3
from .disentangle import disentangled_mixture
from .states import DirectionAxis, epr_density, pauli_projection, spin_projector, spinor

__all__ = [
    "FERMION",
    "PHOTON",
    "AnalyzerPair",
    "JointProbabilities",
    "correlation",
    "polarizer_angle_to_pair_angle",
    "single_probabilities",
    "single_probabilities_from_spinor",
    "entangled_expectations",
    "entangled_joint_probabilities",
    "disentangled_joint_probabilities_fixed_axis",
    "born_joint_probabilities",
    "entangled_correlation_model",
]

FERMION = "fermion"
PHOTON = "photon"

_DUAL_PATH_TOL = 1e-12
_PROB_SUM_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class AnalyzerPair:
    """Two analyzer orientations ``a`` and ``b`` (unit 3-vectors).

    ``kind`` records the particle species. It selects the averaging
    geometry used elsewhere (sphere for fermions, transverse circle for
    photons) and whether reported polarizer angles are doubled at the
    interface; the vector computations here are identical for both.
    """

    a: np.ndarray
    b: np.ndarray
    kind: str = FERMION

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", unit_vector3(self.a, name="analyzer a"))
        object.__setattr__(self, "b", unit_vector3(self.b, name="analyzer b"))
        self.a.setflags(write=False)
        self.b.setflags(write=False)
        if self.kind not in (FERMION, PHOTON):
            raise ValueError(f"kind must be 'fermion' or 'photon', got {self.kind!r}")

    @property
    def cos_theta_ab(self) -> float:
        return float(np.dot(self.a, self.b))

    @property
    def theta_ab(self) -> float:
        return math.acos(min(1.0, max(-1.0, self.cos_theta_ab)))


@dataclass(frozen=True)
class JointProbabilities:
    """The four coincidence probabilities (++, +-, -+, --); they sum to 1."""

    p_pp: float
    p_pm: float
    p_mp: float
    p_mm: float

    def __post_init__(self) -> None:
        values = self.as_array()
        if np.any(values < -_PROB_SUM_TOL) or np.any(values > 1.0 + _PROB_SUM_TOL):
            raise ValueError(f"probabilities out of [0, 1]: {values}")
        total = float(values.sum())
        if abs(total - 1.0) > _PROB_SUM_TOL:
            raise ValueError(f"probabilities must sum to 1, got {total!r}")

    def as_array(self) -> np.ndarray:
        return np.array([self.p_pp, self.p_pm, self.p_mp, self.p_mm], dtype=float)


def correlation(joint: JointProbabilities) -> float:
    """Signed combination p_pp - p_pm - p_mp + p_mm, in [-1, 1]."""
    return joint.p_pp - joint.p_pm - joint.p_mp + joint.p_mm


def polarizer_angle_to_pair_angle(alpha: float) -> float:
    """Map a photon polarizer angle to the internal pair angle (doubled).

    Photon coincidence curves run twice as fast in the polarizer angle as
    the helicity-frame formulas; this conversion is applied only at
    reporting interfaces, never inside the vector computations.
    """
    return 2.0 * alpha


def single_probabilities(
    axis: DirectionAxis, analyzer, which_particle: int
) -> tuple[float, float]:
    """Detection probabilities (p_plus, p_minus) for one particle of a
    decohered pair whose particle 1 is up (and particle 2 down) along
    ``axis``.

    With c the cosine of the angle between the analyzer and the axis:
    particle 1 gives ((1+c)/2, (1-c)/2) and particle 2 the reverse.
    Independent of the spinor phase gauge of either particle.
    """
    a = unit_vector3(analyzer, name="analyzer")
    c = float(np.dot(a, axis.unit_vector))
    p_up = 0.5 * (1.0 + c)
    if which_particle == 1:
        return p_up, 1.0 - p_up
    if which_particle == 2:
        return 1.0 - p_up, p_up
    raise ValueError(f"which_particle must be 1 or 2, got {which_particle!r}")


def single_probabilities_from_spinor(
    axis: DirectionAxis, analyzer, which_particle: int, phase: float = 0.0
) -> tuple[float, float]:
    """Same probabilities computed from spinor amplitudes.

    In the analyzer's own eigenframe the carried state is a spinor whose
    polar angle is the axis-to-analyzer angle; its azimuth about the
    analyzer is the free per-particle ``phase``, which drops out of the
    amplitude moduli. Cross-checks the closed form of
    ``single_probabilities``.
    """
    a = unit_vector3(analyzer, name="analyzer")
    c = min(1.0, max(-1.0, float(np.dot(a, axis.unit_vector))))
    relative = DirectionAxis(math.acos(c), 0.0)
    sign = +1 if which_particle == 1 else -1
    if which_particle not in (1, 2):
        raise ValueError(f"which_particle must be 1 or 2, got {which_particle!r}")
    psi = spinor(relative, sign, phase=phase)
    return float(abs(psi[0]) ** 2), float(abs(psi[1]) ** 2)


def entangled_expectations(pair: AnalyzerPair) -> tuple[float, float, float]:
    """Singlet expectation values by explicit operator traces.

    Returns (joint, single1, single2) for the product (a.sigma)(b.sigma)
    and the two one-sided observables; analytically (-a.b, 0, 0).
    """
    rho = epr_density()
    sa = pauli_projection(pair.a)
    sb = pauli_projection(pair.b)
    identity = np.eye(2, dtype=complex)
    joint = float(np.trace(rho @ tensor_product(sa, sb)).real)
    single1 = float(np.trace(rho @ tensor_product(sa, identity)).real)
    single2 = float(np.trace(rho @ tensor_product(identity, sb)).real)
    return joint, single1, single2


def born_joint_probabilities(rho, pair: AnalyzerPair) -> JointProbabilities:
    """Coincidence probabilities of any two-particle state via the Born rule."""
    proj_a = {s: spin_projector(pair.a, s) for s in (+1, -1)}
    proj_b = {s: spin_projector(pair.b, s) for s in (+1, -1)}
    rho = np.asarray(rho, dtype=complex)

    def prob(sa: int, sb: int) -> float:
        return float(np.trace(rho @ tensor_product(proj_a[sa], proj_b[sb])).real)

    return JointProbabilities(
        p_pp=prob(+1, +1),
        p_pm=prob(+1, -1),
        p_mp=prob(-1, +1),
        p_mm=prob(-1, -1),
    )


def _crosscheck(closed: JointProbabilities, born: JointProbabilities) -> None:
    gap = float(np.max(np.abs(closed.as_array() - born.as_array())))
    if gap > _DUAL_PATH_TOL:
        raise RuntimeError(
            f"closed-form and Born-rule probabilities disagree by {gap:.3e}"
        )


def entangled_joint_probabilities(pair: AnalyzerPair) -> JointProbabilities:
    """Singlet coincidence probabilities.

    Closed form: equal outcomes (1 - cos)/4, opposite outcomes (1 + cos)/4,
    with cos the analyzer-analyzer cosine. Cross-checked against the Born
    rule on the singlet density operator.
    """
    c = pair.cos_theta_ab
    closed = JointProbabilities(
        p_pp=0.25 * (1.0 - c),
        p_pm=0.25 * (1.0 + c),
        p_mp=0.25 * (1.0 + c),
        p_mm=0.25 * (1.0 - c),
    )
    _crosscheck(closed, born_joint_probabilities(epr_density(), pair))
    return closed


def disentangled_joint_probabilities_fixed_axis(
    pair: AnalyzerPair, axis: DirectionAxis
) -> JointProbabilities:
    """Coincidence probabilities of a decohered pair with a known shared axis.

    Closed form: equal outcomes (1 - ca*cb)/4 and opposite outcomes
    (1 + ca*cb)/4, where ca and cb are the cosines between each analyzer
    and the axis. Cross-checked against the Born rule on the mixture state.
    Both marginals are (1/2, 1/2) for every axis.
    """
    n = axis.unit_vector
    ca = float(np.dot(pair.a, n))
    cb = float(np.dot(n, pair.b))
    product = ca * cb
    closed = JointProbabilities(
        p_pp=0.25 * (1.0 - product),
        p_pm=0.25 * (1.0 + product),
        p_mp=0.25 * (1.0 + product),
        p_mm=0.25 * (1.0 - product),
    )
    _crosscheck(closed, born_joint_probabilities(disentangled_mixture(axis), pair))
    return closed


def entangled_correlation_model():
    """Correlation function E(a, b) = -a.b of the entangled singlet."""

    def model(a, b) -> float:
        return -float(
            np.dot(unit_vector3(a, name="a"), unit_vector3(b, name="b"))
        )

    return model
