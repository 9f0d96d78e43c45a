"""Named states and operators of a spin-1/2 pair.

Z-basis product states, the four maximally entangled (Bell) states, the
singlet density operator, spinors along an arbitrary quantization axis,
and projections of the Pauli vector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .core import unit_vector3

__all__ = [
    "PAULI_X",
    "PAULI_Y",
    "PAULI_Z",
    "IDENTITY_2",
    "DirectionAxis",
    "X_AXIS",
    "Y_AXIS",
    "Z_AXIS",
    "BellLabel",
    "bell_state",
    "epr_density",
    "spinor",
    "pauli_projection",
    "spin_projector",
]

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
IDENTITY_2 = np.eye(2, dtype=complex)

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class DirectionAxis:
    """Unit direction on the sphere, stored as polar angles in radians.

    ``theta`` is the polar angle in [0, pi], ``phi`` the azimuth in
    [0, 2*pi). Both particles of a decohered pair share one such axis.
    """

    theta: float
    phi: float
    _vector: tuple[float, float, float] | None = field(
        default=None, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        theta = float(self.theta)
        phi = float(self.phi)
        if not (math.isfinite(theta) and math.isfinite(phi)):
            raise ValueError("axis angles must be finite")
        if not 0.0 <= theta <= math.pi:
            raise ValueError(f"theta must lie in [0, pi], got {theta!r}")
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", phi % _TWO_PI)

    @classmethod
    def from_vector(cls, v) -> "DirectionAxis":
        """Axis for a unit 3-vector, keeping the exact components given."""
        vec = unit_vector3(v, name="axis vector")
        theta = math.acos(min(1.0, max(-1.0, float(vec[2]))))
        phi = math.atan2(float(vec[1]), float(vec[0])) % _TWO_PI
        return cls(theta, phi, _vector=(float(vec[0]), float(vec[1]), float(vec[2])))

    @property
    def unit_vector(self) -> np.ndarray:
        """Cartesian components (sin t cos p, sin t sin p, cos t)."""
        if self._vector is not None:
            return np.array(self._vector, dtype=float)
        st = math.sin(self.theta)
        return np.array(
            [st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)],
            dtype=float,
        )


Z_AXIS = DirectionAxis(0.0, 0.0)
X_AXIS = DirectionAxis(math.pi / 2.0, 0.0)
Y_AXIS = DirectionAxis(math.pi / 2.0, math.pi / 2.0)


class BellLabel(Enum):
    """The four maximally entangled two-qubit states."""

    PHI_PLUS = "phi_plus"
    PHI_MINUS = "phi_minus"
    PSI_PLUS = "psi_plus"
    PSI_MINUS = "psi_minus"


_INV_SQRT2 = 1.0 / math.sqrt(2.0)

_BELL_VECTORS = {
    BellLabel.PHI_PLUS: np.array([_INV_SQRT2, 0.0, 0.0, _INV_SQRT2], dtype=complex),
    BellLabel.PHI_MINUS: np.array([_INV_SQRT2, 0.0, 0.0, -_INV_SQRT2], dtype=complex),
    BellLabel.PSI_PLUS: np.array([0.0, _INV_SQRT2, _INV_SQRT2, 0.0], dtype=complex),
    BellLabel.PSI_MINUS: np.array([0.0, _INV_SQRT2, -_INV_SQRT2, 0.0], dtype=complex),
}


def bell_state(label: BellLabel) -> np.ndarray:
    """Bell-state ket in the (++, +-, -+, --) basis."""
    return _BELL_VECTORS[BellLabel(label)].copy()


def epr_density() -> np.ndarray:
    """Density operator of the singlet (total spin zero) pair.

    Exact matrix (1/2) [[0,0,0,0],[0,1,-1,0],[0,-1,1,0],[0,0,0,0]] in the
    fixed product basis.
    """
    return 0.5 * np.array(
        [
            [0, 0, 0, 0],
            [0, 1, -1, 0],
            [0, -1, 1, 0],
            [0, 0, 0, 0],
        ],
        dtype=complex,
    )


def spinor(axis: DirectionAxis, sign: int, phase: float = 0.0) -> np.ndarray:
    """Spin-1/2 eigenstate along ``axis`` with eigenvalue ``sign`` (+1 or -1).

    plus:  (cos t/2, sin t/2 * exp(+i p))
    minus: (-sin t/2 * exp(-i p), cos t/2)

    with t the polar angle of the axis and p its azimuth plus ``phase``.
    ``phase`` is the per-particle azimuthal gauge left free after a pair
    loses phase coherence; no detection probability depends on it, and with
    the default 0 the two spinors are the exact eigenvectors of
    ``pauli_projection(axis)``.
    """
    if sign not in (+1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    half = 0.5 * axis.theta
    azimuth = axis.phi + phase
    c = math.cos(half)
    s = math.sin(half)
    if sign == +1:
        return np.array([c, s * complex(math.cos(azimuth), math.sin(azimuth))], dtype=complex)
    return np.array([-s * complex(math.cos(azimuth), -math.sin(azimuth)), c], dtype=complex)


def pauli_projection(direction) -> np.ndarray:
    """Pauli-vector projection n . sigma for a unit 3-vector or DirectionAxis.

    Hermitian, traceless, squares to the identity; its +1/-1 eigenvectors
    are ``spinor(axis, +1)`` and ``spinor(axis, -1)``.
    """
    if isinstance(direction, DirectionAxis):
        n = direction.unit_vector
    else:
        n = unit_vector3(direction, name="direction")
    return n[0] * PAULI_X + n[1] * PAULI_Y + n[2] * PAULI_Z


def spin_projector(direction, sign: int) -> np.ndarray:
    """Projector (I + sign * n.sigma) / 2 onto the spin-up/-down subspace."""
    if sign not in (+1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    return 0.5 * (IDENTITY_2 + sign * pauli_projection(direction))
