"""Discrete symmetries of an oppositely moving photon pair.

Helicity product states live on the same 4-dimensional space as the spin
states via spin-up -> right-handed (R), spin-down -> left-handed (L), so the
basis order is (RR, RL, LR, LL). Each slot labels the photon moving along
one of the two propagation directions.

Two commuting involutions act on the pair:

* parity: inversion of the configuration through the source. The photons
  swap propagation slots and each helicity reverses, so RR <-> LL while RL
  and LR are invariant.
* transverse rotation: a half-turn about an axis perpendicular to the
  propagation line through the source, fixing RR and LL and swapping
  RL <-> LR.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import ket
from .states import BellLabel, bell_state

__all__ = [
    "HELICITY_LABELS",
    "PARITY",
    "ROTATION_PERP",
    "EVEN",
    "ODD",
    "helicity_state",
    "apply_parity",
    "apply_r_perp",
    "SymmetryClassification",
    "classify",
    "classification_table",
]

HELICITY_LABELS = ("RR", "RL", "LR", "LL")

# Basis maps of the two involutions; both are real permutations.
PARITY = np.array(
    [[0, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 0]], dtype=float
)
ROTATION_PERP = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=float
)
PARITY.setflags(write=False)
ROTATION_PERP.setflags(write=False)

EVEN = "even"
ODD = "odd"

_EIG_TOL = 1e-12


def helicity_state(label: str) -> np.ndarray:
    """Basis ket for a helicity product label ('RR', 'RL', 'LR', 'LL')."""
    try:
        index = HELICITY_LABELS.index(label)
    except ValueError:
        raise ValueError(f"unknown helicity label {label!r}") from None
    psi = np.zeros(4, dtype=complex)
    psi[index] = 1.0
    return psi


def apply_parity(state) -> np.ndarray:
    """Invert the pair through the source (swap slots, flip both helicities)."""
    return PARITY @ ket(state)


def apply_r_perp(state) -> np.ndarray:
    """Rotate the pair by a half-turn about a transverse axis through the source."""
    return ROTATION_PERP @ ket(state)


@dataclass(frozen=True)
class SymmetryClassification:
    """Eigenvalue signs under parity and the transverse half-turn.

    Each field is 'even', 'odd', or None when the state is not an
    eigenstate of that operation.
    """

    parity: str | None
    r_perp: str | None


def _eigensign(op: np.ndarray, psi: np.ndarray) -> str | None:
    image = op @ psi
    if float(np.max(np.abs(image - psi))) <= _EIG_TOL:
        return EVEN
    if float(np.max(np.abs(image + psi))) <= _EIG_TOL:
        return ODD
    return None


def classify(state) -> SymmetryClassification:
    """Classify a normalized pair state under parity and the transverse half-turn."""
    psi = ket(state)
    return SymmetryClassification(
        parity=_eigensign(PARITY, psi),
        r_perp=_eigensign(ROTATION_PERP, psi),
    )


def classification_table() -> list[tuple[str, SymmetryClassification]]:
    """Classification of the four Bell states and the four helicity products."""
    rows: list[tuple[str, SymmetryClassification]] = []
    for label in (
        BellLabel.PHI_PLUS,
        BellLabel.PSI_PLUS,
        BellLabel.PHI_MINUS,
        BellLabel.PSI_MINUS,
    ):
        rows.append((label.value, classify(bell_state(label))))
    for name in HELICITY_LABELS:
        rows.append((name, classify(helicity_state(name))))
    return rows
