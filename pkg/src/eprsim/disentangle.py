"""Decoherence of a separating pair.

The central construction: erase the interference terms between the two
particles in the product basis of a shared quantization axis, keeping the
anti-correlation dictated by conservation of angular momentum. The result
is an equal mixture of the two opposite-orientation product states along
that axis, an anisotropic state of zero total angular momentum.
"""

from __future__ import annotations

import numpy as np

from .core import assert_density_operator, tensor_product
from .states import DirectionAxis, spin_projector, spinor

__all__ = [
    "BRANCH_PLUS_MINUS",
    "BRANCH_MINUS_PLUS",
    "decohere_offdiagonal",
    "disentangled_mixture",
    "branch_pair",
]

BRANCH_PLUS_MINUS = "plus_minus"
BRANCH_MINUS_PLUS = "minus_plus"


def _pair_frame(axis: DirectionAxis) -> np.ndarray:
    """4x4 unitary whose columns are the spin-up/-down product states along axis."""
    u = np.column_stack([spinor(axis, +1), spinor(axis, -1)])
    return np.kron(u, u)


def decohere_offdiagonal(rho, axis: DirectionAxis) -> np.ndarray:
    """Erase every off-diagonal element in the product eigenbasis of ``axis``.

    The state is rewritten in the basis of up/down product states along the
    axis, the off-diagonal entries of that representation are zeroed, and
    the result is transformed back. Trace-preserving, positivity-preserving,
    and idempotent for a fixed axis.
    """
    m = assert_density_operator(rho)
    if m.shape != (4, 4):
        raise ValueError(f"decohere_offdiagonal needs a two-particle state, got {m.shape}")
    u = _pair_frame(axis)
    in_basis = u.conj().T @ m @ u
    diagonal = np.diag(np.diag(in_basis))
    return u @ diagonal @ u.conj().T


def branch_pair(axis: DirectionAxis, branch: str) -> np.ndarray:
    """Pure product state of one definite branch of a decohered pair.

    ``plus_minus``: particle 1 up and particle 2 down along the axis;
    ``minus_plus``: the reverse.
    """
    if branch == BRANCH_PLUS_MINUS:
        signs = (+1, -1)
    elif branch == BRANCH_MINUS_PLUS:
        signs = (-1, +1)
    else:
        raise ValueError(f"branch must be 'plus_minus' or 'minus_plus', got {branch!r}")
    return tensor_product(spin_projector(axis, signs[0]), spin_projector(axis, signs[1]))


def disentangled_mixture(axis: DirectionAxis) -> np.ndarray:
    """Equal mixture of the two anti-correlated product states along ``axis``.

    Equals ``decohere_offdiagonal(epr_density(), axis)``: the decohered
    singlet. Purity 1/2, zero expected total spin along the axis, and both
    single-particle reductions are maximally mixed.
    """
    return 0.5 * (
        branch_pair(axis, BRANCH_PLUS_MINUS) + branch_pair(axis, BRANCH_MINUS_PLUS)
    )
