"""Dense complex linear algebra for one- and two-qubit systems.

Plain ``complex128`` numpy arrays are the working representation: kets are
unit vectors of length 2 or 4, operators are small square matrices. The
helpers here enforce the density-operator contract (Hermitian, unit trace,
positive semidefinite) and supply the tensor-product and trace machinery
everything else in the package is built on.

Two-qubit basis order is fixed throughout as (++, +-, -+, --), with
particle 1 the left tensor factor.
"""

from __future__ import annotations

import numpy as np

ATOL = 1e-12          # Hermiticity, trace and normalization tolerance
PSD_FLOOR = -1e-10    # smallest admissible density-operator eigenvalue
ZERO_BRANCH_TOL = 1e-14

__all__ = [
    "ATOL",
    "PSD_FLOOR",
    "ZERO_BRANCH_TOL",
    "ket",
    "pure_density",
    "unit_vector3",
    "is_density_operator",
    "assert_density_operator",
    "tensor_product",
    "partial_trace",
    "conditional_reduce",
]


def _as_complex(values, name: str) -> np.ndarray:
    arr = np.asarray(values, dtype=complex)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must have finite real and imaginary parts")
    return arr


def ket(amplitudes) -> np.ndarray:
    """Validate and return a normalized state vector of dimension 2 or 4."""
    psi = _as_complex(amplitudes, "ket").reshape(-1)
    if psi.size not in (2, 4):
        raise ValueError(f"ket must have dimension 2 or 4, got {psi.size}")
    norm = float(np.linalg.norm(psi))
    if abs(norm - 1.0) > ATOL:
        raise ValueError(f"ket must be normalized (|norm - 1| = {abs(norm - 1.0):.3e})")
    return psi


def pure_density(psi) -> np.ndarray:
    """Rank-1 density operator |psi><psi| of a normalized ket."""
    psi = ket(psi)
    return np.outer(psi, psi.conj())


def unit_vector3(v, tol: float = 1e-9, name: str = "vector") -> np.ndarray:
    """Validate a real 3-vector of unit length (within ``tol``)."""
    vec = np.asarray(v, dtype=float).reshape(-1)
    if vec.size != 3:
        raise ValueError(f"{name} must have 3 components, got {vec.size}")
    if not np.all(np.isfinite(vec)):
        raise ValueError(f"{name} must be finite")
    norm = float(np.linalg.norm(vec))
    if abs(norm - 1.0) > tol:
        raise ValueError(f"{name} must be a unit vector (|norm - 1| = {abs(norm - 1.0):.3e})")
    return vec


def _square_complex(matrix, name: str) -> np.ndarray:
    m = _as_complex(matrix, name)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"{name} must be a square matrix, got shape {m.shape}")
    return m


def is_density_operator(rho, atol: float = ATOL) -> bool:
    """True if ``rho`` is Hermitian, unit-trace, and positive semidefinite."""
    try:
        assert_density_operator(rho, atol=atol)
    except ValueError:
        return False
    return True


def assert_density_operator(rho, atol: float = ATOL, name: str = "rho") -> np.ndarray:
    """Validate the density-operator contract and return the matrix.

    Checks, in order: square with dimension 2 or 4, Hermitian within
    ``atol`` (max-entry norm), trace within ``atol`` of 1, and all
    eigenvalues above the ``PSD_FLOOR``.
    """
    m = _square_complex(rho, name)
    if m.shape[0] not in (2, 4):
        raise ValueError(f"{name} must be 2x2 or 4x4, got {m.shape}")
    herm_defect = float(np.max(np.abs(m - m.conj().T)))
    if herm_defect > atol:
        raise ValueError(f"{name} is not Hermitian (defect {herm_defect:.3e})")
    trace_defect = abs(complex(np.trace(m)) - 1.0)
    if trace_defect > atol:
        raise ValueError(f"{name} does not have unit trace (defect {trace_defect:.3e})")
    eigenvalues = np.linalg.eigvalsh(m)
    if float(eigenvalues.min()) < PSD_FLOOR:
        raise ValueError(
            f"{name} is not positive semidefinite (min eigenvalue {eigenvalues.min():.3e})"
        )
    return m


def tensor_product(a, b) -> np.ndarray:
    """Kronecker product of two matrices.

    Block convention: (a (x) b)[i*rows_b + k, j*cols_b + l] = a[i, j] * b[k, l],
    so for two qubits the composite basis order is (++, +-, -+, --) with the
    first factor belonging to particle 1.
    """
    return np.kron(_as_complex(a, "a"), _as_complex(b, "b"))


def partial_trace(rho, trace_out: int) -> np.ndarray:
    """Reduced 2x2 operator of a two-qubit operator, tracing out one particle.

    Args:
        rho: 4x4 matrix in the (++, +-, -+, --) basis.
        trace_out: particle to trace out, 1 or 2.
    """
    m = _square_complex(rho, "rho")
    if m.shape != (4, 4):
        raise ValueError(f"partial_trace needs a 4x4 matrix, got {m.shape}")
    blocks = m.reshape(2, 2, 2, 2)
    if trace_out == 2:
        return np.einsum("ikjk->ij", blocks)
    if trace_out == 1:
        return np.einsum("kikj->ij", blocks)
    raise ValueError(f"trace_out must be 1 or 2, got {trace_out!r}")


def conditional_reduce(rho, projector_ket, on_subsystem: int) -> tuple[float, np.ndarray]:
    """Condition a two-qubit state on finding one particle in a given ket.

    Projects subsystem ``on_subsystem`` onto |k><k|, traces it out, and
    splits the result into its trace (the branch probability) and the
    renormalized 2x2 state of the remaining particle.

    Returns:
        (weight, conditional) with weight in [0, 1].

    Raises:
        ValueError: if the branch probability is below ``ZERO_BRANCH_TOL``
            (conditioning on a zero-probability branch has no normalized
            conditional state).
    """
    m = _square_complex(rho, "rho")
    if m.shape != (4, 4):
        raise ValueError(f"conditional_reduce needs a 4x4 matrix, got {m.shape}")
    k = ket(projector_ket)
    if k.size != 2:
        raise ValueError("projector_ket must be a single-particle (dimension 2) ket")
    blocks = m.reshape(2, 2, 2, 2)
    if on_subsystem == 2:
        cond = np.einsum("a,iajb,b->ij", k.conj(), blocks, k)
    elif on_subsystem == 1:
        cond = np.einsum("a,aibj,b->ij", k.conj(), blocks, k)
    else:
        raise ValueError(f"on_subsystem must be 1 or 2, got {on_subsystem!r}")
    weight = float(np.trace(cond).real)
    if weight < ZERO_BRANCH_TOL:
        raise ValueError(
            f"conditioning on zero-probability branch (weight {weight:.3e})"
        )
    return weight, cond / weight
