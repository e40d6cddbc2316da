"""Dense complex linear algebra helpers for 2-, 4- and 16-dimensional problems.

States and operators are plain ``numpy`` arrays with complex dtype.  Density
matrices are vectorized row-major, i.e. a 2x2 matrix maps to the column
(rho_00, rho_01, rho_10, rho_11).
"""
from __future__ import annotations

import numpy as np
import scipy.linalg

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two square matrices."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape[0] != a.shape[1] or b.shape[0] != b.shape[1]:
        raise ValueError("kron expects square matrices")
    return np.kron(a, b)


def dag(a: np.ndarray) -> np.ndarray:
    return np.conj(a).T


def expm(m: np.ndarray) -> np.ndarray:
    """Matrix exponential via scaling-and-squaring (Pade approximant).

    Safe for the non-normal superoperators produced by the Redfield builder.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("expm expects a square matrix")
    if not np.all(np.isfinite(m)):
        raise ValueError("expm input has non-finite entries")
    return scipy.linalg.expm(m)


def vectorize(rho: np.ndarray) -> np.ndarray:
    """Row-major stacking of a square matrix into a column vector."""
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError("vectorize expects a square matrix")
    return rho.reshape(-1)


def devectorize(v: np.ndarray) -> np.ndarray:
    """Inverse of :func:`vectorize`."""
    v = np.asarray(v, dtype=complex).reshape(-1)
    d = int(round(np.sqrt(v.size)))
    if d * d != v.size:
        raise ValueError("devectorize expects a length that is a perfect square")
    return v.reshape(d, d)


def superop_change_basis(m: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Express a superoperator in the basis given by the unitary ``v``.

    ``v`` has the new basis vectors as columns; the returned matrix acts on
    vec(v^dag rho v).
    """
    left = np.kron(dag(v), v.T)
    right = np.kron(v, np.conj(v))
    return left @ m @ right


def ket(amplitudes) -> np.ndarray:
    """Normalized state vector from a sequence of amplitudes."""
    psi = np.asarray(amplitudes, dtype=complex).reshape(-1)
    n = np.linalg.norm(psi)
    if n == 0:
        raise ValueError("cannot normalize the zero vector")
    return psi / n


def projector(psi: np.ndarray) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    return np.outer(psi, np.conj(psi))


def phase_min_distance(u: np.ndarray, v: np.ndarray) -> float:
    """Frobenius distance min over chi of ||u - e^{i chi} v||.

    All propagator equality checks are global-phase insensitive.
    """
    tr = np.trace(dag(v) @ u)
    chi = np.angle(tr) if tr != 0 else 0.0
    return float(np.linalg.norm(u - np.exp(1j * chi) * v))


def is_hermitian(a: np.ndarray, tol: float = 1e-12) -> bool:
    a = np.asarray(a)
    return bool(np.linalg.norm(a - dag(a)) <= tol * max(1.0, np.linalg.norm(a)))


# Single-qubit basis states (z eigenbasis is the computational basis).
PLUS_Z = np.array([1, 0], dtype=complex)
MINUS_Z = np.array([0, 1], dtype=complex)
PLUS_X = np.array([1, 1], dtype=complex) / np.sqrt(2)
MINUS_X = np.array([1, -1], dtype=complex) / np.sqrt(2)


def bell_state(name: str) -> np.ndarray:
    """Bell states built on the x eigenbasis of each qubit.

    psi+/- = (|+>|+> +/- |->|->)/sqrt(2), phi+/- = (|+>|-> +/- |->|+>)/sqrt(2).
    """
    pp = np.kron(PLUS_X, PLUS_X)
    mm = np.kron(MINUS_X, MINUS_X)
    pm = np.kron(PLUS_X, MINUS_X)
    mp = np.kron(MINUS_X, PLUS_X)
    table = {
        "psi+": (pp + mm),
        "psi-": (pp - mm),
        "phi+": (pm + mp),
        "phi-": (pm - mp),
    }
    if name not in table:
        raise ValueError(f"unknown Bell state {name!r}")
    return table[name] / np.sqrt(2)
