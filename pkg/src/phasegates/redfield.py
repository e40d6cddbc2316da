"""Bloch-Redfield generators for piecewise-constant segments.

Two construction routes are provided and must agree:

* :func:`closed_form_single_qubit` writes out the 4x4 generator for a single
  qubit coupled to the bath through sigma_z in closed form, expressed in the
  segment eigenbasis with entry order (++, +-, -+, --), "+" being the
  higher-energy eigenstate.
* :func:`build_generator` is the generic non-secular Redfield construction in
  the eigenbasis of an arbitrary Hermitian Hamiltonian, valid for the two-qubit
  segments and arbitrary coupling axes, returned in the fixed computational
  basis.

Convention: a segment with fields (Bz, Bx) evolves under H = -Bz sz - Bx sx,
so the energy gap is 2B with B = sqrt(Bz^2 + Bx^2) and the coherence entry of
the generator carries the phase -2iB.  The bath correlation function is
sampled at half the Bohr frequency: weight(omega) = gamma(omega / 2).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bath import BathSpec, gamma, rate_set
from .qmath import dag, devectorize, expm, is_hermitian, superop_change_basis, vectorize

_GAP_TOL = 1e-9  # gaps closer than this are one frequency class


@dataclass(frozen=True)
class CouplingSpec:
    """A system coupling operator attached to one bath."""

    operator: np.ndarray
    bath: BathSpec
    label: str = ""

    def __post_init__(self):
        op = np.asarray(self.operator, dtype=complex)
        if not is_hermitian(op, tol=1e-12):
            raise ValueError("coupling operator must be Hermitian")
        object.__setattr__(self, "operator", op)


@dataclass
class Generator:
    """Redfield superoperator for one segment, acting on row-major vec(rho)."""

    matrix: np.ndarray            # d^2 x d^2, computational basis
    basis: np.ndarray             # columns: eigenbasis it is calibrated to
    energy_gaps: list = field(default_factory=list)   # Bohr frequencies, GHz

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def in_eigenbasis(self, v: np.ndarray | None = None) -> np.ndarray:
        """The superoperator expressed in the eigenbasis ``v`` (default: own)."""
        return superop_change_basis(self.matrix, self.basis if v is None else v)


def _commutator_superop(h: np.ndarray) -> np.ndarray:
    d = h.shape[0]
    eye = np.eye(d)
    return -1j * (np.kron(h, eye) - np.kron(eye, h.T))


def _gap_classes(values: np.ndarray) -> np.ndarray:
    """Snap nearly-equal Bohr frequencies to one representative value."""
    out = np.array(values, dtype=float)
    order = np.argsort(out)
    rep = None
    for idx in order:
        if rep is None or out[idx] - rep > _GAP_TOL:
            rep = out[idx]
        out[idx] = rep
    return out


def eigenbasis_for_fields(bz: float, bx: float) -> np.ndarray:
    """Analytic eigenbasis of H = -Bz sz - Bx sx, higher-energy state first."""
    theta = np.arctan2(bx, bz)
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    # column 0: energy +B, column 1: energy -B
    return np.array([[-s, c], [c, s]], dtype=complex)


def closed_form_single_qubit(bz: float, bx: float, bath: BathSpec) -> Generator:
    """Closed-form 4x4 generator for sigma_z coupling, general field direction.

    For bx = 0 it reduces to the diagonal generator
    diag(0, -2iB - 2 mu+(0), 2iB - 2 mu+(0), 0).
    """
    B = float(np.hypot(bz, bx))
    v = eigenbasis_for_fields(bz, bx) if B > 0 else np.eye(2, dtype=complex)
    if B == 0.0:
        return Generator(matrix=np.zeros((4, 4), dtype=complex), basis=v,
                         energy_gaps=[0.0])
    theta = np.arctan2(bx, bz)
    sn2 = np.sin(theta) ** 2
    s2t = np.sin(2 * theta)
    cs2 = np.cos(theta) ** 2
    rb = rate_set(B, bath)
    r0 = rate_set(0.0, bath)
    mup0, mum0 = r0.mu_plus, r0.mu_minus
    gp, gm = rb.gamma_plus, rb.gamma_minus
    mupB = rb.mu_plus
    mupmB = gm + np.conj(gm)          # mu+(-B)
    xip = rb.xi_plus
    xips = np.conj(xip)

    m = np.array([
        [-sn2 * mupB, 0.5 * s2t * mup0, 0.5 * s2t * mup0, sn2 * mupmB],
        [0.5 * s2t * (mum0 + 2 * np.conj(gp)),
         -2j * B - 2 * cs2 * mup0 - sn2 * xips,
         sn2 * xip,
         0.5 * s2t * (mum0 - 2 * gm)],
        [0.5 * s2t * (-mum0 + 2 * gp),
         sn2 * xips,
         2j * B - 2 * cs2 * mup0 - sn2 * xip,
         -0.5 * s2t * (mum0 + 2 * np.conj(gm))],
        [sn2 * mupB, -0.5 * s2t * mup0, -0.5 * s2t * mup0, -sn2 * mupmB],
    ], dtype=complex)

    # transcription is in the eigenbasis; store in the computational basis
    left = np.kron(v, np.conj(v))
    right = np.kron(dag(v), v.T)
    return Generator(matrix=left @ m @ right, basis=v, energy_gaps=[2 * B])


def build_generator(h: np.ndarray, couplings: list[CouplingSpec]) -> Generator:
    """Full (non-secular) Redfield generator in the computational basis.

    Diagonalizes ``h``, decomposes each coupling operator into eigenoperators
    at the Bohr frequencies, weights matrix elements by gamma(omega/2) and
    assembles -i[H, .] + dissipator.  Independent baths contribute additively.
    """
    h = np.asarray(h, dtype=complex)
    if not is_hermitian(h, tol=1e-10):
        raise ValueError("Hamiltonian must be Hermitian")
    d = h.shape[0]
    evals, vecs = np.linalg.eigh(h)
    # descending energy so that index 0 is the "+" state of the closed forms
    order = np.argsort(evals)[::-1]
    evals = evals[order]
    vecs = vecs[:, order]
    eye = np.eye(d)

    m = _commutator_superop(h)
    omega = _gap_classes((evals[None, :] - evals[:, None]).reshape(-1)).reshape(d, d)
    gaps = sorted(set(np.abs(omega).reshape(-1).tolist()))

    for cs in couplings:
        a_eig = dag(vecs) @ cs.operator @ vecs
        lam_eig = np.empty((d, d), dtype=complex)
        for i in range(d):
            for j in range(d):
                # omega_{ji} = e_j - e_i, sampled at half the Bohr frequency
                lam_eig[i, j] = a_eig[i, j] * gamma(omega[i, j] / 2.0, cs.bath)
        a = cs.operator
        lam = vecs @ lam_eig @ dag(vecs)
        lam_dag = dag(lam)
        m += (
            -np.kron(a @ lam, eye)
            + np.kron(lam, a.T)
            - np.kron(eye, (lam_dag @ a).T)
            + np.kron(a, np.conj(lam))
        )
    return Generator(matrix=m, basis=vecs, energy_gaps=gaps)


@dataclass
class Trajectory:
    """Density matrices on a time grid, with convenience diagnostics."""

    times: np.ndarray             # ns
    states: np.ndarray            # (n, d, d)

    def traces(self) -> np.ndarray:
        return np.real(np.trace(self.states, axis1=1, axis2=2))

    def hermiticity_defects(self) -> np.ndarray:
        return np.array([np.linalg.norm(s - dag(s)) for s in self.states])

    def min_eigenvalues(self) -> np.ndarray:
        out = np.empty(len(self.states))
        for i, s in enumerate(self.states):
            sym = 0.5 * (s + dag(s))
            out[i] = np.linalg.eigvalsh(sym)[0]
        return out

    @property
    def final_state(self) -> np.ndarray:
        return self.states[-1]


def _check_state(rho: np.ndarray, dim: int):
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (dim, dim):
        raise ValueError("state dimension mismatch")
    if not is_hermitian(rho, tol=1e-9):
        raise ValueError("initial state must be Hermitian")
    if abs(np.trace(rho) - 1.0) > 1e-9:
        raise ValueError("initial state must have unit trace")
    return rho


def evolve(gen: Generator, rho0: np.ndarray, t: float) -> np.ndarray:
    """rho(t) = devec(expm(M t) vec(rho0))."""
    if t < 0:
        raise ValueError("t must be >= 0")
    rho0 = _check_state(rho0, gen.dim)
    return devectorize(expm(gen.matrix * t) @ vectorize(rho0))


def evolve_trajectory(gen: Generator, rho0: np.ndarray, t_final: float,
                      n_samples: int = 100) -> Trajectory:
    """States on a uniform grid over [0, t_final]."""
    if t_final < 0:
        raise ValueError("t_final must be >= 0")
    rho0 = _check_state(rho0, gen.dim)
    times = np.linspace(0.0, t_final, n_samples + 1)
    v0 = vectorize(rho0)
    states = np.array([devectorize(expm(gen.matrix * t) @ v0) for t in times])
    return Trajectory(times=times, states=states)
