"""Fidelity, state-averaged fidelity, concurrence and analytic benchmarks."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bath import BathSpec, gamma
from .gates import GateSequence, sequence_propagator
from .qmath import SIGMA_Y, dag, devectorize, kron, projector, vectorize

_YY = kron(SIGMA_Y, SIGMA_Y)


def fidelity(psi_in: np.ndarray, target: np.ndarray, rho_out: np.ndarray) -> float:
    """<psi| U^dag rho U |psi> for the noisy output against the ideal gate."""
    psi = np.asarray(psi_in, dtype=complex).reshape(-1)
    ideal = target @ psi
    f = np.conj(ideal) @ rho_out @ ideal
    if abs(f.imag) > 1e-9:
        raise ValueError(f"fidelity has non-negligible imaginary part {f.imag:g}")
    return float(f.real)


def f_d_closed_form(alpha: float, bath: BathSpec, b0: float,
                    phi: float = 0.0) -> float:
    """Dynamical single-qubit gate fidelity; independent of phi.

    cos^4 a + sin^4 a + 2 exp(-4 pi kT lam t_d) cos^2 a sin^2 a, t_d = 2 pi / B0.
    """
    del phi
    t_d = 2 * np.pi / b0
    c2, s2 = np.cos(alpha) ** 2, np.sin(alpha) ** 2
    damp = np.exp(-4 * np.pi * bath.kT * bath.coupling * t_d)
    return float(c2 ** 2 + s2 ** 2 + 2 * damp * c2 * s2)


def haar_states(dim: int, n: int, seed: int) -> np.ndarray:
    """Deterministic Haar-uniform pure states, one independent substream per
    state index so partitions of the stream are reproducible."""
    seqs = np.random.SeedSequence(seed).spawn(n)
    out = np.empty((n, dim), dtype=complex)
    for i, ss in enumerate(seqs):
        rng = np.random.default_rng(ss)
        z = rng.normal(size=dim) + 1j * rng.normal(size=dim)
        out[i] = z / np.linalg.norm(z)
    return out


def angle_states(dim: int, n: int, seed: int) -> np.ndarray:
    """Alternative sampler: uniform hyperspherical angles and phases.

    Not Haar-uniform; kept as an alternative since averaged fidelities are
    sometimes quoted over parameter-uniform rather than Haar measures.
    """
    seqs = np.random.SeedSequence(seed).spawn(n)
    out = np.empty((n, dim), dtype=complex)
    for i, ss in enumerate(seqs):
        rng = np.random.default_rng(ss)
        angles = rng.uniform(0, np.pi / 2, size=dim - 1)
        phases = rng.uniform(0, 2 * np.pi, size=dim - 1)
        amps = np.ones(dim)
        for k, th in enumerate(angles):
            amps[k] *= np.cos(th)
            amps[k + 1:] *= np.sin(th)
        out[i] = amps * np.exp(1j * np.concatenate([[0.0], phases]))
    return out


_SAMPLERS = {"haar": haar_states, "angles": angle_states}


@dataclass(frozen=True)
class AverageFidelity:
    mean: float
    std_error: float
    n_states: int


def average_fidelity(seq: GateSequence, couplings, n_states: int = 1000,
                     seed: int = 0, sampler: str = "haar") -> AverageFidelity:
    """Mean gate fidelity over pseudo-random pure input states."""
    if n_states < 1:
        raise ValueError("n_states must be >= 1")
    try:
        sample = _SAMPLERS[sampler]
    except KeyError:
        raise ValueError(f"unknown sampler {sampler!r}") from None
    prop = sequence_propagator(seq, couplings)
    states = sample(seq.dim, n_states, seed)
    vals = np.empty(n_states)
    for i, psi in enumerate(states):
        rho_out = devectorize(prop @ vectorize(projector(psi)))
        vals[i] = fidelity(psi, seq.target_unitary, rho_out)
    se = float(vals.std(ddof=1) / np.sqrt(n_states)) if n_states > 1 else 0.0
    return AverageFidelity(mean=float(vals.mean()), std_error=se, n_states=n_states)


def nearest_state(rho: np.ndarray) -> np.ndarray:
    """Project onto the positive-semidefinite cone and renormalize the trace.

    Non-secular Redfield evolution can push eigenvalues a few 1e-3 below zero
    while a gate segment mixes frequency classes; this repairs such states so
    that entanglement measures with strict positivity guards stay usable.
    """
    rho = np.asarray(rho, dtype=complex)
    herm = 0.5 * (rho + dag(rho))
    evals, vecs = np.linalg.eigh(herm)
    evals = np.clip(evals, 0.0, None)
    out = (vecs * evals) @ dag(vecs)
    return out / np.trace(out).real


def concurrence(rho: np.ndarray) -> float:
    """Two-qubit concurrence via the spin-flip construction.

    Conjugation is taken in the z (x) z product basis.  Small negative state
    eigenvalues from Redfield transients are tolerated down to -1e-6.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError("concurrence expects a 4x4 density matrix")
    if np.linalg.norm(rho - dag(rho)) > 1e-8:
        raise ValueError("density matrix must be Hermitian")
    if abs(np.trace(rho) - 1.0) > 1e-8:
        raise ValueError("density matrix must have unit trace")
    herm = 0.5 * (rho + dag(rho))
    evals, vecs = np.linalg.eigh(herm)
    if evals[0] < -1e-6:
        raise ValueError("density matrix eigenvalue below -1e-6")
    evals[(evals > -1e-10) & (evals < 0)] = 0.0
    # lam_i are the square roots of the eigenvalues of rho.YY.rho*.YY; using
    # the singular values of sqrt(rho).YY.sqrt(rho)* avoids squaring and
    # keeps full precision for near-pure states
    sqrt_rho = (vecs * np.sqrt(np.abs(evals))) @ dag(vecs)
    lam = np.linalg.svd(sqrt_rho @ _YY @ np.conj(sqrt_rho), compute_uv=False)
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def analytic_pq(t: float, j: float, bath: BathSpec) -> tuple[float, float]:
    """Closed-form Bell-state mixture weights for the exchange-only gate with
    one common bath, starting from phi+.

    At kT = 0 these reduce to P = 1 - exp(-8 pi t J(2J)), Q = 1 - P.
    """
    if j <= 0:
        raise ValueError("j must be > 0")
    mp = 2 * gamma(j, bath).real       # mu+(J)
    mm = 2 * gamma(-j, bath).real      # mu+(-J)
    if mp + mm == 0.0:
        return 0.0, 1.0
    decay = np.exp(-4 * t * (mp + mm))
    p = mp * (1.0 - decay) / (mp + mm)
    q = (mm + mp * decay) / (mp + mm)
    return float(p), float(q)
