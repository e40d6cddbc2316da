"""Gate sequences: multistep geometric phase gates and dynamical equivalents.

Segments are piecewise-constant Hamiltonians.  Single-qubit segments use
H = -Bz sz - Bx sx; two-qubit segments use

    H = sum_i (-Bz_i sz_i - Bx_i sx_i) - J sx_1 sx_2.

This convention writes the level gap of a field (Bz, Bx) as 2B with
B = hypot(Bz, Bx), so realizations often stated for H = -(1/2) B.sigma carry
fields at half magnitude with flipped sign here, while exchange values (e.g.
J = (pi - Phi) Jm / pi for the dynamical conditional gate) are unchanged.
The target unitaries, which define the gates, are reproduced exactly at zero
system-bath coupling.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .qmath import I2, SIGMA_X, SIGMA_Z, expm, kron, vectorize, devectorize, PLUS_X, MINUS_X, projector
from .redfield import CouplingSpec, Generator, Trajectory, build_generator, _check_state

SX1 = kron(SIGMA_X, I2)
SX2 = kron(I2, SIGMA_X)
SZ1 = kron(SIGMA_Z, I2)
SZ2 = kron(I2, SIGMA_Z)
SXSX = kron(SIGMA_X, SIGMA_X)


def single_qubit_hamiltonian(bz: float, bx: float) -> np.ndarray:
    return -bz * SIGMA_Z - bx * SIGMA_X


def two_qubit_hamiltonian(bz1: float, bx1: float, bz2: float, bx2: float,
                          j: float) -> np.ndarray:
    return (-bz1 * SZ1 - bx1 * SX1 - bz2 * SZ2 - bx2 * SX2 - j * SXSX)


@dataclass(frozen=True)
class GateSegment:
    """One piecewise-constant segment: Hamiltonian parameters and duration."""

    duration: float                 # ns
    params: tuple                   # ((name, value), ...) for reporting
    hamiltonian: np.ndarray

    def __post_init__(self):
        if self.duration <= 0:
            raise ValueError("segment duration must be > 0")


def _single_segment(bz: float, bx: float, duration: float) -> GateSegment:
    return GateSegment(duration=duration, params=(("Bz", bz), ("Bx", bx)),
                       hamiltonian=single_qubit_hamiltonian(bz, bx))


def _two_segment(bz1: float, j: float, duration: float) -> GateSegment:
    # idle parameters (Bx1, Bz2, Bx2) are exactly zero in every segment used
    return GateSegment(
        duration=duration,
        params=(("Bz1", bz1), ("Bx1", 0.0), ("Bz2", 0.0), ("Bx2", 0.0), ("J", j)),
        hamiltonian=two_qubit_hamiltonian(bz1, 0.0, 0.0, 0.0, j),
    )


@dataclass(frozen=True)
class GateSequence:
    segments: tuple
    target_unitary: np.ndarray
    label: str

    @property
    def duration(self) -> float:
        return sum(s.duration for s in self.segments)

    @property
    def dim(self) -> int:
        return self.target_unitary.shape[0]


def single_qubit_target(phi: float) -> np.ndarray:
    return np.diag([np.exp(-1j * phi), np.exp(1j * phi)])


def two_qubit_target(phi: float) -> np.ndarray:
    """Conditional phase gate, diagonal in the x (x) x product basis."""
    phases = [
        (PLUS_X, PLUS_X, np.pi - phi),
        (PLUS_X, MINUS_X, np.pi + phi),
        (MINUS_X, PLUS_X, -(np.pi - phi)),
        (MINUS_X, MINUS_X, -(np.pi + phi)),
    ]
    u = np.zeros((4, 4), dtype=complex)
    for a, b, ph in phases:
        u += np.exp(1j * ph) * projector(np.kron(a, b))
    return u


def aa_single(phi: float, b0: float) -> GateSequence:
    """Three-segment geometric phase gate; durations (t1, 2 t1, t1)."""
    if b0 <= 0:
        raise ValueError("b0 must be > 0")
    t1 = np.pi / (2 * b0)
    segs = (
        _single_segment(0.0, -b0 / 2, t1),
        _single_segment(-(b0 / 2) * np.sin(phi), (b0 / 2) * np.cos(phi), 2 * t1),
        _single_segment(0.0, -b0 / 2, t1),
    )
    return GateSequence(segments=segs, target_unitary=single_qubit_target(phi),
                        label="aa-single")


def dyn_single(phi: float, b0: float) -> GateSequence:
    """One-segment dynamical phase gate over the same total time 4 t1."""
    if b0 <= 0:
        raise ValueError("b0 must be > 0")
    t_d = 2 * np.pi / b0          # 4 t1
    segs = (_single_segment(-phi / t_d, 0.0, t_d),)
    return GateSequence(segments=segs, target_unitary=single_qubit_target(phi),
                        label="dyn-single")


def aa_two(phi: float, jm: float) -> GateSequence:
    """Three-segment conditional geometric phase gate; durations (tm1, 2 tm1, tm1)."""
    if jm <= 0:
        raise ValueError("jm must be > 0")
    tm1 = np.pi / (4 * jm)
    segs = (
        _two_segment(-jm, 0.0, tm1),
        _two_segment(-jm * np.cos(phi), jm * np.sin(phi), 2 * tm1),
        _two_segment(-jm, 0.0, tm1),
    )
    return GateSequence(segments=segs, target_unitary=two_qubit_target(phi),
                        label="aa-two")


def dyn_two(phi: float, jm: float) -> GateSequence:
    """Exchange-only conditional dynamical phase gate over 4 tm1."""
    if jm <= 0:
        raise ValueError("jm must be > 0")
    if not 0 <= phi <= np.pi:
        raise ValueError("phi must lie in [0, pi]")
    tm1 = np.pi / (4 * jm)
    segs = (_two_segment(0.0, (np.pi - phi) * jm / np.pi, 4 * tm1),)
    return GateSequence(segments=segs, target_unitary=two_qubit_target(phi),
                        label="dyn-two")


def cnot_composition(jm: float = 5.0) -> np.ndarray:
    """CNOT in the x (x) x basis, composed from the conditional phase gate
    at Phi = pi/4 and fixed single-qubit rotations."""
    del jm  # durations do not affect the ideal composition
    a = expm(1j * (np.pi / (2 * np.sqrt(2))) * (SZ2 - SX2))
    return (a
            @ expm(1j * (np.pi / 4) * SX1)
            @ expm(1j * (np.pi / 4) * SX2)
            @ two_qubit_target(np.pi / 4)
            @ expm(1j * (np.pi / 2) * SX1)
            @ a)


def ideal_propagator(seq: GateSequence) -> np.ndarray:
    """Zero-coupling unitary of the whole sequence (later segments leftmost)."""
    u = np.eye(seq.dim, dtype=complex)
    for seg in seq.segments:
        u = expm(-1j * seg.hamiltonian * seg.duration) @ u
    return u


def sequence_generators(seq: GateSequence,
                        couplings: list[CouplingSpec]) -> list[Generator]:
    return [build_generator(seg.hamiltonian, couplings) for seg in seq.segments]


def sequence_propagator(seq: GateSequence,
                        couplings: list[CouplingSpec]) -> np.ndarray:
    """Superoperator for the full sequence: product of segment exponentials."""
    d2 = seq.dim ** 2
    s = np.eye(d2, dtype=complex)
    for gen, seg in zip(sequence_generators(seq, couplings), seq.segments):
        s = expm(gen.matrix * seg.duration) @ s
    return s


def run_sequence(seq: GateSequence, rho0: np.ndarray,
                 couplings: list[CouplingSpec], n_time_samples: int = 200,
                 total_time: float | None = None) -> Trajectory:
    """Evolve through the segment chain, sampling a uniform time grid.

    Segment boundaries are always included as sample points; the coupling
    operators are the same in every segment.  If ``total_time`` exceeds the
    sequence duration, evolution continues under the final segment's
    generator (used for long-time entanglement studies).
    """
    rho0 = _check_state(rho0, seq.dim)
    gens = sequence_generators(seq, couplings)
    t_seq = seq.duration
    t_end = t_seq if total_time is None else float(total_time)
    if t_end < 0:
        raise ValueError("total_time must be >= 0")

    boundaries = np.cumsum([0.0] + [s.duration for s in seq.segments])
    grid = np.linspace(0.0, t_end, n_time_samples + 1)
    grid = np.union1d(np.round(grid, 15), np.round(boundaries[boundaries <= t_end], 15))

    states = []
    v_start = vectorize(rho0)     # state at the start of the current segment
    seg_idx = 0
    for t in grid:
        # advance the segment-start state across any boundaries passed
        while seg_idx < len(gens) - 1 and t > boundaries[seg_idx + 1] + 1e-12:
            dt = boundaries[seg_idx + 1] - boundaries[seg_idx]
            v_start = expm(gens[seg_idx].matrix * dt) @ v_start
            seg_idx += 1
        dt = t - boundaries[seg_idx]
        states.append(devectorize(expm(gens[seg_idx].matrix * dt) @ v_start))
    return Trajectory(times=grid, states=np.array(states))


def make_couplings(dim: int, bath, axis: str = "z",
                   topology: str = "common") -> list[CouplingSpec]:
    """Coupling operators for one qubit, or two qubits sharing one bath or
    attached to two independent baths with equal spectral densities."""
    op = {"z": SIGMA_Z, "x": SIGMA_X}.get(axis)
    if op is None:
        raise ValueError("axis must be 'z' or 'x'")
    if dim == 2:
        return [CouplingSpec(operator=op, bath=bath, label=f"s{axis}")]
    if dim != 4:
        raise ValueError("dim must be 2 or 4")
    op1, op2 = kron(op, I2), kron(I2, op)
    if topology == "common":
        return [CouplingSpec(operator=op1 + op2, bath=bath, label="collective")]
    if topology == "independent":
        return [CouplingSpec(operator=op1, bath=bath, label="qubit1"),
                CouplingSpec(operator=op2, bath=bath, label="qubit2")]
    raise ValueError("topology must be 'common' or 'independent'")
