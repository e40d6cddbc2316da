"""Experiment runner: figure-analog datasets and single trajectory runs.

Every run writes one CSV (UTF-8, LF, header row, 17-significant-digit floats)
plus a JSON sidecar holding the fully resolved configuration, so that the
dataset alone suffices to re-run the experiment exactly.
"""
from __future__ import annotations

import csv
import dataclasses
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .bath import BathSpec
from .gates import (GateSequence, aa_single, aa_two, dyn_single, dyn_two,
                    make_couplings, run_sequence, sequence_propagator)
from .metrics import (average_fidelity, concurrence, f_d_closed_form,
                      fidelity, nearest_state)
from .qmath import PLUS_X, bell_state, devectorize, projector, vectorize

SCHEMA_VERSION = 1

EXPERIMENTS = ("fig2-grid", "fig3-dyn-fidelity", "fig4-contour",
               "fig6-avg-fidelity", "fig7-concurrence", "single-run")

GATES = {
    "aa-single": aa_single,
    "dyn-single": dyn_single,
    "aa-two": aa_two,
    "dyn-two": dyn_two,
}

# Column contracts, shared with the plotting component.
HEADERS = {
    "fig2-grid": ["alpha", "phi", "fidelity_aa"],
    "fig3-dyn-fidelity": ["kT", "alpha", "fidelity_dyn", "fidelity_closed_form"],
    "fig4-contour": ["alpha", "phi", "f_aa", "f_dyn", "diff"],
    "fig6-avg-fidelity": ["phi", "gate", "bath_topology", "avg_fidelity",
                          "std_error"],
    "fig7-concurrence": ["t", "gate", "bath_topology", "input_state",
                         "concurrence"],
}


@dataclass
class ExperimentConfig:
    experiment: str
    output: str
    b0: float = 10.0                  # GHz
    jm: float = 5.0                   # GHz
    coupling: float = 1e-3            # dimensionless lambda
    omega_cutoff: float | None = None  # GHz; default 50*B0 / 50*Jm
    kt: tuple = ()                    # GHz; empty -> experiment default
    phi: float | None = None          # radians, single-phi experiments
    alpha_min: float = 0.0
    alpha_max: float = float(np.pi)
    alpha_points: int = 50
    phi_min: float = 0.0
    phi_max: float = float(np.pi)
    phi_points: int = 50
    coupling_axis: str = "z"
    bath_topology: str = "common"
    n_states: int = 1000
    seed: int = 0
    sampler: str = "haar"
    time_samples: int = 200
    gate: str | None = None           # single-run only
    input_state: str | None = None    # single-run only
    t_max: float | None = None        # ns, extends beyond the gate duration

    def validate(self):
        if self.experiment not in EXPERIMENTS:
            raise ValueError(f"experiment: unknown value {self.experiment!r}")
        if self.coupling < 0:
            raise ValueError("coupling: must be >= 0")
        if self.b0 <= 0:
            raise ValueError("b0: must be > 0")
        if self.jm <= 0:
            raise ValueError("jm: must be > 0")
        if self.omega_cutoff is not None and self.omega_cutoff <= 0:
            raise ValueError("omega_cutoff: must be > 0")
        if any(k < 0 for k in self.kt):
            raise ValueError("kt: temperatures must be >= 0")
        if self.alpha_points < 1 or self.phi_points < 1:
            raise ValueError("alpha_points/phi_points: grids must be non-empty")
        if self.coupling_axis not in ("z", "x"):
            raise ValueError("coupling_axis: must be 'z' or 'x'")
        if self.bath_topology not in ("common", "independent"):
            raise ValueError("bath_topology: must be 'common' or 'independent'")
        if self.n_states < 1:
            raise ValueError("n_states: must be >= 1")
        if self.time_samples < 1:
            raise ValueError("time_samples: must be >= 1")
        if self.experiment == "single-run":
            if self.gate not in GATES:
                raise ValueError(f"gate: must be one of {sorted(GATES)}")
            if not self.input_state:
                raise ValueError("gate: single-run requires input_state")

    # experiment-specific defaults for parameters the figure captions omit
    def resolved(self) -> "ExperimentConfig":
        cfg = dataclasses.replace(self)
        two_qubit = cfg.experiment in ("fig6-avg-fidelity", "fig7-concurrence") \
            or (cfg.gate or "").endswith("-two")
        if cfg.omega_cutoff is None:
            cfg.omega_cutoff = 50.0 * (cfg.jm if two_qubit else cfg.b0)
        if not cfg.kt:
            defaults = {
                "fig2-grid": (0.0,),
                "fig3-dyn-fidelity": (0.0, 0.05 * cfg.b0, 0.1 * cfg.b0),
                "fig4-contour": (0.05 * cfg.b0,),
                "fig6-avg-fidelity": (0.05 * cfg.jm,),
                "fig7-concurrence": (0.0,),
                "single-run": (0.0,),
            }
            cfg.kt = defaults[cfg.experiment]
        if cfg.phi is None:
            cfg.phi = float(np.pi / 4) if two_qubit else float(np.pi / 2)
        return cfg

    def as_dict(self) -> dict:
        d = dataclasses.asdict(self)
        d["kt"] = list(self.kt)
        d["schema_version"] = SCHEMA_VERSION
        return d


def _fmt(x) -> str:
    if isinstance(x, float):
        return format(x, ".17g")
    return str(x)


def _write_dataset(cfg: ExperimentConfig, header: list[str], rows: list):
    out = Path(cfg.output)
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([_fmt(x) for x in row])
    sidecar = out.with_suffix(".json") if out.suffix == ".csv" \
        else Path(str(out) + ".json")
    with open(sidecar, "w", encoding="utf-8") as fh:
        json.dump(cfg.as_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")
    return out, sidecar


def _concurrence(rho) -> float:
    """Concurrence with a positivity repair for transient Redfield negativity.

    The strict routine refuses eigenvalues below -1e-6; mid-gate states of the
    geometric two-qubit sequence can dip a few 1e-3 below zero, so those are
    first projected back onto the nearest density matrix.
    """
    if np.linalg.eigvalsh(0.5 * (rho + np.conj(rho).T))[0] < -1e-6:
        rho = nearest_state(rho)
    return concurrence(rho)


def _alpha_grid(cfg):
    return np.linspace(cfg.alpha_min, cfg.alpha_max, cfg.alpha_points)


def _phi_grid(cfg):
    return np.linspace(cfg.phi_min, cfg.phi_max, cfg.phi_points)


def _single_qubit_fidelity_map(cfg, make_seq, bath):
    """fidelity[alpha_index, phi_index] for one single-qubit gate family."""
    cpl = make_couplings(2, bath, axis=cfg.coupling_axis)
    alphas, phis = _alpha_grid(cfg), _phi_grid(cfg)
    props = [(phi, sequence_propagator(make_seq(phi, cfg.b0), cpl)) for phi in phis]
    targets = [make_seq(phi, cfg.b0).target_unitary for phi in phis]
    out = np.empty((len(alphas), len(phis)))
    for i, a in enumerate(alphas):
        psi = np.array([np.cos(a), np.sin(a)], dtype=complex)
        v0 = vectorize(projector(psi))
        for j, (phi, prop) in enumerate(props):
            out[i, j] = fidelity(psi, targets[j], devectorize(prop @ v0))
    return alphas, phis, out


def _run_fig2(cfg):
    bath = BathSpec(cfg.coupling, cfg.omega_cutoff, cfg.kt[0])
    alphas, phis, f = _single_qubit_fidelity_map(cfg, aa_single, bath)
    rows = [(float(a), float(p), f[i, j])
            for i, a in enumerate(alphas) for j, p in enumerate(phis)]
    return HEADERS["fig2-grid"], rows


def _run_fig3(cfg):
    rows = []
    for kt in cfg.kt:
        bath = BathSpec(cfg.coupling, cfg.omega_cutoff, kt)
        cpl = make_couplings(2, bath, axis=cfg.coupling_axis)
        seq = dyn_single(cfg.phi, cfg.b0)
        prop = sequence_propagator(seq, cpl)
        for a in _alpha_grid(cfg):
            psi = np.array([np.cos(a), np.sin(a)], dtype=complex)
            rho = devectorize(prop @ vectorize(projector(psi)))
            rows.append((float(kt), float(a),
                         fidelity(psi, seq.target_unitary, rho),
                         f_d_closed_form(a, bath, cfg.b0)))
    return HEADERS["fig3-dyn-fidelity"], rows


def _run_fig4(cfg):
    bath = BathSpec(cfg.coupling, cfg.omega_cutoff, cfg.kt[0])
    alphas, phis, f_aa = _single_qubit_fidelity_map(cfg, aa_single, bath)
    _, _, f_dyn = _single_qubit_fidelity_map(cfg, dyn_single, bath)
    rows = [(float(a), float(p), f_aa[i, j], f_dyn[i, j], f_aa[i, j] - f_dyn[i, j])
            for i, a in enumerate(alphas) for j, p in enumerate(phis)]
    return HEADERS["fig4-contour"], rows


def _run_fig6(cfg):
    bath = BathSpec(cfg.coupling, cfg.omega_cutoff, cfg.kt[0])
    rows = []
    for phi in _phi_grid(cfg):
        for gate_name, make_seq in (("aa-two", aa_two), ("dyn-two", dyn_two)):
            for topo in ("common", "independent"):
                cpl = make_couplings(4, bath, axis=cfg.coupling_axis,
                                     topology=topo)
                af = average_fidelity(make_seq(phi, cfg.jm), cpl,
                                      n_states=cfg.n_states, seed=cfg.seed,
                                      sampler=cfg.sampler)
                rows.append((float(phi), gate_name, topo, af.mean, af.std_error))
    return HEADERS["fig6-avg-fidelity"], rows


def _run_fig7(cfg):
    bath = BathSpec(cfg.coupling, cfg.omega_cutoff, cfg.kt[0])
    rows = []
    for gate_name, make_seq in (("aa-two", aa_two), ("dyn-two", dyn_two)):
        seq = make_seq(cfg.phi, cfg.jm)
        for topo in ("common", "independent"):
            cpl = make_couplings(4, bath, axis=cfg.coupling_axis, topology=topo)
            for state_name in ("psi+", "psi-", "phi+", "phi-"):
                rho0 = projector(bell_state(state_name))
                traj = run_sequence(seq, rho0, cpl,
                                    n_time_samples=cfg.time_samples,
                                    total_time=cfg.t_max)
                for t, rho in zip(traj.times, traj.states):
                    rows.append((float(t), gate_name, topo, state_name,
                                 _concurrence(rho)))
    return HEADERS["fig7-concurrence"], rows


def _input_state(cfg, dim):
    name = cfg.input_state
    if name.startswith("alpha:"):
        a = float(name.split(":", 1)[1])
        return np.array([np.cos(a), np.sin(a)], dtype=complex)
    if dim == 4:
        if name == "x++":
            return np.kron(PLUS_X, PLUS_X)
        return bell_state(name)
    raise ValueError(f"input_state: {name!r} is not valid for a {dim}-dim gate")


def _run_single(cfg):
    two_qubit = cfg.gate.endswith("-two")
    bath = BathSpec(cfg.coupling, cfg.omega_cutoff, cfg.kt[0])
    scale = cfg.jm if two_qubit else cfg.b0
    seq = GATES[cfg.gate](cfg.phi, scale)
    cpl = make_couplings(seq.dim, bath, axis=cfg.coupling_axis,
                         topology=cfg.bath_topology)
    psi = _input_state(cfg, seq.dim)
    traj = run_sequence(seq, projector(psi), cpl,
                        n_time_samples=cfg.time_samples, total_time=cfg.t_max)
    traces = traj.traces()
    mins = traj.min_eigenvalues()
    header = ["t", "fidelity"] + (["concurrence"] if two_qubit else []) \
        + ["trace", "min_eigenvalue"]
    rows = []
    for k, (t, rho) in enumerate(zip(traj.times, traj.states)):
        row = [float(t), fidelity(psi, seq.target_unitary, rho)]
        if two_qubit:
            row.append(_concurrence(rho))
        row += [float(traces[k]), float(mins[k])]
        rows.append(tuple(row))
    return header, rows


_RUNNERS = {
    "fig2-grid": _run_fig2,
    "fig3-dyn-fidelity": _run_fig3,
    "fig4-contour": _run_fig4,
    "fig6-avg-fidelity": _run_fig6,
    "fig7-concurrence": _run_fig7,
    "single-run": _run_single,
}


def run(cfg: ExperimentConfig):
    """Validate, resolve defaults, run the experiment and write the dataset."""
    cfg.validate()
    cfg = cfg.resolved()
    header, rows = _RUNNERS[cfg.experiment](cfg)
    return _write_dataset(cfg, header, rows)
