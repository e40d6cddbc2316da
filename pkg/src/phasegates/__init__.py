"""Simulation of multistep geometric phase gates and their dynamical
equivalents under Bloch-Redfield decoherence from Ohmic oscillator baths."""

from .bath import BathSpec, RateSet, gamma, ohmic_j, rate_set
from .gates import (GateSegment, GateSequence, aa_single, aa_two,
                    cnot_composition, dyn_single, dyn_two, ideal_propagator,
                    make_couplings, run_sequence, sequence_propagator)
from .metrics import (AverageFidelity, analytic_pq, average_fidelity,
                      concurrence, f_d_closed_form, fidelity, haar_states,
                      nearest_state)
from .qmath import bell_state, phase_min_distance, projector
from .redfield import (CouplingSpec, Generator, Trajectory, build_generator,
                       closed_form_single_qubit, evolve, evolve_trajectory)

__all__ = [
    "BathSpec", "RateSet", "gamma", "ohmic_j", "rate_set",
    "GateSegment", "GateSequence", "aa_single", "aa_two", "dyn_single",
    "dyn_two", "cnot_composition", "ideal_propagator", "make_couplings",
    "run_sequence", "sequence_propagator",
    "AverageFidelity", "analytic_pq", "average_fidelity", "concurrence",
    "f_d_closed_form", "fidelity", "haar_states", "nearest_state",
    "bell_state", "phase_min_distance", "projector",
    "CouplingSpec", "Generator", "Trajectory", "build_generator",
    "closed_form_single_qubit", "evolve", "evolve_trajectory",
]

__version__ = "0.1.0"
