import numpy as np
import pytest

from phasegates.bath import BathSpec, rate_set
from phasegates.gates import make_couplings, single_qubit_hamiltonian, two_qubit_hamiltonian
from phasegates.qmath import SIGMA_Z, dag, expm, projector
from phasegates.redfield import (CouplingSpec, build_generator,
                                 closed_form_single_qubit, evolve,
                                 evolve_trajectory)

B0 = 10.0
LAM = 1e-3
FIELD_GRID = [(5.0, 0.0), (0.0, 5.0), (3.0, 4.0), (-3.0, 4.0),
              (3.0, -4.0), (-5.0, 0.0), (2.0, 7.0), (-2.0, -7.0)]
TEMPS = [0.0, 0.05 * B0, 0.2 * B0]


def bath_at(kt):
    return BathSpec(coupling=LAM, cutoff=50 * B0, kT=kt)


class TestClosedForm:
    def test_pure_sz_reduces_to_diagonal(self):
        for kt in [0.2, 1.0]:
            bath = bath_at(kt)
            gen = closed_form_single_qubit(5.0, 0.0, bath)
            m = gen.in_eigenbasis()
            mu0 = 2 * np.pi * kt * LAM
            want = np.diag([0, -10j - 2 * mu0, 10j - 2 * mu0, 0])
            assert np.allclose(m, want, atol=1e-12)

    def test_no_bath_leaves_commutator(self):
        gen = closed_form_single_qubit(3.0, 4.0, BathSpec(0.0, 500.0, 0.5))
        m = gen.in_eigenbasis()
        assert np.allclose(m, np.diag([0, -10j, 10j, 0]), atol=1e-12)

    def test_theta_90_matches_generic(self):
        bath = bath_at(0.5)
        cf = closed_form_single_qubit(0.0, B0, bath)
        gen = build_generator(single_qubit_hamiltonian(0.0, B0),
                              make_couplings(2, bath))
        assert np.max(np.abs(cf.in_eigenbasis() - gen.in_eigenbasis(cf.basis))) < 1e-10

    def test_zero_field_is_zero(self):
        gen = closed_form_single_qubit(0.0, 0.0, bath_at(0.5))
        assert np.allclose(gen.matrix, 0)


class TestGenericBuilder:
    def test_matches_closed_form_on_grid(self):
        for bz, bx in FIELD_GRID:
            for kt in TEMPS:
                bath = bath_at(kt)
                cf = closed_form_single_qubit(bz, bx, bath)
                gen = build_generator(single_qubit_hamiltonian(bz, bx),
                                      make_couplings(2, bath))
                err = np.max(np.abs(cf.in_eigenbasis() - gen.in_eigenbasis(cf.basis)))
                assert err < 1e-10, (bz, bx, kt, err)

    def test_two_qubit_unitary_limit(self):
        bath = BathSpec(0.0, 250.0, 0.0)
        h = two_qubit_hamiltonian(-5.0, 0.0, 0.0, 0.0, 3.0)
        gen = build_generator(h, make_couplings(4, bath, topology="common"))
        rho0 = projector(np.array([0.5, 0.5, 0.5, 0.5], dtype=complex))
        t = 0.37
        got = evolve(gen, rho0, t)
        u = expm(-1j * h * t)
        assert np.max(np.abs(got - u @ rho0 @ dag(u))) < 1e-10

    def test_rejects_non_hermitian(self):
        h = np.array([[0, 1], [0, 0]], dtype=complex)
        with pytest.raises(ValueError):
            build_generator(h, [])
        with pytest.raises(ValueError):
            CouplingSpec(operator=h, bath=bath_at(0.0))

    def test_degenerate_two_qubit_gaps_grouped(self):
        # J = 0 segment: doubly degenerate levels must give one frequency class
        bath = bath_at(0.5)
        h = two_qubit_hamiltonian(-5.0, 0.0, 0.0, 0.0, 0.0)
        gen = build_generator(h, make_couplings(4, bath, topology="common"))
        assert len(gen.energy_gaps) == 2  # {0, 10}


class TestEvolve:
    def test_t_zero(self):
        bath = bath_at(0.5)
        gen = closed_form_single_qubit(5.0, 0.0, bath)
        rho0 = projector(np.array([np.cos(0.6), np.sin(0.6)]))
        assert np.allclose(evolve(gen, rho0, 0.0), rho0, atol=1e-14)

    def test_unitary_limit(self):
        h = single_qubit_hamiltonian(3.0, 4.0)
        gen = build_generator(h, make_couplings(2, BathSpec(0.0, 500.0, 0.0)))
        rho0 = projector(np.array([0.6, 0.8]))
        t = 1.1
        u = expm(-1j * h * t)
        assert np.max(np.abs(evolve(gen, rho0, t) - u @ rho0 @ dag(u))) < 1e-10

    def test_coherence_decay_scalar_solution(self):
        # diagonal generator: rho_+- picks up exp((-2iB - 2 mu+(0)) t)
        kt = 0.7
        bath = bath_at(kt)
        bz = -4.0
        gen = closed_form_single_qubit(bz, 0.0, bath)
        rho0 = projector(np.array([1, 1]) / np.sqrt(2))
        t = 0.9
        rho_t = evolve(gen, rho0, t)
        b = abs(bz)
        mu0 = rate_set(0.0, bath).mu_plus
        # eigenbasis "+" is the higher-energy state; for bz < 0 that is |0>
        factor = np.exp((-2j * b - 2 * mu0) * t)
        assert abs(rho_t[0, 1] - 0.5 * factor) < 1e-10

    def test_populations_frozen_for_diagonal_generator(self):
        bath = bath_at(0.5)
        gen = closed_form_single_qubit(5.0, 0.0, bath)
        rho0 = projector(np.array([0.6, 0.8]))
        traj = evolve_trajectory(gen, rho0, 2.0, n_samples=20)
        for rho in traj.states:
            assert abs(rho[0, 0] - rho0[0, 0]) < 1e-10
            assert abs(rho[1, 1] - rho0[1, 1]) < 1e-10

    def test_rejects_negative_time(self):
        gen = closed_form_single_qubit(5.0, 0.0, bath_at(0.5))
        with pytest.raises(ValueError):
            evolve(gen, np.eye(2) / 2, -1.0)

    def test_conservation_along_trajectory(self):
        bath = bath_at(1.0)
        gen = build_generator(single_qubit_hamiltonian(3.0, -4.0),
                              make_couplings(2, bath))
        rho0 = projector(np.array([np.cos(1.0), np.sin(1.0)]))
        traj = evolve_trajectory(gen, rho0, 5.0, n_samples=50)
        assert np.max(np.abs(traj.traces() - 1)) < 1e-9
        assert np.max(traj.hermiticity_defects()) < 1e-9
        assert traj.min_eigenvalues().min() > -1e-6


def test_trace_preservation_structure():
    # population rows of M sum to zero column-wise
    bath = bath_at(0.5)
    for bz, bx in FIELD_GRID[:4]:
        gen = build_generator(single_qubit_hamiltonian(bz, bx),
                              make_couplings(2, bath))
        m = gen.matrix
        pop = m[0] + m[3]
        assert np.max(np.abs(pop)) < 1e-10
