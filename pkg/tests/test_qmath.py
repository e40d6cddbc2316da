import numpy as np
import pytest

from phasegates.qmath import (I2, SIGMA_X, SIGMA_Z, bell_state, devectorize,
                              expm, ket, kron, phase_min_distance, projector,
                              superop_change_basis, vectorize)
from _oracles import expm_taylor

RNG = np.random.default_rng(1234)


def random_complex(shape, scale=1.0):
    return scale * (RNG.normal(size=shape) + 1j * RNG.normal(size=shape))


class TestKron:
    def test_identity(self):
        assert np.allclose(kron(I2, I2), np.eye(4))

    def test_pauli_x_pair(self):
        expected = np.fliplr(np.eye(4))
        assert np.allclose(kron(SIGMA_X, SIGMA_X), expected)

    def test_sz_with_identity(self):
        m = kron(SIGMA_Z, I2)
        assert m[0, 0] == 1 and m[2, 2] == -1

    def test_associative_bilinear(self):
        for _ in range(5):
            a, b, c = (random_complex((2, 2)) for _ in range(3))
            assert np.allclose(kron(kron(a, b), c), kron(a, kron(b, c)),
                               atol=1e-12)
            s, t = RNG.normal(), RNG.normal()
            assert np.allclose(kron(s * a + t * b, c),
                               s * kron(a, c) + t * kron(b, c), atol=1e-12)

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            kron(np.ones((2, 3)), I2)


class TestExpm:
    def test_zero(self):
        assert np.allclose(expm(np.zeros((4, 4))), np.eye(4))

    def test_pauli_rotation(self):
        got = expm(-1j * (np.pi / 4) * SIGMA_X)
        want = np.cos(np.pi / 4) * I2 - 1j * np.sin(np.pi / 4) * SIGMA_X
        assert np.allclose(got, want, atol=1e-14)

    def test_matches_taylor_oracle(self):
        m = random_complex((4, 4))
        m *= 5.0 / np.linalg.norm(m, 2)
        assert np.linalg.norm(expm(m) - expm_taylor(m)) < 1e-10

    def test_inverse_identity(self):
        for _ in range(5):
            m = random_complex((4, 4))
            m *= 10.0 / np.linalg.norm(m, 2)
            assert np.linalg.norm(expm(m) @ expm(-m) - np.eye(4)) < 1e-10

    def test_similarity_consistency(self):
        d = np.diag(random_complex(4))
        p = random_complex((4, 4))
        m = p @ d @ np.linalg.inv(p)
        want = p @ np.diag(np.exp(np.diag(d))) @ np.linalg.inv(p)
        assert np.linalg.norm(expm(m) - want) < 1e-9

    def test_rejects_nan(self):
        m = np.zeros((2, 2))
        m[0, 0] = np.nan
        with pytest.raises(ValueError):
            expm(m)


class TestVectorize:
    def test_round_trip(self):
        rho = random_complex((4, 4))
        assert np.allclose(devectorize(vectorize(rho)), rho)

    def test_pure_state_order(self):
        assert np.allclose(vectorize(projector(np.array([1, 0]))), [1, 0, 0, 0])

    def test_diagonal_order(self):
        assert np.allclose(vectorize(np.diag([0.25, 0.75]).astype(complex)),
                           [0.25, 0, 0, 0.75])

    def test_basis_change_round_trip(self):
        m = random_complex((4, 4))
        v, _ = np.linalg.qr(random_complex((2, 2)))
        back = superop_change_basis(superop_change_basis(m, v), np.conj(v).T)
        assert np.allclose(back, m, atol=1e-12)


def test_ket_normalizes():
    psi = ket([3, 4j])
    assert abs(np.linalg.norm(psi) - 1) < 1e-12


def test_phase_min_distance_ignores_global_phase():
    u = expm(-1j * 0.7 * SIGMA_X)
    assert phase_min_distance(u, np.exp(1j * 2.1) * u) < 1e-12
    assert phase_min_distance(u, SIGMA_Z @ u) > 0.1


def test_bell_states_normalized_orthogonal():
    names = ["psi+", "psi-", "phi+", "phi-"]
    states = [bell_state(n) for n in names]
    g = np.array([[np.vdot(a, b) for b in states] for a in states])
    assert np.allclose(g, np.eye(4), atol=1e-12)
