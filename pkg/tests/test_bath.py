import numpy as np
import pytest

from phasegates.bath import BathSpec, coth, gamma, ohmic_j, rate_set
from _oracles import gamma_bruteforce

STD = BathSpec(coupling=1e-3, cutoff=500.0, kT=0.5)


class TestSpec:
    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            BathSpec(coupling=-1e-3, cutoff=500.0, kT=0.0)
        with pytest.raises(ValueError):
            BathSpec(coupling=1e-3, cutoff=0.0, kT=0.0)
        with pytest.raises(ValueError):
            BathSpec(coupling=1e-3, cutoff=500.0, kT=-0.1)


class TestOhmic:
    def test_zero_at_origin(self):
        assert ohmic_j(0.0, STD) == 0.0

    def test_value_at_cutoff(self):
        assert np.isclose(ohmic_j(STD.cutoff, STD),
                          STD.coupling * STD.cutoff / 2, rtol=1e-14)

    def test_odd(self):
        for w in np.random.default_rng(7).uniform(0.1, 800, size=10):
            assert np.isclose(ohmic_j(-w, STD), -ohmic_j(w, STD), rtol=1e-14)


class TestGamma:
    def test_mu_plus_zero_thermal(self):
        # mu+(0) = 2 pi kT lambda
        for kt in [0.05, 0.2, 0.5, 1.0, 3.0]:
            bath = BathSpec(1e-3, 500.0, kt)
            mu0 = 2 * gamma(0.0, bath).real
            assert np.isclose(mu0, 2 * np.pi * kt * 1e-3, rtol=1e-12)

    def test_zero_temperature_emission(self):
        bath = BathSpec(1e-3, 500.0, 0.0)
        for b in [0.5, 2.0, 10.0]:
            assert np.isclose(gamma(b, bath).real, np.pi * ohmic_j(2 * b, bath),
                              rtol=1e-13)

    def test_zero_temperature_no_absorption(self):
        bath = BathSpec(1e-3, 500.0, 0.0)
        for b in [0.5, 2.0, 10.0]:
            assert abs(gamma(-b, bath).real) < 1e-12

    def test_both_limits_zero(self):
        bath = BathSpec(1e-3, 500.0, 0.0)
        assert gamma(0.0, bath).real == 0.0

    def test_matches_double_integral_oracle(self):
        cases = [
            (1.0, BathSpec(1e-3, 500.0, 0.5)),
            (5.0, BathSpec(1e-3, 500.0, 0.0)),
            (-2.0, BathSpec(1e-3, 250.0, 0.25)),
            (3.0, BathSpec(5e-4, 100.0, 1.0)),
        ]
        for b, bath in cases:
            ref = gamma_bruteforce(b, bath)
            got = gamma(b, bath)
            assert abs(got - ref) / abs(ref) < 1e-6

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            gamma(np.nan, STD)

    def test_pv_quadrature_converged(self):
        # tightening the quadrature tolerances must not move Im gamma by more
        # than the contracted accuracy 1e-8 * lambda * Omega
        from phasegates import bath as bath_mod
        b = 1.3
        got = gamma(b, STD).imag
        ref = gamma_bruteforce(b, STD).imag
        assert abs(got - ref) < 1e-8 * STD.coupling * STD.cutoff

    def test_pole_outside_cutoff(self):
        # 2B > Omega: the frequency integral has no interior singularity, so
        # its principal value equals the plain integral (checked against the
        # oracle).  The real part keeps the closed form with the soft-cutoff
        # spectral density evaluated beyond Omega.
        bath = BathSpec(1e-3, 100.0, 0.5)
        got = gamma(80.0, bath)
        ref = gamma_bruteforce(80.0, bath)
        assert abs(got.imag - ref.imag) < 1e-6 * abs(ref.imag)
        want_re = 0.5 * np.pi * ohmic_j(160.0, bath) * (coth(80.0 / 0.5) + 1)
        assert np.isclose(got.real, want_re, rtol=1e-13)


class TestRateSet:
    def test_mu_plus_real(self):
        for b in [-3.0, 0.0, 1.7]:
            rs = rate_set(b, STD)
            assert abs(rs.mu_plus.imag) < 1e-14
            assert np.isclose(rs.mu_plus.real, 2 * gamma(b, STD).real, rtol=1e-14)

    def test_mu_minus_purely_imaginary(self):
        for b in [-3.0, 1.7, 5.5]:
            assert abs(rate_set(b, STD).mu_minus.real) < 1e-14

    def test_xi_plus_at_zero(self):
        rs = rate_set(0.0, STD)
        assert np.isclose(rs.xi_plus.real, 2 * gamma(0.0, STD).real, rtol=1e-13)

    def test_definitions(self):
        b = 2.4
        rs = rate_set(b, STD)
        gp, gm = gamma(b, STD), gamma(-b, STD)
        assert rs.gamma_plus == gp and rs.gamma_minus == gm
        assert np.isclose(rs.xi_minus, gm - np.conj(gp), rtol=1e-14)


def test_coth_guard():
    assert coth(31.0) == 1.0
    assert coth(-31.0) == -1.0
    assert np.isclose(coth(0.5), 1 / np.tanh(0.5), rtol=1e-14)
