"""Ohmic bath: spectral density, half-Fourier correlation function and rates.

Energies, frequencies and temperatures are in GHz (angular frequency units,
hbar = 1, Boltzmann constant absorbed into kT); times are in ns.

The half-Fourier transform of the bath correlation function is

    gamma(B) = (pi/2) J(2B) (coth(B/kT) + 1)
               - i PV int_0^Omega dw J(w) (2B coth(w/2kT) + w) / (w^2 - 4B^2)

with the Ohmic spectral density J(w) = lam * w / (1 + w^2/Omega^2).  The real
part is evaluated in closed form (with explicit B -> 0 and kT -> 0 limits);
the principal-value integral is done by singularity-splitting quadrature.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.integrate import quad


@dataclass(frozen=True)
class BathSpec:
    """Ohmic bath parameters: dimensionless coupling, cutoff and temperature."""

    coupling: float       # dimensionless lambda
    cutoff: float         # Omega, GHz
    kT: float             # temperature in energy units, GHz

    def __post_init__(self):
        if self.coupling < 0:
            raise ValueError("coupling must be >= 0")
        if self.cutoff <= 0:
            raise ValueError("cutoff must be > 0")
        if self.kT < 0:
            raise ValueError("kT must be >= 0")


@dataclass(frozen=True)
class RateSet:
    """gamma(+-B) and the combinations mu+-, xi+- used by the Redfield forms."""

    gamma_plus: complex    # gamma(B)
    gamma_minus: complex   # gamma(-B)
    mu_plus: complex       # gamma(B) + gamma*(B), real
    mu_minus: complex      # gamma(B) - gamma*(B), purely imaginary
    xi_plus: complex       # gamma(-B) + gamma*(B)
    xi_minus: complex      # gamma(-B) - gamma*(B)


def coth(x: float) -> float:
    # saturates exactly for |x| > 30 to avoid overflow at low temperature
    if abs(x) > 30.0:
        return 1.0 if x > 0 else -1.0
    return 1.0 / np.tanh(x)


def ohmic_j(omega: float, bath: BathSpec) -> float:
    """Ohmic spectral density with a soft (Drude-like) cutoff; odd in omega."""
    return bath.coupling * omega / (1.0 + (omega / bath.cutoff) ** 2)


def _gamma_real(B: float, bath: BathSpec) -> float:
    if bath.kT == 0.0:
        if B > 0:
            return np.pi * ohmic_j(2 * B, bath)
        return 0.0  # no absorption from a zero-temperature bath (also B = 0)
    if B == 0.0:
        return np.pi * bath.coupling * bath.kT
    return 0.5 * np.pi * ohmic_j(2 * B, bath) * (coth(B / bath.kT) + 1.0)


def _pv_numerator(w: float, B: float, bath: BathSpec) -> float:
    # J(w) * (2B coth(w/2kT) + w); regular at w -> 0 because J ~ w.
    # The + sign on the w term follows from the tau integral of the original
    # definition (sin transform -> +w/(a^2+w^2)); transcriptions of this
    # formula sometimes carry a - sign there, which the double-integral
    # oracle rules out.
    if bath.kT == 0.0:
        th = 2 * B + w
    elif w == 0.0:
        # J(w) * 2B coth(w/2kT) -> 4 B lam kT as w -> 0 (coth pole cancelled)
        return 4.0 * B * bath.coupling * bath.kT
    else:
        th = 2 * B * coth(w / (2 * bath.kT)) + w
    return ohmic_j(w, bath) * th


def _gamma_imag(B: float, bath: BathSpec) -> float:
    lam, om = bath.coupling, bath.cutoff
    if lam == 0.0:
        return 0.0
    epsabs = 1e-10 * lam * om
    s = 2.0 * abs(B)

    def h(w):
        return _pv_numerator(w, B, bath) / (w * w - 4 * B * B)

    if B == 0.0:
        # integrand reduces to +J(w)/w, no singularity
        val, _ = quad(lambda w: ohmic_j(w, bath) / w, 0, om,
                      epsabs=epsabs, epsrel=1e-11, limit=200)
        return -val

    if s >= om:
        # pole outside the integration range; plain adaptive quadrature
        val, _ = quad(h, 0, om, epsabs=epsabs, epsrel=1e-11, limit=400)
        return -val

    delta = min(abs(B), om - s, 0.1 * om) / 2.0

    def phi(w):
        return _pv_numerator(w, B, bath) / (w + s)

    def antisym(u):
        # (phi(s+u) - phi(s-u))/u is regular; u -> 0 limit is 2 phi'(s)
        if u < 1e-9 * s:
            du = 1e-7 * s
            return (phi(s + du) - phi(s - du)) / du
        return (phi(s + u) - phi(s - u)) / u

    window, _ = quad(antisym, 0, delta, epsabs=epsabs, epsrel=1e-11, limit=200)
    left, _ = quad(h, 0, s - delta, epsabs=epsabs, epsrel=1e-11, limit=400)
    right, _ = quad(h, s + delta, om, epsabs=epsabs, epsrel=1e-11, limit=400)
    return -(window + left + right)


@lru_cache(maxsize=None)
def _gamma_cached(B: float, bath: BathSpec) -> complex:
    return complex(_gamma_real(B, bath), _gamma_imag(B, bath))


def gamma(B: float, bath: BathSpec) -> complex:
    """Half-Fourier bath correlation function gamma(B).

    Memoized per (B, bath); gate sequences re-evaluate the same handful of
    half-gap arguments thousands of times during sweeps.
    """
    if not np.isfinite(B):
        raise ValueError("B must be finite")
    return _gamma_cached(float(B), bath)


def rate_set(B: float, bath: BathSpec) -> RateSet:
    """All six rate combinations from one pair of gamma evaluations."""
    gp = gamma(B, bath)
    gm = gamma(-B, bath)
    return RateSet(
        gamma_plus=gp,
        gamma_minus=gm,
        mu_plus=gp + np.conj(gp),
        mu_minus=gp - np.conj(gp),
        xi_plus=gm + np.conj(gp),
        xi_minus=gm - np.conj(gp),
    )
