"""Green-function route to the scattering observables.

The outgoing 2D Helmholtz Green function (i/4) H0, the plane-wave
expansion over angular-momentum channels, the integral representation of
the phase shift, its closed Gamma-ratio form for the inverse-square
potential, and the partial-wave scattering amplitude.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Dict, Iterable, Optional

import numpy as np
from scipy import special as _sp
from scipy.integrate import quad

from . import specfun as sf
from .errors import DomainError, QuadratureError
from .partialwave import (
    ClosedFormRadial,
    PhaseShift,
    ScatteringConfig,
    effective_order,
    exact_radial,
    internal_wavenumber,
)
from .potentials import InverseSquare, PotentialSpec, RegularizedDelta

#: Guard against non-integrable behavior of the S-wave integrand as nu -> 0.
MIN_EFFECTIVE_ORDER = 1e-6


@dataclass(frozen=True)
class QuadratureSpec:
    """Truncation radius (units 1/k), absolute tolerance, subdivision cap."""

    r_cut_over_k: float = 1000.0
    abs_tol: float = 1e-10
    max_subdivisions: int = 4000

    def __post_init__(self):
        if self.abs_tol <= 0:
            raise DomainError("abs_tol must be > 0")
        if self.r_cut_over_k < 50.0:
            raise DomainError("r_cut must be at least 50/k")


def green_function(k: float, separation: float) -> complex:
    """(i/4) H0(k |r - r'|), the outgoing Helmholtz Green function."""
    if separation <= 0:
        raise DomainError("Green function is singular at zero separation")
    return 0.25j * sf.hankel0(k * separation)


def expand_plane_wave(k: float, r: float, theta: float, L: int) -> complex:
    """Truncated channel expansion  sum_{|ell|<=L} i^ell J_ell(kr) e^{i ell theta}."""
    if L < 0:
        raise DomainError("L must be >= 0")
    total = complex(_sp.jv(0, k * r))
    for ell in range(1, L + 1):
        jl = float(_sp.jv(ell, k * r))
        # i^(-ell) J_(-ell) = i^(-ell) (-1)^ell J_ell = i^ell J_ell, so the
        # +/- ell pair combines into 2 cos(ell theta)
        total += (1j**ell) * jl * 2.0 * math.cos(ell * theta)
    return total


def weber_schafheitlin(alpha: float, beta: float, gamma_exp: float) -> float:
    """Closed form of  integral_0^inf J_alpha(x) J_beta(x) x^(-gamma) dx.

    Valid in the principal regime gamma > 0, alpha + beta - gamma + 1 > 0.
    A Gamma pole in the denominator makes the value zero.
    """
    if gamma_exp <= 0:
        raise DomainError("need gamma_exp > 0")
    if alpha + beta - gamma_exp + 1.0 <= 0:
        raise DomainError("divergent: need alpha + beta - gamma_exp + 1 > 0")
    num = sf.gamma_fn(gamma_exp) * sf.gamma_fn((alpha + beta - gamma_exp + 1.0) / 2.0)
    denom = 2.0**gamma_exp
    for arg in (
        (-alpha + beta + gamma_exp + 1.0) / 2.0,
        (alpha + beta + gamma_exp + 1.0) / 2.0,
        (alpha - beta + gamma_exp + 1.0) / 2.0,
    ):
        if arg <= 0 and arg == math.floor(arg):
            return 0.0  # reciprocal of a Gamma pole
        denom *= sf.gamma_fn(arg)
    return num / denom


def _quad_checked(f, lo, hi, tol, limit):
    val, err = quad(f, lo, hi, epsabs=tol, epsrel=0.0, limit=limit)
    if err > 1e3 * tol:
        raise QuadratureError(
            f"quadrature error estimate {err:.2e} above tolerance {tol:.2e}")
    return val


def radial_source_integral(
    ell: int,
    cfg: ScatteringConfig,
    p: PotentialSpec,
    radial: Optional[ClosedFormRadial] = None,
    q: Optional[QuadratureSpec] = None,
) -> float:
    """integral_0^inf r J_ell(kr) [2 m U(r)] phi_ell(r) dr.

    ``radial`` defaults to the exact solution for ``p``.  For the disc
    potentials the integrand is supported on [0, a]; for the
    inverse-square potential the oscillatory tail beyond the truncation
    radius is added through its leading asymptotic terms.
    """
    la = abs(ell)
    k = cfg.wavenumber_k
    if q is None:
        q = QuadratureSpec()
    if radial is None:
        radial = exact_radial(la, cfg, p)

    if isinstance(p, RegularizedDelta):
        a = p.radius_a
        wave = internal_wavenumber(cfg, p)
        w = k * k - wave.kappa_sq  # 2 m v(a) / (pi a^2)

        def f(r):
            return r * _sp.jv(la, k * r) * radial(r)

        return w * _quad_checked(f, 0.0, a, q.abs_tol, q.max_subdivisions)

    if not isinstance(p, InverseSquare):
        raise DomainError(f"unsupported potential {p!r}")
    if p.lam == 0.0:
        return 0.0

    nu = effective_order(la, cfg.mass_m, p.lam)
    if nu <= MIN_EFFECTIVE_ORDER:
        raise DomainError(
            f"integrand not integrable at the origin for nu = {nu}")
    two_m_lam = 2.0 * cfg.mass_m * p.lam
    X = q.r_cut_over_k  # in units of x = k r

    # x in [0, 1]: substitute x = u^2 to flatten the x^(nu+ell-1) endpoint
    def f_origin(u):
        x = u * u
        return 2.0 * _sp.jv(la, x) * radial(x / k) / u

    head = _quad_checked(f_origin, 0.0, 1.0, q.abs_tol, 200)

    def f_mid(x):
        return _sp.jv(la, x) * radial(x / k) / x

    mid = _quad_checked(f_mid, 1.0, X, q.abs_tol, q.max_subdivisions)

    # asymptotic tail of J_ell(x) J_nu(x) / x beyond X: the mean of the
    # leading product, its endpoint oscillation, and the non-oscillatory
    # part of the first amplitude correction, (nu^2 - ell^2) sin(Delta)/(2 pi x^3)
    delta_ang = (nu - la) * math.pi / 2.0
    psi = (la + nu + 1.0) * math.pi / 2.0
    tail = (math.cos(delta_ang) / (math.pi * X)
            - math.sin(2.0 * X - psi) / (2.0 * math.pi * X * X)
            + (nu * nu - la * la) * math.sin(delta_ang) / (4.0 * math.pi * X * X))
    return two_m_lam * (head + mid + tail)


def integral_phase_shift(
    ell: int,
    cfg: ScatteringConfig,
    p: PotentialSpec,
    radial: Optional[ClosedFormRadial] = None,
    q: Optional[QuadratureSpec] = None,
) -> float:
    """sin(delta_ell) = -(pi/2) integral r' J_ell(kr') [2mU] phi_ell dr'."""
    return -0.5 * math.pi * radial_source_integral(ell, cfg, p, radial, q)


@dataclass(frozen=True)
class ScatteringAmplitude:
    """Unimodular S-matrix elements e^(2 i delta_ell) up to |ell| = L."""

    k: float
    s_elements: Dict[int, complex]
    truncation_L: int

    def evaluate(self, theta: float) -> tuple[complex, float]:
        f = 0.0 + 0.0j
        for ell in range(-self.truncation_L, self.truncation_L + 1):
            f += (self.s_elements[abs(ell)] - 1.0) * cmath.exp(1j * ell * theta)
        f /= math.sqrt(2.0 * math.pi * self.k)
        return f, abs(f) ** 2


def build_amplitude(shifts: Iterable[PhaseShift], k: float) -> ScatteringAmplitude:
    """Assemble S-matrix elements from per-channel shifts (|ell| symmetry)."""
    s: Dict[int, complex] = {}
    for ps in shifts:
        s[abs(ps.ell)] = cmath.exp(2j * ps.delta_principal)
    if not s:
        raise DomainError("no phase shifts supplied")
    L = max(s)
    missing = [ell for ell in range(L + 1) if ell not in s]
    if missing:
        raise DomainError(f"shifts must cover ell = 0..{L}; missing {missing}")
    return ScatteringAmplitude(k=k, s_elements=s, truncation_L=L)


def scattering_amplitude(
    shifts: Iterable[PhaseShift], k: float, theta: float
) -> tuple[complex, float]:
    """(f(theta), dsigma/dtheta = |f|^2) from the partial-wave sum."""
    return build_amplitude(shifts, k).evaluate(theta)


def amplitude_from_source_integrals(
    integrals: Dict[int, float],
    shifts: Iterable[PhaseShift],
    k: float,
    theta: float,
) -> complex:
    """f(theta) assembled from the radial source integrals.

    ``integrals[ell]`` is :func:`radial_source_integral` for channel ell
    (filled by |ell| symmetry).  The channel coefficients are
    i^ell e^(i delta_ell), and the overall phase between the two
    asymptotic decompositions of the scattered wave is fixed so the
    result matches the partial-wave amplitude.
    """
    shift_map = {abs(ps.ell): ps for ps in shifts}
    L = max(abs(ell) for ell in integrals)
    total = 0.0 + 0.0j
    for ell in range(-L, L + 1):
        ps = shift_map[abs(ell)]
        s_l = integrals[abs(ell)]
        total += cmath.exp(1j * ps.delta_principal) * s_l * cmath.exp(1j * ell * theta)
    curly_j = 2.0 * math.pi * total
    # adopted phase convention between the e^{i(kr+pi/4)} and
    # e^{-3 i pi/4} asymptotic writings of the scattered wave
    return 1j * (-curly_j / math.sqrt(8.0 * math.pi * k))
