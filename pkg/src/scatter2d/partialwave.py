"""Exact radial solutions, boundary matching, and zero-radius limits.

All phase-shift information lives in tan(delta_ell).  For the disc
potentials it comes from matching the interior solution onto
``b J_ell(kr) + c Y_ell(kr)`` at r = a with continuity of value and
derivative; for the inverse-square potential it is closed form and
energy independent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import specfun as sf
from .errors import (
    DomainError,
    ExtrapolationError,
    FallToCenterError,
    ResonanceError,
)
from .potentials import (
    ConstantStrength,
    InverseSquare,
    LogRunning,
    PotentialSpec,
    RegularizedDelta,
    Scheme,
)


@dataclass(frozen=True)
class ScatteringConfig:
    """Mass and wavenumber of the incident wave (hbar = 1)."""

    mass_m: float
    wavenumber_k: float

    def __post_init__(self):
        if not (self.mass_m > 0):
            raise DomainError(f"mass_m must be > 0, got {self.mass_m}")
        if not (self.wavenumber_k > 0):
            raise DomainError(f"wavenumber_k must be > 0, got {self.wavenumber_k}")

    @property
    def energy(self) -> float:
        return self.wavenumber_k**2 / (2.0 * self.mass_m)


@dataclass(frozen=True)
class PartialWave:
    """Angular-momentum channel with its effective Bessel order."""

    ell: int
    nu: float


@dataclass(frozen=True)
class InternalWave:
    """Interior wavenumber of a disc potential, sign-resolved.

    kappa_sq = k^2 - 2 m v(a) / (pi a^2).  Positive kappa_sq means an
    oscillatory interior (J basis), negative an evanescent one (I basis);
    ``q`` is the real interior argument scale in both cases.
    """

    kappa_sq: float
    basis: str  # "oscillatory" | "evanescent"
    q: float


@dataclass(frozen=True)
class MatchingCoefficients:
    b: float
    c: float
    d: float
    denom_D: float

    @property
    def tan_delta(self) -> float:
        return -self.c / self.b


@dataclass(frozen=True)
class PhaseShift:
    """Per-channel phase shift; tan(delta) is the primary payload.

    ``delta_principal`` lies in (-pi/2, pi/2]; ``branch_offset`` counts
    the extra multiples of pi and is populated only by the closed-form
    inverse-square path.
    """

    ell: int
    tan_delta: float
    delta_principal: float
    branch_offset: int = 0

    @property
    def delta(self) -> float:
        return self.delta_principal + math.pi * self.branch_offset

    @staticmethod
    def from_tan(ell: int, tan_delta: float, branch_offset: int = 0) -> "PhaseShift":
        if math.isinf(tan_delta):
            principal = math.pi / 2
        else:
            principal = math.atan(tan_delta)
        return PhaseShift(ell=ell, tan_delta=tan_delta,
                          delta_principal=principal, branch_offset=branch_offset)


def effective_order(ell: int, m: float, lam: float) -> float:
    """sqrt(ell^2 + 2 m lam); depends on ell only through ell^2."""
    nu_sq = ell * ell + 2.0 * m * lam
    if nu_sq < 0:
        raise FallToCenterError(
            f"ell^2 + 2 m lambda = {nu_sq} <= 0: no real effective order"
        )
    return math.sqrt(nu_sq)


def inverse_square_phase_shift(ell: int, m: float, lam: float) -> PhaseShift:
    """delta = (pi/2)(|ell| - nu(|ell|)); carries no k dependence."""
    la = abs(ell)
    nu = effective_order(la, m, lam)
    delta = 0.5 * math.pi * (la - nu)
    # split into principal value and pi-branch
    offset = round(delta / math.pi)
    principal = delta - math.pi * offset
    if principal <= -math.pi / 2:
        principal += math.pi
        offset -= 1
    return PhaseShift(ell=ell, tan_delta=math.tan(delta),
                      delta_principal=principal, branch_offset=int(offset))


def internal_wavenumber(cfg: ScatteringConfig, p: RegularizedDelta) -> InternalWave:
    """kappa^2 = k^2 - 2 m v(a) / (pi a^2) with the basis tag."""
    v = p.disc_strength()
    a = p.radius_a
    k = cfg.wavenumber_k
    kappa_sq = k * k - 2.0 * cfg.mass_m * v / (math.pi * a * a)
    if kappa_sq >= 0:
        return InternalWave(kappa_sq=kappa_sq, basis="oscillatory",
                            q=math.sqrt(kappa_sq))
    return InternalWave(kappa_sq=kappa_sq, basis="evanescent",
                        q=math.sqrt(-kappa_sq))


def _interior_basis(ell: int, wave: InternalWave, x: float):
    """(F(x), F'(x)) of the regular interior basis at argument x."""
    if wave.basis == "oscillatory":
        return sf.bessel_j(ell, x), sf.bessel_j_prime(ell, x)
    return sf.bessel_i(ell, x), sf.bessel_i_prime(ell, x)


def match_at_boundary(
    ell: int, cfg: ScatteringConfig, p: RegularizedDelta
) -> MatchingCoefficients:
    """Continuity of value and derivative at r = a.

    The exterior is b J_ell(kr) + c Y_ell(kr), the interior d F_ell(q r)
    with the sign-appropriate basis F.  b is normalized to cos(delta),
    c to -sin(delta).
    """
    la = abs(ell)
    k = cfg.wavenumber_k
    a = p.radius_a
    wave = internal_wavenumber(cfg, p)
    if wave.q == 0.0:
        raise ResonanceError("interior wavenumber vanished exactly")
    q = wave.q
    ka = k * a
    J, Jp = sf.bessel_j(la, ka), sf.bessel_j_prime(la, ka)
    Y, Yp = sf.bessel_y(la, ka), sf.bessel_y_prime(la, ka)
    F, Fp = _interior_basis(la, wave, q * a)

    num = J * Fp - (k / q) * Jp * F
    denom = (k / q) * Yp * F - Y * Fp
    if denom == 0.0:
        raise ResonanceError(f"singular matching denominator at ka = {ka}")
    t = -num / denom  # tan(delta)
    delta = math.atan(t)
    b = math.cos(delta)
    c = -math.sin(delta)
    # d follows from continuity: d = b (k/q)(J Y' - J' Y)(ka) / D,
    # and J Y' - J' Y = 2/(pi ka).
    d = b * 2.0 / (math.pi * q * a * denom)
    return MatchingCoefficients(b=b, c=c, d=d, denom_D=denom)


def phase_shift_finite_a(
    ell: int, cfg: ScatteringConfig, p: RegularizedDelta
) -> PhaseShift:
    """tan(delta) = -c/b from the boundary matching."""
    coeffs = match_at_boundary(ell, cfg, p)
    return PhaseShift.from_tan(abs(ell), coeffs.tan_delta)


def scheme_a_closed_form(k: float, a0: float) -> PhaseShift:
    """Zero-radius S-wave limit of the log-running scheme.

    tan(delta_0) = (pi/2) / ln(k a0 / 2); at k a0 = 2 the shift resonates
    and is reported through an infinite-tangent sentinel.
    """
    if not (k > 0 and a0 > 0):
        raise DomainError("scheme_a_closed_form needs k > 0 and a0 > 0")
    log_term = math.log(k * a0 / 2.0)
    if log_term == 0.0:
        return PhaseShift(ell=0, tan_delta=math.inf,
                          delta_principal=math.pi / 2)
    return PhaseShift.from_tan(0, (math.pi / 2.0) / log_term)


def zero_radius_limit(
    ell: int,
    cfg: ScatteringConfig,
    s: Scheme,
    a_start: float = 1e-2,
    shrink: float = 0.5,
    tol: float = 1e-5,
    max_terms: int = 60,
) -> PhaseShift:
    """Extrapolated tan(delta) of the disc potential as a -> 0.

    Evaluates tan(delta) along a_n = a_start * shrink^n and extrapolates
    in x = 1/ln(a); the residual radius dependence of both schemes is
    purely logarithmic.  The running scheme is affine in x by
    construction; the constant scheme behaves like x/(1 + Cx) and needs
    the quadratic term to extrapolate its slow decay to zero.  Raises
    ExtrapolationError if the extrapolant has not settled within
    ``max_terms`` terms.
    """
    if not (0.0 < shrink < 1.0):
        raise DomainError(f"shrink must be in (0, 1), got {shrink}")
    if isinstance(s, LogRunning) and a_start >= s.pole_radius / 2.0:
        raise DomainError(
            f"a_start = {a_start} must sit below half the running-coupling "
            f"pole radius {s.pole_radius}"
        )
    affine = isinstance(s, LogRunning)
    degree = 1 if affine else 2
    settle_tol = tol / 4.0 if affine else tol
    window = 10
    ts: list[float] = []
    xs: list[float] = []
    prev_extrap: Optional[float] = None
    settled = 0
    for n in range(max_terms):
        a = a_start * shrink**n
        p = RegularizedDelta(scheme=s, radius_a=a)
        ts.append(phase_shift_finite_a(ell, cfg, p).tan_delta)
        xs.append(1.0 / math.log(a))
        if len(ts) < window:
            continue
        x = np.asarray(xs[-window:])
        y = np.asarray(ts[-window:])
        coef = np.polynomial.polynomial.polyfit(x, y, degree)
        extrap = float(coef[0])
        if prev_extrap is not None and abs(extrap - prev_extrap) < settle_tol:
            settled += 1
            if settled >= 2:
                return PhaseShift.from_tan(abs(ell), extrap)
        else:
            settled = 0
        prev_extrap = extrap
    raise ExtrapolationError(
        f"tan(delta) extrapolation did not settle within {max_terms} terms "
        f"(last extrapolant {prev_extrap})"
    )


@dataclass(frozen=True)
class ClosedFormRadial:
    """Exact radial wave function phi(r), matching-normalized.

    For the inverse-square potential phi = J_nu(kr) (so b = cos(delta)
    with the conventional asymptotic normalization); for disc potentials
    phi is the matched piecewise solution with b = cos(delta).
    """

    ell: int
    k: float
    evaluate: Callable[[float], float] = field(repr=False)
    provenance: str = "closed-form"

    def __call__(self, r: float) -> float:
        return self.evaluate(r)


def exact_radial(ell: int, cfg: ScatteringConfig, p: PotentialSpec) -> ClosedFormRadial:
    """Closed-form radial solution phi_ell(r) for either potential family."""
    la = abs(ell)
    k = cfg.wavenumber_k
    if isinstance(p, InverseSquare):
        nu = effective_order(la, cfg.mass_m, p.lam)

        def phi(r: float) -> float:
            return sf.bessel_j(nu, k * r)

        return ClosedFormRadial(ell=la, k=k, evaluate=phi)

    coeffs = match_at_boundary(la, cfg, p)
    wave = internal_wavenumber(cfg, p)
    a = p.radius_a

    def phi(r: float) -> float:
        if r <= a:
            F, _ = _interior_basis(la, wave, wave.q * r)
            return coeffs.d * F
        return coeffs.b * sf.bessel_j(la, k * r) + coeffs.c * sf.bessel_y(la, k * r)

    return ClosedFormRadial(ell=la, k=k, evaluate=phi)
