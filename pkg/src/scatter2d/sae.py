"""Self-adjoint-extension analysis of the half-line radial problem.

The S-wave boundary condition phi~'(0) = -c phi~(0) selects a
one-parameter family of extensions.  This module exposes the extension
parameter alpha(c, k), the r -> 0 Wronskian bracket that decides whether
two scattering solutions live in the same extension, the near-origin
expansion of the sqrt(r)-rescaled wave, and the dilation-generator
criterion: the B/A ratio of that expansion is preserved under (r d/dr + 1)
only when the phase shift vanishes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import specfun as sf
from .errors import DomainError

#: Radius used by the numeric cross-check of the closed-form residual.
CROSSCHECK_RADIUS = 1e-6


@dataclass(frozen=True)
class SWaveSolution:
    """External S-wave solution  b0 (J0(kr) + tan_delta0 Y0(kr))."""

    tan_delta0: float
    b0: float = 1.0
    k: float = 1.0

    def __post_init__(self):
        if self.k <= 0:
            raise DomainError("k must be > 0")

    def rescaled(self, r: float) -> float:
        """sqrt(r)-rescaled wave phi~(r)."""
        x = self.k * r
        return self.b0 * math.sqrt(r) * (
            sf.bessel_j(0.0, x) + self.tan_delta0 * sf.bessel_y(0.0, x))

    def rescaled_prime(self, r: float) -> float:
        x = self.k * r
        dphi = self.k * (sf.bessel_j_prime(0.0, x)
                         + self.tan_delta0 * sf.bessel_y_prime(0.0, x))
        phi = (sf.bessel_j(0.0, x) + self.tan_delta0 * sf.bessel_y(0.0, x))
        return self.b0 * (math.sqrt(r) * dphi + 0.5 * phi / math.sqrt(r))


@dataclass(frozen=True)
class NearOriginExpansion:
    """phi~(r) ~ sqrt(r) (A + B log(kr/2)) near the origin."""

    A: float
    B: float
    k: float

    def __post_init__(self):
        if self.k <= 0:
            raise DomainError("k must be > 0")

    @property
    def ratio(self) -> float:
        if self.A == 0.0:
            return math.inf if self.B != 0.0 else 0.0
        return self.B / self.A

    def value(self, r: float) -> float:
        return math.sqrt(r) * (self.A + self.B * math.log(self.k * r / 2.0))

    def derivative(self, r: float) -> float:
        L = math.log(self.k * r / 2.0)
        return (self.A + self.B * L + 2.0 * self.B) / (2.0 * math.sqrt(r))


def extension_alpha(c: float, k: float) -> complex:
    """alpha = (ik - c)/(ik + c); the distinguished c = inf maps to -1."""
    if k <= 0:
        raise DomainError("k must be > 0")
    if math.isinf(c):
        return complex(-1.0)
    return (1j * k - c) / (1j * k + c)


def boundary_residual(s1: SWaveSolution, s2: SWaveSolution) -> float:
    """lim_{r->0} (phi~1 phi~2' - phi~1' phi~2), in closed form.

    The log terms cancel and the J/Y Wronskian leaves
    (2/pi) b0_1 b0_2 (tan_delta0_2 - tan_delta0_1):  zero exactly when the
    two solutions carry the same phase shift, i.e. belong to one extension.
    """
    if s1.k != s2.k:
        raise DomainError("solutions must share the same k")
    # grouping keeps the bracket exactly antisymmetric in floating point
    return (2.0 / math.pi) * (s1.b0 * s2.b0) * (s2.tan_delta0 - s1.tan_delta0)


def boundary_residual_numeric(
    s1: SWaveSolution, s2: SWaveSolution, r: float = CROSSCHECK_RADIUS
) -> float:
    """Direct small-r evaluation of the bracket (cancellation-prone; test aid)."""
    if s1.k != s2.k:
        raise DomainError("solutions must share the same k")
    return s1.rescaled(r) * s2.rescaled_prime(r) - s1.rescaled_prime(r) * s2.rescaled(r)


def near_origin_expansion(tan_delta0: float, k: float, b0: float = 1.0) -> NearOriginExpansion:
    """Small-argument coefficients of the rescaled external S-wave."""
    gamma = sf.GAMMA_EULER
    A = b0 * (1.0 + (2.0 * gamma / math.pi) * tan_delta0)
    B = b0 * (2.0 / math.pi) * tan_delta0
    return NearOriginExpansion(A=A, B=B, k=k)


def dilation_apply(e: NearOriginExpansion) -> NearOriginExpansion:
    """(r d/dr + 1) acting on sqrt(r) (A + B log(kr/2)).

    The generator's time-dependent part is dropped (evaluated at t = 0)
    and the constant prefactor omitted: neither can change the B/A ratio.
    """
    return NearOriginExpansion(A=1.5 * e.A + e.B, B=1.5 * e.B, k=e.k)


def scale_invariance_test(tan_delta0: float, tol: float, k: float = 1.0) -> bool:
    """True iff the dilation leaves the near-origin B/A ratio unchanged.

    The ratio is invariant exactly when B = 0, i.e. tan_delta0 = 0.
    """
    if tol <= 0:
        raise DomainError("tol must be > 0")
    e = near_origin_expansion(tan_delta0, k)
    d = dilation_apply(e)
    if math.isinf(e.ratio) or math.isinf(d.ratio):
        return False
    return abs(d.ratio - e.ratio) < tol
