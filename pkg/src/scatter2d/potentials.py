"""The two potential families and their behavior under dilations.

The inverse-square potential ``lambda / r^2`` and the finite-disc
regularization of the two-dimensional contact potential,

    U(r) = v(a) / (pi a^2)  for r <= a,   0  for r > a,

with two choices of the disc strength: a log-running coupling
(``LogRunning``) and a radius-independent constant (``ConstantStrength``).
Only the second transforms under ``r -> r / sqrt(rho)`` the way an actual
two-dimensional delta distribution does; ``scale_covariance_defect``
quantifies the failure of the first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple, Union

from .errors import DomainError, PoleError
from .specfun import GAMMA_EULER

# Subtraction constant of the log-running coupling.  The -1/4 offset from
# the Euler constant is the renormalization condition: with it, the
# zero-radius S-wave limit of the running scheme is exactly
# (pi/2) / ln(k a0 / 2) (in the 2m = 1 convention).  With the bare Euler
# constant the limit lands at (pi/2) / (ln(k a0 / 2) - 1/4) instead.
LOG_SCHEME_GAMMA = GAMMA_EULER - 0.25


@dataclass(frozen=True)
class LogRunning:
    """Disc strength v(a) = 2 pi / (ln(a/a0) + gamma_s), running with a."""

    a0: float

    def __post_init__(self):
        if not (self.a0 > 0):
            raise DomainError(f"LogRunning needs a0 > 0, got {self.a0}")

    @property
    def pole_radius(self) -> float:
        """Radius where the running coupling diverges."""
        return self.a0 * math.exp(-LOG_SCHEME_GAMMA)

    def strength(self, a: float) -> float:
        if not (a > 0):
            raise DomainError(f"disc radius must be > 0, got {a}")
        denom = math.log(a / self.a0) + LOG_SCHEME_GAMMA
        if abs(denom) < 1e-12:
            raise PoleError(
                f"running coupling pole at a = {self.pole_radius!r} (a = {a})"
            )
        return 2.0 * math.pi / denom


@dataclass(frozen=True)
class ConstantStrength:
    """Disc strength v(a) = v, independent of the radius."""

    v: float

    def __post_init__(self):
        if self.v == 0:
            raise DomainError("ConstantStrength needs v != 0")

    def strength(self, a: float) -> float:
        if not (a > 0):
            raise DomainError(f"disc radius must be > 0, got {a}")
        return self.v


Scheme = Union[LogRunning, ConstantStrength]


@dataclass(frozen=True)
class InverseSquare:
    """U(r) = lam / r^2 (coupling in units energy * length^2)."""

    lam: float


@dataclass(frozen=True)
class RegularizedDelta:
    """Finite disc of radius a carrying strength v(a)/(pi a^2)."""

    scheme: Scheme
    radius_a: float

    def __post_init__(self):
        if not (self.radius_a > 0):
            raise DomainError(f"radius_a must be > 0, got {self.radius_a}")

    def disc_strength(self) -> float:
        """v(a) of the configured scheme at this radius."""
        return self.scheme.strength(self.radius_a)


PotentialSpec = Union[InverseSquare, RegularizedDelta]


@dataclass(frozen=True)
class ScaleTransformation:
    """Dilation by rho: t -> rho t, x -> x / sqrt(rho)."""

    rho: float

    def __post_init__(self):
        if not (self.rho > 0):
            raise DomainError(f"rho must be > 0, got {self.rho}")


def evaluate(p: PotentialSpec, r: float) -> float:
    """Pointwise value U(r), r > 0."""
    if not (r > 0):
        raise DomainError(f"evaluate requires r > 0, got {r}")
    if isinstance(p, InverseSquare):
        return p.lam / (r * r)
    if r > p.radius_a:
        return 0.0
    return p.disc_strength() / (math.pi * p.radius_a**2)


def scale_transform(
    p: PotentialSpec, t: ScaleTransformation
) -> Tuple[PotentialSpec, float]:
    """Image of the potential under the dilation, with its overall factor.

    Returns the member of the same family matching the transformed
    potential plus the multiplicative factor rho.  For ``LogRunning`` the
    returned member is the closest one (radius sqrt(rho) * a, same a0);
    it is exact only when the covariance defect vanishes, i.e. at rho = 1.
    """
    rho = t.rho
    if isinstance(p, InverseSquare):
        return p, rho
    a_new = math.sqrt(rho) * p.radius_a
    return RegularizedDelta(scheme=p.scheme, radius_a=a_new), rho


def scale_covariance_defect(s: Scheme, a: float, rho: float) -> float:
    """v(a / sqrt(rho)) - v(a): zero iff the disc scales like a delta."""
    if not (a > 0 and rho > 0):
        raise DomainError("scale_covariance_defect needs a > 0 and rho > 0")
    return s.strength(a / math.sqrt(rho)) - s.strength(a)


# --- flat key-value serialization (CLI surface) ---------------------------

def to_kv(p: PotentialSpec) -> dict:
    """Flat key-value form of a potential spec."""
    if isinstance(p, InverseSquare):
        return {"potential": "inverse_square", "lambda": p.lam}
    if isinstance(p.scheme, LogRunning):
        return {
            "potential": "delta",
            "scheme": "log",
            "a0": p.scheme.a0,
            "a": p.radius_a,
        }
    return {
        "potential": "delta",
        "scheme": "const",
        "v": p.scheme.v,
        "a": p.radius_a,
    }


def from_kv(kv: dict) -> PotentialSpec:
    """Inverse of :func:`to_kv`."""
    kind = kv.get("potential")
    if kind == "inverse_square":
        return InverseSquare(lam=float(kv["lambda"]))
    if kind == "delta":
        scheme = kv.get("scheme")
        if scheme == "log":
            return RegularizedDelta(LogRunning(a0=float(kv["a0"])), float(kv["a"]))
        if scheme == "const":
            return RegularizedDelta(ConstantStrength(v=float(kv["v"])), float(kv["a"]))
        raise DomainError(f"unknown scheme {scheme!r}")
    raise DomainError(f"unknown potential {kind!r}")
