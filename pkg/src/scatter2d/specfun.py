"""Real-order cylinder functions and the Gamma function.

Thin, contract-checked wrappers around scipy.special.  Derivatives of the
cylinder functions are exposed through the downward recurrence
``C_nu' = C_{nu-1} - (nu/x) C_nu`` (and its modified-Bessel analogues)
rather than finite differences, because the wave-function matching needs
them to full accuracy.
"""

from __future__ import annotations

import math

from scipy import special as _sp

from .errors import DomainError

#: Euler-Mascheroni constant.
GAMMA_EULER = 0.5772156649015329


def _check_order(nu: float) -> float:
    if not math.isfinite(nu) or nu < 0:
        raise DomainError(f"Bessel order must be finite and >= 0, got {nu}")
    return float(nu)


def bessel_j(nu: float, x: float) -> float:
    """J_nu(x) for x >= 0."""
    _check_order(nu)
    if x < 0:
        raise DomainError(f"bessel_j requires x >= 0, got {x}")
    return float(_sp.jv(nu, x))


def bessel_y(nu: float, x: float) -> float:
    """Y_nu(x) for x > 0 (singular at the origin)."""
    _check_order(nu)
    if x <= 0:
        raise DomainError(f"bessel_y requires x > 0, got {x}")
    return float(_sp.yv(nu, x))


def bessel_i(nu: float, x: float) -> float:
    """I_nu(x) for x >= 0."""
    _check_order(nu)
    if x < 0:
        raise DomainError(f"bessel_i requires x >= 0, got {x}")
    return float(_sp.iv(nu, x))


def bessel_i_scaled(nu: float, x: float) -> float:
    """exp(-x) * I_nu(x); overflow-safe for large x."""
    _check_order(nu)
    if x < 0:
        raise DomainError(f"bessel_i_scaled requires x >= 0, got {x}")
    return float(_sp.ive(nu, x))


def bessel_k(nu: float, x: float) -> float:
    """K_nu(x) for x > 0 (singular at the origin)."""
    _check_order(nu)
    if x <= 0:
        raise DomainError(f"bessel_k requires x > 0, got {x}")
    return float(_sp.kv(nu, x))


def bessel_j_prime(nu: float, x: float) -> float:
    """dJ_nu/dx via J_{nu-1} - (nu/x) J_nu."""
    _check_order(nu)
    if x <= 0:
        if x == 0 and nu == 1:
            return 0.5
        raise DomainError(f"bessel_j_prime requires x > 0, got {x}")
    return float(_sp.jv(nu - 1, x)) - (nu / x) * float(_sp.jv(nu, x))


def bessel_y_prime(nu: float, x: float) -> float:
    """dY_nu/dx via Y_{nu-1} - (nu/x) Y_nu."""
    _check_order(nu)
    if x <= 0:
        raise DomainError(f"bessel_y_prime requires x > 0, got {x}")
    return float(_sp.yv(nu - 1, x)) - (nu / x) * float(_sp.yv(nu, x))


def bessel_i_prime(nu: float, x: float) -> float:
    """dI_nu/dx via I_{nu-1} - (nu/x) I_nu."""
    _check_order(nu)
    if x <= 0:
        if x == 0 and nu == 1:
            return 0.5
        raise DomainError(f"bessel_i_prime requires x > 0, got {x}")
    return float(_sp.iv(nu - 1, x)) - (nu / x) * float(_sp.iv(nu, x))


def bessel_k_prime(nu: float, x: float) -> float:
    """dK_nu/dx via -K_{nu-1} - (nu/x) K_nu."""
    _check_order(nu)
    if x <= 0:
        raise DomainError(f"bessel_k_prime requires x > 0, got {x}")
    return -float(_sp.kv(nu - 1, x)) - (nu / x) * float(_sp.kv(nu, x))


def hankel0(x: float) -> complex:
    """H0(x) = J0(x) + i Y0(x), the outgoing solution on x > 0."""
    if x <= 0:
        raise DomainError(f"hankel0 requires x > 0, got {x}")
    return complex(_sp.hankel1(0, x))


def gamma_fn(z: float) -> float:
    """Gamma(z) for real z away from the poles at 0, -1, -2, ..."""
    if z <= 0 and z == math.floor(z):
        raise DomainError(f"gamma_fn pole at z = {z}")
    return float(_sp.gamma(z))
