"""Radial quantization: certified roots of j_nu and of d/dx [x j_nu(x)].

TE resonances sit at zeros of j_nu (x_{nu,n}); TM resonances at zeros of the
Riccati derivative d/dx [x j_nu(x)] (x'_{nu,n}).  Frequencies follow from
f = c * x / (2 pi a).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from scipy.optimize import brentq

from .errors import DomainError, RootSearchError
from .specfun import AIRY_ROOTS, riccati_deriv, spherical_j

__all__ = [
    "RootKind",
    "RadialRoot",
    "SPEED_OF_LIGHT",
    "j_zero",
    "riccati_deriv_zero",
    "mcmahon_seed",
    "frequency_from_root",
    "asymptotic_m_of_omega",
]

SPEED_OF_LIGHT = 299_792_458.0  # m/s, exact

_CBRT2 = 2.0 ** (1.0 / 3.0)


class RootKind(enum.Enum):
    TE_JZERO = "TE"
    TM_RICCATI_DERIV_ZERO = "TM"


@dataclass(frozen=True)
class RadialRoot:
    """A certified root of the radial boundary condition."""

    nu: float
    n: int
    kind: RootKind
    x: float
    residual: float


def mcmahon_seed(nu: float, n: int, kind: RootKind) -> float:
    """Airy-seeded large-order estimate of the n-th root.

    The zeros of j_nu coincide with those of the cylindrical J_{nu+1/2}, so
    the expansion parameter is mu = nu + 1/2:

        TE:  x ~ mu + c_n mu^(1/3) + (3 c_n^2 / 10) mu^(-1/3)
        TM:  x ~ mu + c'_n mu^(1/3) + (3 c'_n^2 / 10 + 3/(20 c'_n)) mu^(-1/3)

    with c_n = 2^(-1/3) z_n (z_n the n-th Airy zero) and c'_n = 2^(-1/3) z'_n
    (Airy-derivative zeros).  The extra 3/(20 c'_n) in the TM branch accounts
    for the j/(2x) shift between zeros of J' and zeros of [x j_nu]'.
    Good to well under 1% for nu >= 5, n = 1.
    """
    if nu < 0.5:
        raise DomainError("mcmahon_seed is calibrated for nu >= 0.5; use a scan below that")
    if n < 1:
        raise DomainError("n must be >= 1")
    mu = nu + 0.5
    mu13 = mu ** (1.0 / 3.0)
    if kind is RootKind.TE_JZERO:
        if n > len(AIRY_ROOTS.ai_zeros):
            raise DomainError(f"no stored Airy zero for n={n}")
        c = AIRY_ROOTS.ai_zeros[n - 1] / _CBRT2
        return mu + c * mu13 + 0.3 * c * c / mu13
    if n > len(AIRY_ROOTS.ai_prime_zeros):
        raise DomainError(f"no stored Airy-derivative zero for n={n}")
    c = AIRY_ROOTS.ai_prime_zeros[n - 1] / _CBRT2
    return mu + c * mu13 + (0.3 * c * c + 0.15 / c) / mu13


def _nth_positive_root(f, nu: float, n: int) -> float:
    # bracket by scanning upward from the order; the first root exceeds nu,
    # later roots are spaced by roughly pi, so step 0.05 cannot skip any
    lo = max(nu, 1e-3)
    step = 0.05
    hi = lo + 12.0
    found = 0
    x, f_prev = lo, f(lo)
    while True:
        while x < hi:
            x_next = min(x + step, hi)
            f_next = f(x_next)
            if f_prev == 0.0:
                found += 1
                if found == n:
                    return x
            elif f_prev * f_next < 0.0:
                found += 1
                if found == n:
                    return float(brentq(f, x, x_next, xtol=1e-12))
            x, f_prev = x_next, f_next
        if hi > lo + 40.0 + 4.0 * n:
            raise RootSearchError(
                f"failed to bracket root n={n} for nu={nu}", window=(lo, hi)
            )
        hi += 12.0


def j_zero(nu: float, n: int) -> RadialRoot:
    """n-th positive root of j_nu (TE wall condition)."""
    if nu <= -0.5:
        raise DomainError(f"j_zero requires nu > -1/2, got nu={nu}")
    if n < 1:
        raise DomainError("radial index n must be >= 1")
    x = _nth_positive_root(lambda t: spherical_j(nu, t), nu, n)
    return RadialRoot(nu=nu, n=n, kind=RootKind.TE_JZERO, x=x, residual=spherical_j(nu, x))


def riccati_deriv_zero(nu: float, n: int) -> RadialRoot:
    """n-th positive root of d/dx [x j_nu(x)] (TM wall condition)."""
    if nu <= -0.5:
        raise DomainError(f"riccati_deriv_zero requires nu > -1/2, got nu={nu}")
    if n < 1:
        raise DomainError("radial index n must be >= 1")
    x = _nth_positive_root(lambda t: riccati_deriv(nu, t), nu, n)
    return RadialRoot(
        nu=nu, n=n, kind=RootKind.TM_RICCATI_DERIV_ZERO, x=x, residual=riccati_deriv(nu, x)
    )


def radial_root(nu: float, n: int, kind: RootKind) -> RadialRoot:
    """Root of the requested kind; dispatch helper for mode enumeration."""
    if kind is RootKind.TE_JZERO:
        return j_zero(nu, n)
    return riccati_deriv_zero(nu, n)


def frequency_from_root(x: float, radius_m: float) -> float:
    """Resonant frequency in Hz for a dimensionless root x and radius a."""
    if radius_m <= 0.0:
        raise DomainError("radius must be positive")
    if x <= 0.0:
        raise DomainError("root must be positive")
    return SPEED_OF_LIGHT * x / (2.0 * math.pi * radius_m)


def asymptotic_m_of_omega(omega_a_over_c: float, kind: RootKind) -> float:
    """Whispering-gallery estimate of the angular index at X = omega*a/c.

    First sectoral branch inverted to leading Airy order:
    m ~ X - 1.856 X^(1/3) (TE) or X - 0.809 X^(1/3) (TM).
    """
    if omega_a_over_c < 1.0:
        raise DomainError("asymptotic inversion requires omega*a/c >= 1")
    x13 = omega_a_over_c ** (1.0 / 3.0)
    if kind is RootKind.TE_JZERO:
        return omega_a_over_c - 1.856 * x13
    return omega_a_over_c - 0.809 * x13
