"""Real-argument special functions used by every other module.

Conventions:
  * spherical Bessel j_nu(x) = sqrt(pi/(2x)) J_{nu+1/2}(x), real order nu > -1/2
  * Riccati derivative means d/dx [x j_nu(x)], evaluated analytically
  * Theta(theta) is the polar solution regular at theta = 0, normalized so
    Theta / sin(theta)^m -> 1 as theta -> 0+

All functions are pure; no module-level mutable state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special as sp
from scipy.integrate import solve_ivp

from .errors import ConvergenceError, DomainError, IntegrationError

__all__ = [
    "SeriesControl",
    "AiryRootTable",
    "AIRY_ROOTS",
    "ln_gamma",
    "digamma",
    "hyp2f1",
    "spherical_j",
    "riccati_deriv",
    "legendre_theta",
    "legendre_theta_deriv",
]

_INT_TOL = 1e-12  # how close a float must be to an integer to count as one


@dataclass(frozen=True)
class SeriesControl:
    """Evaluation controls for series summation."""

    max_terms: int = 500
    tolerance: float = 1e-15

    def __post_init__(self):
        if self.max_terms < 1:
            raise DomainError("max_terms must be >= 1")
        if not (0.0 < self.tolerance < 1.0):
            raise DomainError("tolerance must lie in (0, 1)")


DEFAULT_CONTROL = SeriesControl()


@dataclass(frozen=True)
class AiryRootTable:
    """Magnitudes z_n of Airy-function zeros: Ai(-z_n) = 0 and Ai'(-z'_n) = 0.

    Stored rather than computed; only the leading entries are ever needed
    as asymptotic seeds.
    """

    ai_zeros: tuple[float, ...] = (
        2.33810741045977,
        4.08794944413097,
        5.52055982809555,
        6.78670809007176,
        7.94413358712085,
    )
    ai_prime_zeros: tuple[float, ...] = (
        1.01879297164747,
        3.24819758217984,
        4.82009921117874,
        6.16330735563949,
        7.37217725504777,
    )


AIRY_ROOTS = AiryRootTable()


def ln_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0."""
    if x <= 0.0:
        raise DomainError(f"ln_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def digamma(x: float) -> float:
    """Digamma function psi(x) for x > 0."""
    if x <= 0.0:
        raise DomainError(f"digamma requires x > 0, got {x}")
    return float(sp.psi(x))


def _is_nonpositive_integer(x: float) -> bool:
    return x <= _INT_TOL and abs(x - round(x)) <= _INT_TOL * max(1.0, abs(x))


def hyp2f1(a: float, b: float, c: float, z: float, ctrl: SeriesControl = DEFAULT_CONTROL) -> float:
    """Gauss hypergeometric sum 2F1(a, b; c; z) for real z in [0, 1).

    When a or b is a non-positive integer the series terminates and the exact
    finite polynomial sum is returned regardless of ``ctrl.tolerance``.
    Otherwise terms are accumulated until the relative term size drops below
    the tolerance; exceeding ``ctrl.max_terms`` raises ConvergenceError with
    the partial sum attached.
    """
    if not (0.0 <= z < 1.0):
        raise DomainError(f"hyp2f1 requires 0 <= z < 1, got z={z}")

    a_term = _is_nonpositive_integer(a)
    b_term = _is_nonpositive_integer(b)
    if a_term or b_term:
        # exact polynomial of degree K; c may be a non-positive integer only
        # if the series stops before 1/Gamma(c) poles are reached
        k_stop = int(round(-a)) if a_term else int(round(-b))
        if b_term and a_term:
            k_stop = min(int(round(-a)), int(round(-b)))
        if _is_nonpositive_integer(c) and -round(c) < k_stop:
            raise DomainError(
                f"hyp2f1 parameter c={c} hits a pole before the series terminates"
            )
        total = 1.0
        term = 1.0
        for k in range(k_stop):
            term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z
            total += term
        return total

    if _is_nonpositive_integer(c):
        raise DomainError(f"hyp2f1 parameter c={c} is a non-positive integer")

    total = 1.0
    term = 1.0
    for k in range(ctrl.max_terms):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z
        total += term
        if abs(term) < ctrl.tolerance * abs(total):
            return total
    raise ConvergenceError(
        f"hyp2f1({a}, {b}; {c}; {z}) did not converge in {ctrl.max_terms} terms",
        partial_sum=total,
        last_term=abs(term),
    )


def _double_factorial_odd(nu: float) -> float:
    # (2 nu + 1)!! extended to real nu through the gamma function
    return math.exp((nu + 1.0) * math.log(2.0) + math.lgamma(nu + 1.5) - 0.5 * math.log(math.pi))


def _spherical_j_series(nu: float, x: float) -> float:
    # ascending series, adequate for small |x|; leading behavior x^nu/(2nu+1)!!
    log_pref = nu * math.log(x) - math.log(_double_factorial_odd(nu))
    if log_pref < -700.0:
        return 0.0
    q = -0.5 * x * x
    term = 1.0
    total = 1.0
    for k in range(60):
        term *= q / ((k + 1.0) * (2.0 * nu + 2.0 * k + 3.0))
        total += term
        if abs(term) < 1e-17 * abs(total):
            break
    return math.exp(log_pref) * total


_SERIES_X_CUTOFF = 0.5


def spherical_j(nu: float, x: float) -> float:
    """Spherical Bessel function j_nu(x) for nu > -1/2 and x >= 0.

    Small arguments go through the ascending power series; elsewhere the
    half-integer relation to the cylindrical Bessel function is used.
    """
    if nu <= -0.5:
        raise DomainError(f"spherical_j requires nu > -1/2, got nu={nu}")
    if x < 0.0:
        raise DomainError(f"spherical_j requires x >= 0, got x={x}")
    if x == 0.0:
        return 1.0 if nu == 0.0 else 0.0
    if x < _SERIES_X_CUTOFF:
        return _spherical_j_series(nu, x)
    return math.sqrt(math.pi / (2.0 * x)) * float(sp.jv(nu + 0.5, x))


def riccati_deriv(nu: float, x: float) -> float:
    """d/dx [x j_nu(x)], via the recurrence (nu+1) j_nu(x) - x j_{nu+1}(x)."""
    if nu <= -0.5:
        raise DomainError(f"riccati_deriv requires nu > -1/2, got nu={nu}")
    if x <= 0.0:
        raise DomainError(f"riccati_deriv requires x > 0, got x={x}")
    return (nu + 1.0) * spherical_j(nu, x) - x * spherical_j(nu + 1.0, x)


# --- polar angular solution -------------------------------------------------
#
# Theta(theta) = sin(theta)^m * 2F1(m - nu, m + nu + 1; m + 1; sin^2(theta/2))
#
# The series terminates iff nu - m is a non-negative integer; otherwise it
# diverges at theta = pi and converges slowly nearby, so past z = 0.75 the
# value is obtained by integrating the angular ODE from a series start at
# theta = pi/3.

_ODE_Z_CUTOFF = 0.75
_ODE_THETA_START = math.pi / 3.0


def _terminates(nu: float, m: float) -> bool:
    d = nu - m
    return d >= -_INT_TOL and abs(d - round(d)) <= _INT_TOL * max(1.0, abs(d))


def _theta_series_pair(nu: float, m: float, theta: float, ctrl: SeriesControl) -> tuple[float, float]:
    z = math.sin(0.5 * theta) ** 2
    a, b, c = m - nu, m + nu + 1.0, m + 1.0
    f = hyp2f1(a, b, c, z, ctrl)
    fp = (a * b / c) * hyp2f1(a + 1.0, b + 1.0, c + 1.0, z, ctrl) if a != 0.0 else 0.0
    s, cth = math.sin(theta), math.cos(theta)
    sin_m = s**m
    value = sin_m * f
    # product rule; dz/dtheta = sin(theta)/2
    deriv = m * s ** (m - 1.0) * cth * f + sin_m * fp * 0.5 * s
    return value, deriv


def _theta_ode_pair(
    nu: float, m: float, theta: float, ctrl: SeriesControl, rtol: float = 1e-12
) -> tuple[float, float]:
    lam = nu * (nu + 1.0)
    m2 = m * m
    y0 = _theta_series_pair(nu, m, _ODE_THETA_START, ctrl)

    def rhs(t, y):
        s = math.sin(t)
        return (y[1], -math.cos(t) / s * y[1] - (lam - m2 / (s * s)) * y[0])

    sol = solve_ivp(
        rhs,
        (_ODE_THETA_START, theta),
        y0,
        method="DOP853",
        rtol=rtol,
        atol=1e-30,
    )
    if not sol.success:
        raise IntegrationError(f"angular ODE integration failed: {sol.message}")
    return float(sol.y[0, -1]), float(sol.y[1, -1])


def _theta_pair(
    nu: float, m: float, theta: float, ctrl: SeriesControl, ode_rtol: float = 1e-12
) -> tuple[float, float]:
    if m < 0.0:
        raise DomainError(f"order m must be >= 0, got m={m}")
    if not (0.0 < theta < math.pi):
        raise DomainError(f"theta must lie strictly inside (0, pi), got {theta}")
    if _terminates(nu, m) or math.sin(0.5 * theta) ** 2 <= _ODE_Z_CUTOFF:
        return _theta_series_pair(nu, m, theta, ctrl)
    return _theta_ode_pair(nu, m, theta, ctrl, rtol=ode_rtol)


def legendre_theta(nu: float, m: float, theta: float, ctrl: SeriesControl = DEFAULT_CONTROL) -> float:
    """North-pole-regular polar solution of the angular equation.

    Frobenius normalization: legendre_theta / sin(theta)^m -> 1 as theta -> 0+.
    For nu = m this is exactly sin(theta)^m; for nu = m + k (integer k >= 0)
    it is sin(theta)^m times a degree-k polynomial in sin^2(theta/2); for all
    other (nu, m) it diverges at theta = pi.
    """
    return _theta_pair(nu, m, theta, ctrl)[0]


def legendre_theta_deriv(nu: float, m: float, theta: float, ctrl: SeriesControl = DEFAULT_CONTROL) -> float:
    """d/dtheta of legendre_theta, by term-wise analytic differentiation."""
    return _theta_pair(nu, m, theta, ctrl)[1]
