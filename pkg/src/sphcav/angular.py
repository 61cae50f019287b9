"""Angular eigenvalue problem: admissible (nu, m) pairs and mode families.

Geometry conventions:
  * azimuth opening Phi in (0, 2pi]; Phi = 2pi means the full azimuth
  * cone half-angle theta_c in [0, pi/2); the cone removes the polar cap
    around theta = 0, so the retained domain is theta in [theta_c, pi] and
    regularity is demanded at the retained pole theta = pi
  * the solution regular at theta = pi is legendre_theta evaluated at
    pi - theta (the angular equation is symmetric under theta -> pi - theta),
    so the conducting-cone conditions read
        TM:  legendre_theta(nu, m, pi - theta_c) = 0
        TE:  legendre_theta_deriv(nu, m, pi - theta_c) = 0

The second form is what this module solves.  Published treatments sometimes
state the TM condition as "P_nu^m(cos theta_c) = 0"; read literally (with
P regular at theta = 0) that equation has no roots in the validated range
and does not describe a cap-removal cone, so it is taken as shorthand for
the reflected condition above.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from scipy.optimize import brentq

from .errors import ClassificationError, DomainError, RootSearchError
from .specfun import (
    DEFAULT_CONTROL,
    SeriesControl,
    _theta_pair,
    ln_gamma,
)

__all__ = [
    "Family",
    "AngularDomain",
    "AngularEigenpair",
    "azimuthal_indices",
    "nu_regular_both_poles",
    "south_singular_coefficient",
    "classify",
    "cone_roots",
    "cone_nu",
    "sectoral_theta",
    "angular_ode_residual",
]

_INT_TOL = 1e-12


class Family(enum.Enum):
    SECTORAL = "sectoral"
    TESSERAL = "tesseral"
    ZONAL = "zonal"
    NULL = "null"


@dataclass(frozen=True)
class AngularDomain:
    """Angular extent of the cavity: azimuthal opening and polar cone."""

    azimuth_opening_rad: float = 2.0 * math.pi
    cone_half_angle_rad: float = 0.0

    def __post_init__(self):
        if not (0.0 < self.azimuth_opening_rad <= 2.0 * math.pi):
            raise DomainError("azimuth opening must lie in (0, 2*pi]")
        if not (0.0 <= self.cone_half_angle_rad < 0.5 * math.pi):
            raise DomainError("cone half-angle must lie in [0, pi/2)")

    @property
    def full_azimuth(self) -> bool:
        return self.azimuth_opening_rad == 2.0 * math.pi

    @property
    def has_cone(self) -> bool:
        return self.cone_half_angle_rad > 0.0


@dataclass(frozen=True)
class AngularEigenpair:
    """An admissible (nu, m) pair with its family tag.

    ``k`` is the tesseral offset where nu = m + k applies (cone-free domains);
    cone-derived eigenvalues carry k = None.
    """

    nu: float
    m: float
    family: Family
    k: int | None = None

    def __post_init__(self):
        if self.nu <= -0.5:
            raise DomainError("energy integrability requires nu > -1/2")
        if self.m < 0.0:
            raise DomainError("m must be >= 0")


def azimuthal_indices(domain: AngularDomain, count: int, face_kind: str = "PEC_PEC") -> list[float]:
    """First ``count`` admissible azimuthal indices for the domain.

    Full azimuth: single-valuedness gives m = 0, 1, 2, ...  A wedge with PEC
    on both faces gives m = n*pi/Phi for n >= 1 (n = 0 has no standing wave
    between PEC faces).  The experimental PEC/PMC wedge quantizes at odd
    quarter-waves, m = (2n - 1)*pi/(2*Phi).
    """
    if count < 1:
        raise DomainError("count must be >= 1")
    if face_kind not in ("PEC_PEC", "PEC_PMC"):
        raise DomainError(f"unknown wedge face kind {face_kind!r}")
    if domain.full_azimuth:
        return [float(n) for n in range(count)]
    phi = domain.azimuth_opening_rad
    if face_kind == "PEC_PEC":
        return [n * math.pi / phi for n in range(1, count + 1)]
    return [(2 * n - 1) * math.pi / (2.0 * phi) for n in range(1, count + 1)]


def nu_regular_both_poles(m: float, k: int) -> float:
    """Degree regular at both poles for order m: nu = m + k, integer k >= 0."""
    if m < 0.0:
        raise DomainError("m must be >= 0")
    if k < 0:
        raise DomainError("k must be >= 0")
    return m + k


def south_singular_coefficient(nu: float, m: float) -> float:
    """Coefficient of the singular branch at theta = pi of the north-regular solution.

    For m > 0 this is [Gamma(nu+m+1)/Gamma(nu-m+1)] * sin((nu-m)*pi)/pi,
    multiplying the (pi-theta)^(-m) divergence; for m = 0 it is sin(nu*pi)/pi,
    multiplying the logarithmic divergence.  It vanishes exactly on
    nu - m in {0, 1, 2, ...}, which is the discreteness mechanism for
    cone-free domains.
    """
    if m < 0.0:
        raise DomainError("m must be >= 0")
    if nu + m + 1.0 <= 0.0:
        raise DomainError(f"gamma ratio undefined for nu+m+1 = {nu + m + 1.0} <= 0")
    if m == 0.0:
        if abs(nu - round(nu)) <= _INT_TOL * max(1.0, abs(nu)) and round(nu) >= 0:
            return 0.0
        return math.sin(nu * math.pi) / math.pi
    w = nu - m
    if abs(w - round(w)) <= _INT_TOL * max(1.0, abs(w)) and round(w) >= 0:
        return 0.0
    if w + 1.0 > 0.0:
        ratio = math.exp(ln_gamma(nu + m + 1.0) - ln_gamma(w + 1.0))
        return ratio * math.sin(w * math.pi) / math.pi
    # reflection handles the Gamma(w+1) poles left of the origin:
    # sin(w*pi)/Gamma(w+1) = -sin(w*pi)^2 * Gamma(-w) / pi
    return -math.exp(ln_gamma(nu + m + 1.0) + ln_gamma(-w)) * math.sin(w * math.pi) ** 2 / math.pi**2


def classify(nu: float, m: float, cone_present: bool = False) -> Family:
    """Mode family of an admissible (nu, m) pair."""
    if nu < 0.0 or m < 0.0:
        raise ClassificationError(f"(nu={nu}, m={m}) outside the physical quadrant")
    if nu == 0.0 and m == 0.0:
        return Family.NULL
    if m == 0.0:
        return Family.ZONAL
    if nu == m:
        return Family.SECTORAL
    if not cone_present:
        d = nu - m
        if d < -_INT_TOL or abs(d - round(d)) > 1e-9 * max(1.0, abs(d)):
            raise ClassificationError(
                f"(nu={nu}, m={m}) is unreachable without a cone: nu - m must be a non-negative integer"
            )
    return Family.TESSERAL


def sectoral_theta(m: float, theta: float) -> float:
    """Exact sectoral polar solution sin(theta)^m for nu = m > 0."""
    if m <= 0.0:
        raise DomainError("sectoral solution requires m > 0")
    return math.sin(theta) ** m


def angular_ode_residual(
    nu: float, m: float, theta: float, value: float, deriv: float, second_deriv: float
) -> float:
    """Residual of the angular equation assembled from supplied derivatives."""
    s = math.sin(theta)
    return second_deriv + math.cos(theta) / s * deriv + (nu * (nu + 1.0) - m * m / (s * s)) * value


_SCAN_STEP = 0.02
_NU_FLOOR = 1e-4
_SCAN_ODE_RTOL = 1e-7  # bracketing only; refinement re-evaluates precisely


def cone_roots(
    m: float,
    theta_c: float,
    polarization: str,
    nu_max: float,
    ctrl: SeriesControl = DEFAULT_CONTROL,
    max_branches: int | None = None,
) -> list[float]:
    """All cone eigenvalues below nu_max, smallest first.

    A single bracketing scan in nu (step 0.02, comfortably below the root
    spacing) runs the angular ODE at relaxed tolerance; each sign change is
    confirmed at full precision and refined by Brent's method to
    |delta nu| <= 1e-10.
    """
    if not (0.0 < theta_c < 0.5 * math.pi):
        raise DomainError("cone half-angle must lie strictly inside (0, pi/2)")
    pol = polarization.upper()
    if pol not in ("TM", "TE"):
        raise DomainError(f"polarization must be TM or TE, got {polarization!r}")

    target = math.pi - theta_c
    index = 0 if pol == "TM" else 1

    def g(nu: float, ode_rtol: float = 1e-12) -> float:
        return _theta_pair(nu, m, target, ctrl, ode_rtol=ode_rtol)[index]

    roots: list[float] = []
    nu, f_lo = _NU_FLOOR, g(_NU_FLOOR, _SCAN_ODE_RTOL)
    while nu < nu_max:
        nu_next = min(nu + _SCAN_STEP, nu_max)
        f_next = g(nu_next, _SCAN_ODE_RTOL)
        if f_lo * f_next < 0.0:
            a, fa = nu, g(nu)
            b, fb = nu_next, g(nu_next)
            # the relaxed scan may misplace a crossing by at most one step
            if fa * fb > 0.0:
                a, fa = max(_NU_FLOOR, nu - _SCAN_STEP), g(max(_NU_FLOOR, nu - _SCAN_STEP))
                b, fb = nu_next + _SCAN_STEP, g(nu_next + _SCAN_STEP)
            if fa * fb < 0.0:
                roots.append(float(brentq(g, a, b, xtol=1e-10, rtol=1e-14)))
                if max_branches is not None and len(roots) >= max_branches:
                    return roots
        nu, f_lo = nu_next, f_next
    return roots


def cone_nu(
    m: float,
    theta_c: float,
    polarization: str,
    branch: int = 1,
    ctrl: SeriesControl = DEFAULT_CONTROL,
    nu_max: float | None = None,
) -> float:
    """The branch-th smallest nu > 0 satisfying the cone condition.

    TM imposes a Dirichlet condition on the polar function at the cone
    surface, TE a Neumann one; both act on the solution regular at the
    retained pole theta = pi, i.e. on legendre_theta evaluated at
    pi - theta_c.
    """
    if branch < 1:
        raise DomainError("branch index must be >= 1")
    hi = nu_max if nu_max is not None else m + branch + 2.0
    roots = cone_roots(m, theta_c, polarization, hi, ctrl, max_branches=branch)
    if len(roots) < branch:
        raise RootSearchError(
            f"no {polarization} cone root (branch {branch}) for m={m}, "
            f"theta_c={theta_c:g} rad",
            window=(_NU_FLOOR, hi),
        )
    return roots[branch - 1]
