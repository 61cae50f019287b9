"""TE/TM field components from Debye potentials, impedances, Poynting flow.

A mode's potential is A * j_nu(k r) * Theta(theta) * Phi(phi) with k = x/a.
Fields follow from the curl-curl construction (time convention e^{-i omega t}):

    TM:  E_r   = nu(nu+1)/r * A j Theta Phi
         E_t   = (A/r) Ric'(kr) Theta' Phi
         E_p   = (A/(r sin)) Ric'(kr) Theta Phi'
         H_r   = 0
         H_t   = -i omega eps (A/sin) j Theta Phi'
         H_p   = +i omega eps A j Theta' Phi

    TE:  dual, with H built from the double curl and E from the single curl.

Ric'(x) = d/dx [x j_nu(x)], so d/dr [r j_nu(kr)] = Ric'(kr) exactly.  The
single-curl components carry one factor of i relative to some published
component tables; the set above satisfies Maxwell's equations identically,
which the impedance-duality and wall-condition tests rely on.

Azimuthal factor: exp(i m phi) on the full azimuth; between PEC wedge faces
a standing combination whose tangential E vanishes on both faces (sin(m phi)
for TM, cos(m phi) for TE -- selected by testing the face condition).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.integrate import quad

from .angular import AngularDomain, AngularEigenpair, Family
from .errors import DomainError, ImpedanceUndefinedError, IntegrationError
from .radial import RadialRoot, RootKind, radial_root
from .specfun import legendre_theta, legendre_theta_deriv, riccati_deriv, spherical_j

__all__ = [
    "EPSILON_0",
    "MU_0",
    "Medium",
    "VACUUM",
    "ModeSpec",
    "FieldSample",
    "make_mode",
    "evaluate",
    "wave_impedances",
    "poynting",
    "azimuthal_power",
]

EPSILON_0 = 8.8541878128e-12  # F/m
MU_0 = 1.25663706212e-6  # H/m


@dataclass(frozen=True)
class Medium:
    epsilon: float = EPSILON_0
    mu: float = MU_0

    @property
    def impedance(self) -> float:
        return math.sqrt(self.mu / self.epsilon)

    @property
    def speed(self) -> float:
        return 1.0 / math.sqrt(self.epsilon * self.mu)


VACUUM = Medium()

FULL_SPHERE = AngularDomain()


@dataclass(frozen=True)
class ModeSpec:
    """Everything needed to evaluate one mode's fields at a point."""

    polarization: RootKind
    eigenpair: AngularEigenpair
    radial: RadialRoot
    radius_m: float
    amplitude: complex = 1.0 + 0.0j
    medium: Medium = VACUUM
    domain: AngularDomain = FULL_SPHERE
    azimuthal_kind: str = "traveling"  # traveling | sin | cos
    south_regular: bool = False

    def __post_init__(self):
        if self.radius_m <= 0.0:
            raise DomainError("cavity radius must be positive")
        if abs(self.radial.nu - self.eigenpair.nu) > 1e-12 * max(1.0, abs(self.eigenpair.nu)):
            raise DomainError("radial root and angular eigenpair disagree on nu")
        if self.radial.kind is not self.polarization:
            raise DomainError("radial root kind does not match the polarization")
        if self.azimuthal_kind not in ("traveling", "sin", "cos"):
            raise DomainError(f"unknown azimuthal kind {self.azimuthal_kind!r}")

    @property
    def wavenumber(self) -> float:
        return self.radial.x / self.radius_m

    @property
    def omega(self) -> float:
        return self.wavenumber * self.medium.speed


@dataclass(frozen=True)
class FieldSample:
    """Six complex field components at one point (spherical basis)."""

    point: tuple[float, float, float]  # (r [m], theta [rad], phi [rad])
    E: np.ndarray  # (E_r, E_theta, E_phi) in V/m
    H: np.ndarray  # (H_r, H_theta, H_phi) in A/m


def _azimuthal_factors(mode: ModeSpec, phi: float) -> tuple[complex, complex]:
    """(Phi(phi), Phi'(phi)) for the mode's azimuthal convention."""
    m = mode.eigenpair.m
    if mode.azimuthal_kind == "traveling":
        e = cmath.exp(1j * m * phi)
        return e, 1j * m * e
    if mode.azimuthal_kind == "sin":
        return complex(math.sin(m * phi)), complex(m * math.cos(m * phi))
    return complex(math.cos(m * phi)), complex(-m * math.sin(m * phi))


def _polar_pair(mode: ModeSpec, theta: float) -> tuple[float, float]:
    """(Theta, dTheta/dtheta) regular at the retained pole."""
    nu, m = mode.eigenpair.nu, mode.eigenpair.m
    if mode.south_regular:
        return (
            legendre_theta(nu, m, math.pi - theta),
            -legendre_theta_deriv(nu, m, math.pi - theta),
        )
    return legendre_theta(nu, m, theta), legendre_theta_deriv(nu, m, theta)


def _profiles(mode: ModeSpec, r: float, theta: float, polarization: RootKind | None = None):
    """(r, theta)-dependent coefficients of the six components.

    Returns (e_coeff, e_on_phi_deriv, h_coeff, h_on_phi_deriv): coefficient
    arrays plus flags telling which azimuthal factor (Phi or Phi') each
    component multiplies.  ``polarization`` overrides the mode's own tag to
    evaluate the dual-polarization wave sharing the same (nu, m, omega);
    duality statements compare TE and TM at a common frequency.
    """
    if polarization is None:
        polarization = mode.polarization
    nu = mode.eigenpair.nu
    a = mode.amplitude
    k = mode.wavenumber
    x = k * r
    jv = spherical_j(nu, x)
    rp = riccati_deriv(nu, x)
    th, dth = _polar_pair(mode, theta)
    s = math.sin(theta)
    omega = mode.omega
    lam = nu * (nu + 1.0)

    double_curl = np.array(
        [lam / r * a * jv * th, a / r * rp * dth, a / (r * s) * rp * th], dtype=complex
    )
    dc_flags = (False, False, True)

    if polarization is RootKind.TM_RICCATI_DERIV_ZERO:
        ce = -1j * omega * mode.medium.epsilon
        e_coeff, e_flags = double_curl, dc_flags
        h_coeff = np.array([0.0, ce * a / s * jv * th, -ce * a * jv * dth], dtype=complex)
        h_flags = (False, True, False)
    else:
        cm = 1j * omega * mode.medium.mu
        h_coeff, h_flags = double_curl, dc_flags
        e_coeff = np.array([0.0, cm * a / s * jv * th, -cm * a * jv * dth], dtype=complex)
        e_flags = (False, True, False)
    return e_coeff, e_flags, h_coeff, h_flags


def _check_point(mode: ModeSpec, r: float, theta: float, phi: float) -> None:
    if not (0.0 < r <= mode.radius_m):
        raise DomainError(f"r={r} outside (0, {mode.radius_m}]")
    lo = mode.domain.cone_half_angle_rad
    if not (lo < theta < math.pi):
        raise DomainError(f"theta={theta} outside the angular domain ({lo}, pi)")
    if not mode.domain.full_azimuth and not (
        -1e-12 <= phi <= mode.domain.azimuth_opening_rad + 1e-12
    ):
        raise DomainError(f"phi={phi} outside the wedge opening")


def evaluate(mode: ModeSpec, point: tuple[float, float, float]) -> FieldSample:
    """All six field components at (r, theta, phi)."""
    r, theta, phi = point
    _check_point(mode, r, theta, phi)
    f0, f1 = _azimuthal_factors(mode, phi)
    e_coeff, e_flags, h_coeff, h_flags = _profiles(mode, r, theta)
    e = e_coeff * np.array([f1 if fl else f0 for fl in e_flags])
    h = h_coeff * np.array([f1 if fl else f0 for fl in h_flags])
    return FieldSample(point=point, E=e, H=h)


def _select_standing_kind(mode: ModeSpec) -> str:
    """Pick sin/cos so the tangential E vanishes on both wedge faces."""
    opening = mode.domain.azimuth_opening_rad
    probe_r = 0.6 * mode.radius_m
    probe_t = max(1.0, mode.domain.cone_half_angle_rad + 0.5)
    best, best_leak = None, None
    for kind in ("sin", "cos"):
        trial = replace(mode, azimuthal_kind=kind)
        leak = 0.0
        scale = 0.0
        for phi_face in (0.0, opening):
            sample = evaluate(trial, (probe_r, probe_t, phi_face))
            leak = max(leak, abs(sample.E[0]), abs(sample.E[1]))
        mid = evaluate(trial, (probe_r, probe_t, 0.5 * opening))
        scale = max(abs(c) for c in np.concatenate([mid.E, mid.H]))
        rel = leak / scale if scale > 0.0 else math.inf
        if best is None or rel < best_leak:
            best, best_leak = kind, rel
    return best


def make_mode(
    polarization: RootKind,
    eigenpair: AngularEigenpair,
    n: int,
    radius_m: float,
    amplitude: complex = 1.0 + 0.0j,
    medium: Medium = VACUUM,
    domain: AngularDomain = FULL_SPHERE,
) -> ModeSpec:
    """Assemble a ModeSpec: radial root, azimuthal convention, pole choice."""
    root = radial_root(eigenpair.nu, n, polarization)
    mode = ModeSpec(
        polarization=polarization,
        eigenpair=eigenpair,
        radial=root,
        radius_m=radius_m,
        amplitude=amplitude,
        medium=medium,
        domain=domain,
        azimuthal_kind="traveling",
        south_regular=domain.has_cone,
    )
    if not domain.full_azimuth:
        if eigenpair.family is Family.NULL:
            kind = "sin"
        else:
            kind = _select_standing_kind(replace(mode, azimuthal_kind="sin"))
        mode = replace(mode, azimuthal_kind=kind)
    return mode


def wave_impedances(
    mode: ModeSpec,
    r: float,
    theta: float,
    phi: float | None = None,
    polarization: RootKind | None = None,
) -> complex:
    """Wave impedance as a ratio of evaluated transverse components.

    TE uses E_theta/H_r and TM uses E_r/H_theta when m > 0; the zonal (m = 0)
    variants fall back to E_phi/H_theta and E_theta/H_phi.  Pass
    ``polarization`` to evaluate the dual wave at the mode's own frequency;
    the product of the two dual ratios equals -mu/eps identically for
    traveling modes (TE and TM resonate at different frequencies, so duality
    is a same-frequency statement).
    """
    if phi is None:
        phi = 0.0 if mode.domain.full_azimuth else 0.5 * mode.domain.azimuth_opening_rad
    if polarization is None:
        polarization = mode.polarization
    _check_point(mode, r, theta, phi)
    f0, f1 = _azimuthal_factors(mode, phi)
    e_coeff, e_flags, h_coeff, h_flags = _profiles(mode, r, theta, polarization)
    e = e_coeff * np.array([f1 if fl else f0 for fl in e_flags])
    h = h_coeff * np.array([f1 if fl else f0 for fl in h_flags])
    sample = FieldSample(point=(r, theta, phi), E=e, H=h)
    zonal = mode.eigenpair.m == 0.0
    if polarization is RootKind.TE_JZERO:
        num, den = (sample.E[2], sample.H[1]) if zonal else (sample.E[1], sample.H[0])
    else:
        num, den = (sample.E[1], sample.H[2]) if zonal else (sample.E[0], sample.H[1])
    if den == 0 or not cmath.isfinite(num / den):
        raise ImpedanceUndefinedError(
            f"impedance undefined at r={r}, theta={theta}: denominator is a field null"
        )
    return num / den


def poynting(sample: FieldSample) -> np.ndarray:
    """Time-averaged Poynting vector S = 1/2 Re(E x H*), spherical basis."""
    return 0.5 * np.real(np.cross(sample.E, np.conj(sample.H)))


def azimuthal_power(mode: ModeSpec, rel_tol: float = 1e-6) -> float:
    """Azimuthal power P = int S_phi r^2 sin(theta) dr dtheta through a meridional cut."""
    a = mode.radius_m
    theta_lo = mode.domain.cone_half_angle_rad
    phi0 = 0.0 if mode.domain.full_azimuth else 0.25 * mode.domain.azimuth_opening_rad

    def s_phi(r: float, theta: float) -> float:
        return float(poynting(evaluate(mode, (r, theta, phi0)))[2])

    def inner(theta: float) -> float:
        val, err = quad(
            lambda r: s_phi(r, theta) * r * r, 0.0, a, epsabs=1e-25, epsrel=1e-8, limit=200
        )
        return val * math.sin(theta)

    val, err = quad(inner, theta_lo, math.pi, epsabs=1e-25, epsrel=1e-8, limit=200)
    if abs(val) > 0.0 and err > rel_tol * abs(val):
        raise IntegrationError(
            f"azimuthal power quadrature error {err:g} exceeds {rel_tol:g} relative"
        )
    return val
