"""Electromagnetic mode spectra of PEC spherical cavities.

Supports azimuthal-wedge and polar-cone boundary modifications with the
non-integer angular indices they induce, full TE/TM field evaluation,
energy integrals, and validation against bundled reference tables.
"""

from .angular import (
    AngularDomain,
    AngularEigenpair,
    Family,
    angular_ode_residual,
    azimuthal_indices,
    classify,
    cone_nu,
    cone_roots,
    nu_regular_both_poles,
    sectoral_theta,
    south_singular_coefficient,
)
from .energy import (
    EnergyReport,
    mode_energy,
    radial_integrable,
    sectoral_angular_norm,
    unit_energy_mode,
    zonal_norm,
)
from .errors import (
    ClassificationError,
    ConvergenceError,
    DomainError,
    FixtureLookupError,
    ImpedanceUndefinedError,
    IntegrationError,
    RootSearchError,
    SphcavError,
)
from .fields import (
    VACUUM,
    FieldSample,
    Medium,
    ModeSpec,
    azimuthal_power,
    evaluate,
    make_mode,
    poynting,
    wave_impedances,
)
from .radial import (
    RadialRoot,
    RootKind,
    SPEED_OF_LIGHT,
    asymptotic_m_of_omega,
    frequency_from_root,
    j_zero,
    mcmahon_seed,
    riccati_deriv_zero,
)
from .specfun import (
    AIRY_ROOTS,
    AiryRootTable,
    SeriesControl,
    digamma,
    hyp2f1,
    legendre_theta,
    legendre_theta_deriv,
    ln_gamma,
    riccati_deriv,
    spherical_j,
)
from .spectrum import (
    CavityConfig,
    ModeRecord,
    ValidationReport,
    cone_sweep,
    dispersion_table,
    enumerate_modes,
    format_csv,
    format_json,
    format_table,
    fundamental_tm,
    list_fixtures,
    load_fixture,
    validate,
    wedge_sweep,
)

__version__ = "0.1.0"
