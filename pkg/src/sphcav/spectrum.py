"""Mode enumeration, geometry sweeps, and validation against bundled fixtures.

A cavity is described by its radius, an azimuthal opening (360 deg = full
sphere), and an optional polar cone.  Enumeration walks the admissible
azimuthal indices, derives the angular eigenvalues for each (termination
family nu = m + k without a cone, cone branches otherwise), quantizes
radially for both polarizations, and sorts by frequency with a deterministic
tie-break (TM before TE, then smaller m).
"""

from __future__ import annotations

import json
import math
import statistics
from dataclasses import dataclass
from importlib import resources

from .angular import (
    AngularDomain,
    azimuthal_indices,
    classify,
    cone_nu,
    cone_roots,
    nu_regular_both_poles,
)
from .errors import DomainError, FixtureLookupError
from .radial import (
    RootKind,
    frequency_from_root,
    j_zero,
    riccati_deriv_zero,
)

__all__ = [
    "CavityConfig",
    "ModeRecord",
    "enumerate_modes",
    "fundamental_tm",
    "cone_sweep",
    "wedge_sweep",
    "dispersion_table",
    "list_fixtures",
    "load_fixture",
    "validate",
    "ValidationReport",
    "format_csv",
    "format_json",
    "format_table",
]

_FREQ_SLACK = 1e-6  # inclusive cutoff slack, avoids boundary flakiness


@dataclass(frozen=True)
class CavityConfig:
    """Cavity geometry: radius plus optional wedge opening and polar cone."""

    radius_m: float
    wedge_opening_deg: float = 360.0
    cone_half_angle_deg: float = 0.0
    wedge_face_kind: str = "PEC_PEC"

    def __post_init__(self):
        if self.radius_m <= 0.0:
            raise DomainError("radius must be positive")
        if not (0.0 < self.wedge_opening_deg <= 360.0):
            raise DomainError("wedge opening must lie in (0, 360] degrees")
        if not (0.0 <= self.cone_half_angle_deg < 90.0):
            raise DomainError("cone half-angle must lie in [0, 90) degrees")
        if self.wedge_face_kind not in ("PEC_PEC", "PEC_PMC"):
            raise DomainError(f"unknown wedge face kind {self.wedge_face_kind!r}")

    @property
    def full_sphere(self) -> bool:
        return self.wedge_opening_deg == 360.0 and self.cone_half_angle_deg == 0.0

    def domain(self) -> AngularDomain:
        return AngularDomain(
            azimuth_opening_rad=math.radians(self.wedge_opening_deg),
            cone_half_angle_rad=math.radians(self.cone_half_angle_deg),
        )


@dataclass(frozen=True)
class ModeRecord:
    polarization: str  # "TM" | "TE"
    nu: float
    m: float
    k: int | None
    n: int
    root_x: float
    frequency_hz: float
    family: str


def _sort_key(rec: ModeRecord):
    return (rec.frequency_hz, 0 if rec.polarization == "TM" else 1, rec.m, rec.nu, rec.n)


def _azimuthal_values(config: CavityConfig, m_cap: float) -> list[float]:
    domain = config.domain()
    if domain.full_azimuth:
        count = int(m_cap) + 1
    else:
        # one extra index, filtered below; PEC/PMC values are never larger
        count = max(1, int(m_cap * domain.azimuth_opening_rad / math.pi) + 1)
    vals = azimuthal_indices(domain, count, config.wedge_face_kind)
    return [m for m in vals if m <= m_cap]


def _angular_candidates(config: CavityConfig, m: float, nu_cap: float):
    """Yield (nu, k, polarizations) admissible for azimuthal index m."""
    if config.cone_half_angle_deg == 0.0:
        k = 0
        while True:
            nu = nu_regular_both_poles(m, k)
            if nu > nu_cap:
                return
            if not (nu == 0.0 and m == 0.0):  # (0,0) generates no field
                yield nu, k, (RootKind.TM_RICCATI_DERIV_ZERO, RootKind.TE_JZERO)
            k += 1
    else:
        theta_c = math.radians(config.cone_half_angle_deg)
        for kind in (RootKind.TM_RICCATI_DERIV_ZERO, RootKind.TE_JZERO):
            for nu in cone_roots(m, theta_c, kind.value, nu_cap):
                yield nu, None, (kind,)


def enumerate_modes(
    config: CavityConfig,
    f_max_hz: float | None = None,
    max_count: int | None = None,
) -> list[ModeRecord]:
    """All modes up to f_max_hz (inclusive with 1e-6 slack), sorted by frequency."""
    if f_max_hz is None and max_count is None:
        raise DomainError("provide f_max_hz or max_count")
    if f_max_hz is None:
        f_cap = frequency_from_root(4.0, config.radius_m)
        while True:
            records = enumerate_modes(config, f_max_hz=f_cap)
            if len(records) >= max_count:
                return records[:max_count]
            f_cap *= 1.5

    a = config.radius_m
    x_cap = 2.0 * math.pi * a * f_max_hz * (1.0 + _FREQ_SLACK) / 299_792_458.0
    records: list[ModeRecord] = []
    cone = config.cone_half_angle_deg > 0.0
    for m in _azimuthal_values(config, x_cap):
        for nu, k, kinds in _angular_candidates(config, m, x_cap):
            for kind in kinds:
                n = 1
                while True:
                    root = (
                        riccati_deriv_zero(nu, n)
                        if kind is RootKind.TM_RICCATI_DERIV_ZERO
                        else j_zero(nu, n)
                    )
                    f = frequency_from_root(root.x, a)
                    if f > f_max_hz * (1.0 + _FREQ_SLACK):
                        break
                    records.append(
                        ModeRecord(
                            polarization=kind.value,
                            nu=nu,
                            m=m,
                            k=k,
                            n=n,
                            root_x=root.x,
                            frequency_hz=f,
                            family=classify(nu, m, cone_present=cone).value,
                        )
                    )
                    n += 1
    records.sort(key=_sort_key)
    if max_count is not None:
        records = records[:max_count]
    return records


def fundamental_tm(config: CavityConfig) -> ModeRecord:
    """Lowest-frequency TM mode of the configuration."""
    if config.wedge_opening_deg == 360.0:
        m = 1.0 if config.cone_half_angle_deg == 0.0 else 0.0
    else:
        phi = math.radians(config.wedge_opening_deg)
        m = math.pi / phi if config.wedge_face_kind == "PEC_PEC" else math.pi / (2.0 * phi)
    if config.cone_half_angle_deg == 0.0:
        nu, k = m, 0
    else:
        theta_c = math.radians(config.cone_half_angle_deg)
        nu, k = cone_nu(m, theta_c, "TM", 1), None
    root = riccati_deriv_zero(nu, 1)
    return ModeRecord(
        polarization="TM",
        nu=nu,
        m=m,
        k=k,
        n=1,
        root_x=root.x,
        frequency_hz=frequency_from_root(root.x, config.radius_m),
        family=classify(nu, m, cone_present=config.cone_half_angle_deg > 0.0).value,
    )


def cone_sweep(config: CavityConfig, theta_c_list_deg: list[float]) -> list[dict]:
    """Branch-1 TM angular eigenvalue and fundamental frequency per cone angle."""
    rows = []
    for tc in theta_c_list_deg:
        cfg = CavityConfig(
            radius_m=config.radius_m,
            wedge_opening_deg=config.wedge_opening_deg,
            cone_half_angle_deg=tc,
            wedge_face_kind=config.wedge_face_kind,
        )
        rec = fundamental_tm(cfg)
        rows.append({"theta_c_deg": tc, "nu": rec.nu, "f_ghz": rec.frequency_hz / 1e9})
    return rows


def wedge_sweep(config: CavityConfig, openings_deg: list[float]) -> list[dict]:
    """Fundamental TM frequency per azimuthal opening."""
    rows = []
    for phi in openings_deg:
        cfg = CavityConfig(
            radius_m=config.radius_m,
            wedge_opening_deg=phi,
            cone_half_angle_deg=config.cone_half_angle_deg,
            wedge_face_kind=config.wedge_face_kind,
        )
        rec = fundamental_tm(cfg)
        rows.append({"opening_deg": phi, "m1": rec.m, "f_ghz": rec.frequency_hz / 1e9})
    return rows


def dispersion_table(nu_list: list[float], radius_m: float = 0.015) -> list[dict]:
    """First TE/TM roots and frequencies per angular index."""
    rows = []
    for nu in nu_list:
        te = j_zero(nu, 1)
        tm = riccati_deriv_zero(nu, 1)
        rows.append(
            {
                "nu": nu,
                "x_te": te.x,
                "f_te_ghz": frequency_from_root(te.x, radius_m) / 1e9,
                "x_tm": tm.x,
                "f_tm_ghz": frequency_from_root(tm.x, radius_m) / 1e9,
            }
        )
    return rows


# --- reference fixtures ------------------------------------------------------

_FIXTURE_NAMES = ("table1_dispersion", "table2_wedge90", "table3_cone", "table4_combined")


def list_fixtures() -> tuple[str, ...]:
    return _FIXTURE_NAMES


def _parse_cell(text: str):
    if "/" in text:
        num, den = text.split("/")
        try:
            return float(num) / float(den)
        except ValueError:
            return text
    try:
        return float(text)
    except ValueError:
        return text


def load_fixture(name: str) -> dict:
    """Parse a bundled fixture file into {meta..., 'rows': [dict, ...]}."""
    if name not in _FIXTURE_NAMES:
        raise FixtureLookupError(f"no fixture named {name!r}; available: {_FIXTURE_NAMES}")
    text = resources.files("sphcav.fixtures").joinpath(f"{name}.txt").read_text()
    meta: dict = {}
    columns: list[str] | None = None
    rows: list[dict] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if columns is None:
            key, _, value = line.partition(":")
            key, value = key.strip(), value.strip()
            if key == "columns":
                columns = value.split()
            elif key == "name":
                meta[key] = value
            elif key == "kind":
                meta[key] = value
            else:
                meta[key] = _parse_cell(value)
        else:
            cells = line.split()
            rows.append({c: _parse_cell(v) for c, v in zip(columns, cells)})
    meta["rows"] = rows
    return meta


@dataclass(frozen=True)
class ValidationReport:
    fixture: str
    rows: list[dict]
    max_theory_dev: float
    mean_theory_dev: float
    max_reference_dev: float
    passed: bool

    def lines(self) -> list[str]:
        out = [f"fixture {self.fixture}: {'PASS' if self.passed else 'FAIL'}"]
        for row in self.rows:
            out.append("  " + "  ".join(f"{k}={_fmt(v)}" for k, v in row.items()))
        out.append(
            f"  theory column: max dev {self.max_theory_dev:.3%}, "
            f"mean {self.mean_theory_dev:.3%}; reference column: max dev "
            f"{self.max_reference_dev:.3%}"
        )
        return out


def _fmt(v) -> str:
    if isinstance(v, bool):
        return str(v)
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(v)


def validate(fixture_name: str) -> ValidationReport:
    """Recompute a fixture's theory column from scratch and compare both columns."""
    fx = load_fixture(fixture_name)
    kind = fx["kind"]
    radius = fx["radius_mm"] / 1000.0
    rows_out: list[dict] = []
    theory_devs: list[float] = []
    ref_devs: list[float] = []
    ok = True

    if kind == "dispersion":
        for row in fx["rows"]:
            comp = dispersion_table([row["nu"]], radius)[0]
            row_ok = True
            for key_x, key_f in (("x_te", "f_te_ghz"), ("x_tm", "f_tm_ghz")):
                dx = abs(comp[key_x] - row[key_x])
                df = abs(comp[key_f] - row[key_f])
                row_ok &= dx <= fx["root_atol"] and df <= fx["freq_atol_ghz"]
                theory_devs.append(df / row[key_f])
            rows_out.append(
                {
                    "nu": row["nu"],
                    "x_te": comp["x_te"],
                    "x_tm": comp["x_tm"],
                    "f_te_ghz": comp["f_te_ghz"],
                    "f_tm_ghz": comp["f_tm_ghz"],
                    "ok": row_ok,
                }
            )
            ok &= row_ok
        ref_devs.append(0.0)

    elif kind == "modes":
        for row in fx["rows"]:
            nu = row["nu"]
            root = riccati_deriv_zero(nu, 1) if row["pol"] == "TM" else j_zero(nu, 1)
            f_ghz = frequency_from_root(root.x, radius) / 1e9
            t_dev = abs(f_ghz - row["f_theory_ghz"]) / row["f_theory_ghz"]
            r_dev = abs(f_ghz - row["f_ref_ghz"]) / row["f_ref_ghz"]
            row_ok = t_dev <= fx["theory_rtol"] and r_dev <= fx["reference_rtol"]
            theory_devs.append(t_dev)
            ref_devs.append(r_dev)
            rows_out.append(
                {
                    "mode": int(row["mode"]),
                    "pol": row["pol"],
                    "nu": nu,
                    "m": row["m"],
                    "f_ghz": f_ghz,
                    "theory_dev": t_dev,
                    "reference_dev": r_dev,
                    "ok": row_ok,
                }
            )
            ok &= row_ok

    elif kind == "cone":
        for row in fx["rows"]:
            tc = math.radians(row["theta_c_deg"])
            nu = cone_nu(fx["m"], tc, "TM", 1)
            f_ghz = frequency_from_root(riccati_deriv_zero(nu, 1).x, radius) / 1e9
            nu_dev = abs(nu - row["nu"])
            t_dev = abs(f_ghz - row["f_theory_ghz"]) / row["f_theory_ghz"]
            r_dev = abs(f_ghz - row["f_ref_ghz"]) / row["f_ref_ghz"]
            row_ok = (
                nu_dev <= fx["nu_atol"]
                and t_dev <= fx["theory_rtol"]
                and r_dev <= fx["reference_rtol"]
            )
            theory_devs.append(t_dev)
            ref_devs.append(r_dev)
            rows_out.append(
                {
                    "theta_c_deg": row["theta_c_deg"],
                    "nu": nu,
                    "nu_fixture": row["nu"],
                    "nu_dev": nu_dev,
                    "f_ghz": f_ghz,
                    "theory_dev": t_dev,
                    "reference_dev": r_dev,
                    "ok": row_ok,
                }
            )
            ok &= row_ok

    elif kind == "combined":
        tc = math.radians(fx["cone_half_angle_deg"])
        for row in fx["rows"]:
            m_exact = math.pi / math.radians(row["opening_deg"])
            nu = cone_nu(m_exact, tc, "TM", 1)
            f_ghz = frequency_from_root(riccati_deriv_zero(nu, 1).x, radius) / 1e9
            t_dev = abs(f_ghz - row["f_theory_ghz"]) / row["f_theory_ghz"]
            r_dev = abs(f_ghz - row["f_ref_ghz"]) / row["f_ref_ghz"]
            row_ok = t_dev <= fx["theory_rtol"] and r_dev <= fx["reference_rtol"]
            theory_devs.append(t_dev)
            ref_devs.append(r_dev)
            rows_out.append(
                {
                    "opening_deg": row["opening_deg"],
                    "m_exact": m_exact,
                    "m_printed": row["m"],
                    "nu": nu,
                    "nu_fixture": row["nu"],
                    "f_ghz": f_ghz,
                    "theory_dev": t_dev,
                    "reference_dev": r_dev,
                    "ok": row_ok,
                }
            )
            ok &= row_ok
    else:
        raise FixtureLookupError(f"fixture kind {kind!r} has no validator")

    return ValidationReport(
        fixture=fixture_name,
        rows=rows_out,
        max_theory_dev=max(theory_devs),
        mean_theory_dev=statistics.fmean(theory_devs),
        max_reference_dev=max(ref_devs),
        passed=ok,
    )


# --- output formatting --------------------------------------------------------

_CSV_HEADER = "pol,nu,m,k,n,x,f_GHz,family"


def format_csv(records: list[ModeRecord]) -> str:
    lines = [_CSV_HEADER]
    for r in records:
        k = "" if r.k is None else str(r.k)
        lines.append(
            f"{r.polarization},{r.nu!r},{r.m!r},{k},{r.n},{r.root_x!r},"
            f"{r.frequency_hz / 1e9!r},{r.family}"
        )
    return "\n".join(lines) + "\n"


def format_json(records: list[ModeRecord]) -> str:
    objs = [
        {
            "pol": r.polarization,
            "nu": r.nu,
            "m": r.m,
            "k": r.k,
            "n": r.n,
            "x": r.root_x,
            "f_GHz": r.frequency_hz / 1e9,
            "family": r.family,
        }
        for r in records
    ]
    return json.dumps(objs, indent=2) + "\n"


def format_table(records: list[ModeRecord]) -> str:
    # human view rounds GHz to 2 decimals
    lines = [f"{'pol':<4} {'nu':>9} {'m':>9} {'k':>3} {'n':>2} {'x':>10} {'f [GHz]':>8} family"]
    for r in records:
        k = "-" if r.k is None else str(r.k)
        lines.append(
            f"{r.polarization:<4} {r.nu:>9.4f} {r.m:>9.4f} {k:>3} {r.n:>2} "
            f"{r.root_x:>10.4f} {r.frequency_hz / 1e9:>8.2f} {r.family}"
        )
    return "\n".join(lines) + "\n"
