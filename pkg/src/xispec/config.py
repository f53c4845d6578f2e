"""Configuration objects for quadrature, ODE shooting and the CLI.

All configs are frozen dataclasses: a config is fixed at construction and
can be shared freely between threads.  The CLI assembles one `Config` from
an INI-style file (section per module) plus flag overrides, and stamps a
short hash of the effective settings into every output file so that a CSV
can be traced back to the numbers that produced it.
"""

from __future__ import annotations

import configparser
import dataclasses
import hashlib
import io
import os
from dataclasses import dataclass

from .errors import ValidationError

ENV_CONFIG_PATH = "XISPEC_CONFIG"


@dataclass(frozen=True)
class QuadratureConfig:
    """Controls series truncation and quadrature tolerances.

    truncation_t   upper limit for integrals over the Fourier time variable
    series_cutoff  hard cap on the number of theta/Phi series terms
    abs_tol        absolute tolerance for quadratures and series tails
    rel_tol        relative tolerance for adaptive refinement
    """

    truncation_t: float = 5.0
    series_cutoff: int = 400
    abs_tol: float = 1e-14
    rel_tol: float = 1e-11

    def __post_init__(self):
        if not self.truncation_t > 0:
            raise ValidationError("truncation_t must be positive")
        if self.series_cutoff < 1:
            raise ValidationError("series_cutoff must be >= 1")
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise ValidationError("tolerances must be positive")


@dataclass(frozen=True)
class WhittakerConfig:
    """Inward-integration settings for the Whittaker W function.

    The decaying solution is seeded at z0 = max(z0_min, z0_factor*|mu|^2)
    with the exponential asymptotic series and integrated inward.
    """

    z0_factor: float = 4.0
    z0_min: float = 40.0
    series_terms: int = 24
    ode_rtol: float = 1e-12
    seed_tol: float = 1e-11

    def __post_init__(self):
        if self.z0_factor <= 0 or self.z0_min <= 0:
            raise ValidationError("Whittaker seed point parameters must be positive")
        if self.series_terms < 4:
            raise ValidationError("series_terms must be >= 4")


@dataclass(frozen=True)
class ShootingConfig:
    """Settings for 1D Schroedinger shooting runs.

    seed_factor fixes the start point x0 through V(x0) >= seed_factor *
    max(1, |E|, |E_ref|); x0 may also be pinned explicitly, which keeps the
    normalisation constant across an energy scan.
    """

    seed_factor: float = 4000.0
    x0: float | None = None
    ode_rtol: float = 1e-12
    seed_validity_max: float = 0.05
    rescale_threshold: float = 1e120

    def __post_init__(self):
        if self.seed_factor < 10.0:
            raise ValidationError("seed_factor below 10 makes the LGWKB seed unreliable")
        if not (0 < self.seed_validity_max < 1):
            raise ValidationError("seed_validity_max must be in (0, 1)")


@dataclass(frozen=True)
class Config:
    """Aggregate configuration used by the CLI."""

    quadrature: QuadratureConfig = QuadratureConfig()
    whittaker: WhittakerConfig = WhittakerConfig()
    shooting: ShootingConfig = ShootingConfig()
    zeta_max_omega: float = 260.0

    def as_text(self) -> str:
        """Canonical key=value dump (sorted), used for hashing and headers."""
        lines = []
        for section, obj in (
            ("quadrature", self.quadrature),
            ("whittaker", self.whittaker),
            ("shooting", self.shooting),
        ):
            for field in sorted(f.name for f in dataclasses.fields(obj)):
                lines.append(f"{section}.{field}={getattr(obj, field)!r}")
        lines.append(f"special.zeta_max_omega={self.zeta_max_omega!r}")
        return "\n".join(lines)

    def digest(self) -> str:
        return hashlib.sha256(self.as_text().encode()).hexdigest()[:12]


_SECTION_CLASSES = {
    "quadrature": QuadratureConfig,
    "whittaker": WhittakerConfig,
    "shooting": ShootingConfig,
}


def _coerce(cls, key, raw):
    field_types = {f.name: f.type for f in dataclasses.fields(cls)}
    if key not in field_types:
        raise ValidationError(f"unknown config key {key!r} for section [{cls.__name__}]")
    text = str(field_types[key])
    if "int" in text:
        return int(raw)
    if raw.lower() in ("none", ""):
        return None
    return float(raw)


def load_config(path: str | None = None) -> Config:
    """Build a Config from an INI file (path, or $XISPEC_CONFIG, or defaults).

    Recognised sections: [quadrature], [whittaker], [shooting], [special].
    Unknown keys raise ValidationError rather than being ignored.
    """
    if path is None:
        path = os.environ.get(ENV_CONFIG_PATH)
    if path is None:
        return Config()
    parser = configparser.ConfigParser()
    with io.open(path, "r", encoding="utf-8") as fh:
        parser.read_file(fh)
    kwargs = {}
    for section, cls in _SECTION_CLASSES.items():
        if parser.has_section(section):
            values = {k: _coerce(cls, k, v) for k, v in parser.items(section)}
            kwargs[section] = cls(**values)
    extra = {}
    if parser.has_section("special"):
        for k, v in parser.items("special"):
            if k == "zeta_max_omega":
                extra["zeta_max_omega"] = float(v)
            else:
                raise ValidationError(f"unknown config key {k!r} in [special]")
    known = set(_SECTION_CLASSES) | {"special"}
    for section in parser.sections():
        if section not in known:
            raise ValidationError(f"unknown config section [{section}]")
    return Config(**kwargs, **extra)
