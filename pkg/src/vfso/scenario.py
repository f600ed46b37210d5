"""Weather presets, simulation defaults, and parameter sweeps.

The default parameter set is the reference configuration used throughout:
200 mW at 1550 nm, 1 mrad full divergence, 45 deg elevation, 4 cm receiver
aperture, 2 dB each of pointing and optical loss, 100 photons/bit
sensitivity, 21 m/s rms wind. Weather presets cover clear sky, dense fog,
heavy rain, and combinations with a default single-Cumulus cloud deck.

Sweeps evaluate the full link budget over an altitude or divergence grid,
one row per grid point; they are deterministic and rows are independent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Optional, Sequence

import numpy as np

from .atmosphere import (
    CloudLayer,
    FogDescriptor,
    RainDescriptor,
    TurbulenceDescriptor,
    WeatherScenario,
)
from .geometry import LinkGeometry
from .link_budget import (
    DEFAULT_TARGET_RATE_BPS,
    LinkBudgetResult,
    TransceiverParams,
    efficiencies_from_optical_loss,
    evaluate_link,
)

# Altitude range the simulations sweep by default, in meters.
ALTITUDE_SWEEP_BOUNDS_M = (1000.0, 20000.0)
DEFAULT_ALTITUDE_POINTS = 40

DEFAULT_OPTICAL_LOSS_DB = 2.0

# Cumulus deck used by the cloud presets: 1 g/m^3 liquid water content,
# 250 droplets/cm^3 (mid-range of the typical 100-500), 48 m of cloud
# starting at 1 km. Entirely configurable; this default puts the combined
# cloud+fog scenario at ~34 dB of cloud loss on a 45 deg path.
DEFAULT_CLOUD_PROFILE: tuple[CloudLayer, ...] = (
    CloudLayer(
        base_altitude_m=1000.0,
        thickness_m=48.0,
        lwc_g_per_m3=1.0,
        droplet_density_per_cm3=250.0,
    ),
)

DEFAULT_FOG = FogDescriptor(visibility_km=0.05, layer_thickness_m=50.0)
DEFAULT_RAIN = RainDescriptor(rate_mm_per_hour=50.0, layer_thickness_m=1000.0)
DEFAULT_TURBULENCE = TurbulenceDescriptor(
    wind_speed_m_per_s=21.0, structure_constant_a=1.7e-14
)

PRESET_NAMES = ("clear_sky", "fog_dense", "heavy_rain", "cloud_and_fog", "rain_and_cloud")


def default_parameters() -> tuple[TransceiverParams, LinkGeometry, TurbulenceDescriptor]:
    """The reference transceiver, geometry (at 20 km), and turbulence state."""
    eta_t, eta_r = efficiencies_from_optical_loss(DEFAULT_OPTICAL_LOSS_DB)
    tx = TransceiverParams(
        transmit_power_w=0.2,
        tx_efficiency=eta_t,
        rx_efficiency=eta_r,
        wavelength_nm=1550.0,
        pointing_loss_db=2.0,
        receiver_sensitivity_photons_per_bit=100.0,
    )
    geometry = LinkGeometry(
        nfp_altitude_m=ALTITUDE_SWEEP_BOUNDS_M[1],
        elevation_rad=math.radians(45.0),
        divergence_rad=1e-3,
        receiver_radius_m=0.04,
    )
    return tx, geometry, DEFAULT_TURBULENCE


def preset(
    name: str,
    *,
    fog: Optional[FogDescriptor] = None,
    rain: Optional[RainDescriptor] = None,
    clouds: Optional[Sequence[CloudLayer]] = None,
    turbulence: Optional[TurbulenceDescriptor] = None,
) -> WeatherScenario:
    """Build a named weather scenario.

    The keyword arguments override the default fog/rain/cloud/turbulence
    components; a preset only picks up the components it includes
    (e.g. overriding rain does not add rain to clear_sky).
    """
    fog = fog if fog is not None else DEFAULT_FOG
    rain = rain if rain is not None else DEFAULT_RAIN
    clouds = tuple(clouds) if clouds is not None else DEFAULT_CLOUD_PROFILE
    turbulence = turbulence if turbulence is not None else DEFAULT_TURBULENCE

    if name == "clear_sky":
        return WeatherScenario(label=name, turbulence=turbulence)
    if name == "fog_dense":
        return WeatherScenario(label=name, fog=fog, turbulence=turbulence)
    if name == "heavy_rain":
        return WeatherScenario(label=name, rain=rain, turbulence=turbulence)
    if name == "cloud_and_fog":
        return WeatherScenario(label=name, fog=fog, clouds=clouds, turbulence=turbulence)
    if name == "rain_and_cloud":
        return WeatherScenario(label=name, rain=rain, clouds=clouds, turbulence=turbulence)
    raise ValueError(f"unknown preset {name!r}; expected one of {PRESET_NAMES}")


@dataclass(frozen=True)
class SweepSpec:
    """Grid over one variable: 'altitude' (m) or 'divergence' (rad).

    Endpoints are inclusive; scale is 'linear' or 'log' (log needs a
    positive start, useful for divergence grids spanning decades).
    """

    variable: str
    start: float
    stop: float
    points: int
    scale: str = "linear"

    def __post_init__(self) -> None:
        if self.variable not in ("altitude", "divergence"):
            raise ValueError(
                f"variable must be 'altitude' or 'divergence', got {self.variable!r}"
            )
        if not self.start < self.stop:
            raise ValueError(f"start must be < stop, got [{self.start}, {self.stop}]")
        if self.points < 2:
            raise ValueError(f"points must be >= 2, got {self.points}")
        if self.scale not in ("linear", "log"):
            raise ValueError(f"scale must be 'linear' or 'log', got {self.scale!r}")
        if self.scale == "log" and self.start <= 0:
            raise ValueError("log scale needs a positive start")

    def grid(self) -> list[float]:
        if self.scale == "log":
            return [float(x) for x in np.geomspace(self.start, self.stop, self.points)]
        return [float(x) for x in np.linspace(self.start, self.stop, self.points)]


@dataclass(frozen=True)
class SweepRow:
    """One grid point: the variable value plus either a result or an error."""

    value: float
    result: Optional[LinkBudgetResult] = None
    error: Optional[str] = None


@dataclass(frozen=True)
class SweepResult:
    spec: SweepSpec
    scenario_label: str
    rows: tuple[SweepRow, ...]


def run_sweep(
    spec: SweepSpec,
    scenario: WeatherScenario,
    tx: TransceiverParams,
    geometry: LinkGeometry,
    target_rate_bps: float = DEFAULT_TARGET_RATE_BPS,
) -> SweepResult:
    """Evaluate the link at every grid point, all other parameters fixed.

    A failing grid point is recorded as a row-level error instead of
    aborting the sweep. Identical inputs produce identical results.
    """
    rows: list[SweepRow] = []
    for value in spec.grid():
        try:
            if spec.variable == "altitude":
                point_geometry = replace(geometry, nfp_altitude_m=value)
            else:
                point_geometry = replace(geometry, divergence_rad=value)
            result = evaluate_link(tx, point_geometry, scenario, target_rate_bps)
        except ValueError as exc:
            rows.append(SweepRow(value=value, error=str(exc)))
        else:
            rows.append(SweepRow(value=value, result=result))
    return SweepResult(spec=spec, scenario_label=scenario.label, rows=tuple(rows))
