"""Atmospheric attenuation mechanisms for a slant optical path.

Covers the loss terms that make up the atmospheric budget of a vertical
free-space-optical link:

* Mie scattering through the Kruse visibility model (the workhorse: it also
  prices fog and in-cloud extinction once a visibility is known),
* rain attenuation through the usual rainfall-rate power law,
* cloud attenuation by converting each cloud layer's microphysics
  (liquid water content and droplet density) to an equivalent visibility,
* turbulence-induced scintillation from the Hufnagel-Valley profile of the
  refractive-index structure parameter.

All losses are returned in positive dB. Thicknesses and altitudes enter the
API in meters and are converted to km internally where the empirical
formulas expect km. Everything in this module is a pure function; there is
no shared state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .geometry import LinkGeometry, slant_path

# Background term of the Hufnagel-Valley profile, m^(-2/3).
HV_BACKGROUND = 2.7e-16


@dataclass(frozen=True)
class FogDescriptor:
    """A ground-anchored fog layer: visibility inside it and its thickness."""

    visibility_km: float
    layer_thickness_m: float

    def __post_init__(self) -> None:
        if self.visibility_km <= 0:
            raise ValueError(f"visibility_km must be positive, got {self.visibility_km}")
        if self.layer_thickness_m < 0:
            raise ValueError(
                f"layer_thickness_m must be non-negative, got {self.layer_thickness_m}"
            )


@dataclass(frozen=True)
class RainDescriptor:
    """A ground-anchored rain layer: rainfall rate and layer thickness."""

    rate_mm_per_hour: float
    layer_thickness_m: float

    def __post_init__(self) -> None:
        if self.rate_mm_per_hour < 0:
            raise ValueError(
                f"rate_mm_per_hour must be non-negative, got {self.rate_mm_per_hour}"
            )
        if self.layer_thickness_m < 0:
            raise ValueError(
                f"layer_thickness_m must be non-negative, got {self.layer_thickness_m}"
            )


@dataclass(frozen=True)
class CloudLayer:
    """One horizontally uniform cloud layer.

    lwc_g_per_m3 is the liquid water content; droplet_density_per_cm3 the
    droplet number density N_d. Together they set the in-cloud visibility.
    """

    base_altitude_m: float
    thickness_m: float
    lwc_g_per_m3: float
    droplet_density_per_cm3: float

    def __post_init__(self) -> None:
        if self.base_altitude_m < 0:
            raise ValueError(
                f"base_altitude_m must be non-negative, got {self.base_altitude_m}"
            )
        if self.thickness_m < 0:
            raise ValueError(f"thickness_m must be non-negative, got {self.thickness_m}")
        if self.lwc_g_per_m3 <= 0:
            raise ValueError(f"lwc_g_per_m3 must be positive, got {self.lwc_g_per_m3}")
        if self.droplet_density_per_cm3 <= 0:
            raise ValueError(
                f"droplet_density_per_cm3 must be positive, got {self.droplet_density_per_cm3}"
            )

    @property
    def top_altitude_m(self) -> float:
        return self.base_altitude_m + self.thickness_m


@dataclass(frozen=True)
class TurbulenceDescriptor:
    """Turbulence state for the Hufnagel-Valley profile.

    wind_speed_m_per_s is the rms wind speed; structure_constant_a the
    ground-level structure constant A in m^(-2/3). reference_altitude_m, when
    set, fixes the altitude at which Cn^2 is sampled for the scintillation
    loss; by default the platform altitude is used.
    """

    wind_speed_m_per_s: float
    structure_constant_a: float
    reference_altitude_m: Optional[float] = None

    def __post_init__(self) -> None:
        if self.wind_speed_m_per_s < 0:
            raise ValueError(
                f"wind_speed_m_per_s must be non-negative, got {self.wind_speed_m_per_s}"
            )
        if self.structure_constant_a < 0:
            raise ValueError(
                f"structure_constant_a must be non-negative, got {self.structure_constant_a}"
            )
        if self.reference_altitude_m is not None and self.reference_altitude_m < 0:
            raise ValueError(
                f"reference_altitude_m must be non-negative, got {self.reference_altitude_m}"
            )


@dataclass(frozen=True)
class WeatherScenario:
    """Composite atmospheric state: any subset of fog, rain, clouds, turbulence.

    Absent elements (None fog/rain/turbulence, empty cloud tuple) simply
    contribute zero loss.
    """

    label: str
    fog: Optional[FogDescriptor] = None
    rain: Optional[RainDescriptor] = None
    clouds: tuple[CloudLayer, ...] = ()
    turbulence: Optional[TurbulenceDescriptor] = None

    def __post_init__(self) -> None:
        if not self.label:
            raise ValueError("label must be non-empty")
        object.__setattr__(self, "clouds", tuple(self.clouds))
        _check_no_overlap(self.clouds)


@dataclass(frozen=True)
class AtmosphericLoss:
    """Per-mechanism atmospheric loss breakdown, all in dB."""

    fog_db: float = 0.0
    rain_db: float = 0.0
    cloud_db: float = 0.0
    scintillation_db: float = 0.0

    @property
    def total_db(self) -> float:
        return self.fog_db + self.rain_db + self.cloud_db + self.scintillation_db


def kruse_size_exponent(visibility_km: float) -> float:
    """Size-distribution exponent delta of the Kruse model.

    0.585 * V^(1/3) below 6 km visibility, 1.3 on the closed interval
    [6, 50] km, 1.6 above. Discontinuous at V = 6 km; that step is part of
    the model itself.
    """
    if visibility_km <= 0:
        raise ValueError(f"visibility_km must be positive, got {visibility_km}")
    if visibility_km > 50.0:
        return 1.6
    if visibility_km >= 6.0:
        return 1.3
    return 0.585 * visibility_km ** (1.0 / 3.0)


def mie_specific_attenuation(visibility_km: float, wavelength_nm: float) -> float:
    """Mie-scattering specific attenuation in dB/km (Kruse model).

    4.34 * (3.91 / V) * (lambda / 550)^(-delta), visibility in km and
    wavelength in nm.
    """
    if visibility_km <= 0:
        raise ValueError(f"visibility_km must be positive, got {visibility_km}")
    if wavelength_nm <= 0:
        raise ValueError(f"wavelength_nm must be positive, got {wavelength_nm}")
    delta = kruse_size_exponent(visibility_km)
    return 4.34 * (3.91 / visibility_km) * (wavelength_nm / 550.0) ** (-delta)


def _slant_factor(elevation_rad: float) -> float:
    if not 0 < elevation_rad <= math.pi / 2:
        raise ValueError(f"elevation_rad must be in (0, pi/2], got {elevation_rad}")
    return 1.0 / math.sin(elevation_rad)


def fog_attenuation(fog: FogDescriptor, elevation_rad: float, wavelength_nm: float) -> float:
    """Total fog loss in dB over the slanted crossing of the fog layer."""
    slant_km = fog.layer_thickness_m / 1000.0 * _slant_factor(elevation_rad)
    if slant_km == 0.0:
        return 0.0
    return mie_specific_attenuation(fog.visibility_km, wavelength_nm) * slant_km


def rain_attenuation(rain: RainDescriptor, elevation_rad: float) -> float:
    """Total rain loss in dB: 1.076 * R^0.67 dB/km over the slanted layer."""
    slant_km = rain.layer_thickness_m / 1000.0 * _slant_factor(elevation_rad)
    return 1.076 * rain.rate_mm_per_hour**0.67 * slant_km


def cloud_visibility(layer: CloudLayer) -> float:
    """Equivalent in-cloud visibility in km from LWC and droplet density.

    V = 1.002 * (LWC * N_d)^(-0.6473): thicker, denser clouds are harder to
    see through.
    """
    return 1.002 * (layer.lwc_g_per_m3 * layer.droplet_density_per_cm3) ** (-0.6473)


def _check_no_overlap(layers: Sequence[CloudLayer]) -> None:
    ordered = sorted(layers, key=lambda la: la.base_altitude_m)
    for below, above in zip(ordered, ordered[1:]):
        if above.base_altitude_m < below.top_altitude_m:
            raise ValueError(
                "cloud layers overlap: "
                f"[{below.base_altitude_m}, {below.top_altitude_m}] m and "
                f"[{above.base_altitude_m}, {above.top_altitude_m}] m"
            )


def cloud_attenuation(
    layers: Sequence[CloudLayer],
    nfp_altitude_m: float,
    elevation_rad: float,
    wavelength_nm: float,
) -> float:
    """Summed cloud loss in dB for every layer pierced by the path.

    Each layer is converted to an equivalent visibility, priced with the
    Kruse model, and weighted by the slant distance through the part of the
    layer below the platform. Layers wholly above the platform contribute
    nothing; a layer the platform sits inside contributes pro rata.
    """
    _check_no_overlap(layers)
    factor = _slant_factor(elevation_rad)
    total = 0.0
    for layer in layers:
        pierced_m = min(layer.top_altitude_m, nfp_altitude_m) - layer.base_altitude_m
        if pierced_m <= 0.0:
            continue
        specific = mie_specific_attenuation(cloud_visibility(layer), wavelength_nm)
        total += specific * pierced_m / 1000.0 * factor
    return total


def refractive_index_structure(altitude_m: float, turbulence: TurbulenceDescriptor) -> float:
    """Hufnagel-Valley refractive-index structure parameter Cn^2 in m^(-2/3).

    Three-term sum: a high-altitude wind-driven term, a fixed background
    term, and a ground-layer term scaled by the structure constant A.
    """
    if altitude_m < 0:
        raise ValueError(f"altitude_m must be non-negative, got {altitude_m}")
    h = altitude_m
    v = turbulence.wind_speed_m_per_s
    return (
        0.00594 * (v / 27.0) ** 2 * (1e-5 * h) ** 10 * math.exp(-h / 1000.0)
        + HV_BACKGROUND * math.exp(-h / 1500.0)
        + turbulence.structure_constant_a * math.exp(-h / 100.0)
    )


def scintillation_loss(wavelength_nm: float, cn2: float, path_length_m: float) -> float:
    """Turbulence-induced scintillation loss in dB.

    2 * sqrt(23.17 * k^(7/6) * Cn^2 * l^(11/6)) with the optical wavenumber
    k = 2*pi*1e9 / lambda_nm in 1/m and the path length l in m.
    """
    if wavelength_nm <= 0:
        raise ValueError(f"wavelength_nm must be positive, got {wavelength_nm}")
    if cn2 < 0:
        raise ValueError(f"cn2 must be non-negative, got {cn2}")
    if path_length_m <= 0:
        raise ValueError(f"path_length_m must be positive, got {path_length_m}")
    wavenumber = 2.0 * math.pi * 1e9 / wavelength_nm
    return 2.0 * math.sqrt(
        23.17 * wavenumber ** (7.0 / 6.0) * cn2 * path_length_m ** (11.0 / 6.0)
    )


def total_atmospheric_loss(
    scenario: WeatherScenario, geometry: LinkGeometry, wavelength_nm: float
) -> AtmosphericLoss:
    """Full atmospheric budget for one scenario and link geometry.

    Fog, rain and cloud terms use the geometry's elevation angle; the
    scintillation term samples Cn^2 at the turbulence descriptor's reference
    altitude (platform altitude unless overridden) over the whole slant path.
    """
    elevation = geometry.elevation_rad
    fog_db = (
        fog_attenuation(scenario.fog, elevation, wavelength_nm)
        if scenario.fog is not None
        else 0.0
    )
    rain_db = rain_attenuation(scenario.rain, elevation) if scenario.rain is not None else 0.0
    cloud_db = cloud_attenuation(
        scenario.clouds, geometry.nfp_altitude_m, elevation, wavelength_nm
    )
    if scenario.turbulence is not None:
        reference_m = (
            scenario.turbulence.reference_altitude_m
            if scenario.turbulence.reference_altitude_m is not None
            else geometry.nfp_altitude_m
        )
        cn2 = refractive_index_structure(reference_m, scenario.turbulence)
        scintillation_db = scintillation_loss(wavelength_nm, cn2, slant_path(geometry))
    else:
        scintillation_db = 0.0
    return AtmosphericLoss(
        fog_db=fog_db,
        rain_db=rain_db,
        cloud_db=cloud_db,
        scintillation_db=scintillation_db,
    )
