"""End-to-end link budget: received power, achievable data rate, link margin.

The receiver is characterised by a photon-counting sensitivity N_b
(photons per bit), so the achievable rate falls straight out of the power
budget:

    R = P_received / (E_photon * N_b)   [bit/s]

with P_received the transmit power scaled by the optical efficiencies, the
pointing loss, the atmospheric loss and the geometric capture fraction.
The link margin compares the achievable rate against a target rate in dB;
a negative margin means the link cannot carry the target traffic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .atmosphere import AtmosphericLoss, WeatherScenario, total_atmospheric_loss
from .geometry import LinkGeometry, geometrical_capture_fraction, geometrical_loss

DEFAULT_TARGET_RATE_BPS = 3.0e9


@dataclass(frozen=True)
class PhysicalConstants:
    planck_j_s: float = 6.626e-34
    light_speed_m_per_s: float = 3.0e8


CONSTANTS = PhysicalConstants()


@dataclass(frozen=True)
class TransceiverParams:
    """Optical transceiver parameters of one link end-to-end.

    Efficiencies are linear factors in (0, 1]; pointing loss is a lumped dB
    figure; receiver_sensitivity_photons_per_bit is the photon count the
    detector needs per bit at its design error rate.
    """

    transmit_power_w: float
    tx_efficiency: float
    rx_efficiency: float
    wavelength_nm: float
    pointing_loss_db: float
    receiver_sensitivity_photons_per_bit: float

    def __post_init__(self) -> None:
        if self.transmit_power_w <= 0:
            raise ValueError(f"transmit_power_w must be positive, got {self.transmit_power_w}")
        for name in ("tx_efficiency", "rx_efficiency"):
            eta = getattr(self, name)
            if not 0 < eta <= 1:
                raise ValueError(f"{name} must be in (0, 1], got {eta}")
        if self.wavelength_nm <= 0:
            raise ValueError(f"wavelength_nm must be positive, got {self.wavelength_nm}")
        if self.pointing_loss_db < 0:
            raise ValueError(
                f"pointing_loss_db must be non-negative, got {self.pointing_loss_db}"
            )
        if self.receiver_sensitivity_photons_per_bit <= 0:
            raise ValueError(
                "receiver_sensitivity_photons_per_bit must be positive, "
                f"got {self.receiver_sensitivity_photons_per_bit}"
            )


@dataclass(frozen=True)
class LossBreakdown:
    """Every loss mechanism of one evaluation, in positive dB."""

    fog_db: float
    rain_db: float
    cloud_db: float
    scintillation_db: float
    geometrical_db: float
    pointing_db: float
    optical_db: float

    @property
    def atmospheric_db(self) -> float:
        return self.fog_db + self.rain_db + self.cloud_db + self.scintillation_db

    @property
    def total_db(self) -> float:
        return self.atmospheric_db + self.geometrical_db + self.pointing_db + self.optical_db


@dataclass(frozen=True)
class LinkBudgetResult:
    """Outcome of one link evaluation.

    link_viable is False when the margin is negative (achieved rate below
    the target); the margin itself is kept unclamped so failure depth stays
    visible.
    """

    loss_breakdown: LossBreakdown
    received_power_w: float
    data_rate_bps: float
    link_margin_db: float
    target_rate_bps: float

    @property
    def link_viable(self) -> bool:
        return self.link_margin_db >= 0.0


def optical_loss(tx_efficiency: float, rx_efficiency: float) -> float:
    """Loss in dB of the imperfect optics, -10*log10(eta_t * eta_r)."""
    for name, eta in (("tx_efficiency", tx_efficiency), ("rx_efficiency", rx_efficiency)):
        if not 0 < eta <= 1:
            raise ValueError(f"{name} must be in (0, 1], got {eta}")
    return -10.0 * math.log10(tx_efficiency * rx_efficiency)


def efficiencies_from_optical_loss(optical_loss_db: float) -> tuple[float, float]:
    """Split a lumped optical loss figure evenly into (eta_t, eta_r).

    Only the product enters the rate equation, so the even split is a
    convention, not an assumption.
    """
    if optical_loss_db < 0:
        raise ValueError(f"optical_loss_db must be non-negative, got {optical_loss_db}")
    eta = 10.0 ** (-optical_loss_db / 20.0)
    return eta, eta


def photon_energy(wavelength_nm: float, constants: PhysicalConstants = CONSTANTS) -> float:
    """Energy of one photon in joules, h*c/lambda."""
    if wavelength_nm <= 0:
        raise ValueError(f"wavelength_nm must be positive, got {wavelength_nm}")
    return constants.planck_j_s * constants.light_speed_m_per_s / (wavelength_nm * 1e-9)


def received_power(
    tx: TransceiverParams, geometry: LinkGeometry, atmospheric_loss_db: float
) -> float:
    """Optical power at the detector in watts.

    Transmit power scaled by both optical efficiencies, the pointing and
    atmospheric losses (dB -> linear), and the geometric capture fraction.
    """
    if atmospheric_loss_db < 0:
        raise ValueError(
            f"atmospheric_loss_db must be non-negative, got {atmospheric_loss_db}"
        )
    return (
        tx.transmit_power_w
        * tx.tx_efficiency
        * tx.rx_efficiency
        * 10.0 ** (-tx.pointing_loss_db / 10.0)
        * 10.0 ** (-atmospheric_loss_db / 10.0)
        * geometrical_capture_fraction(geometry)
    )


def achievable_rate(
    tx: TransceiverParams, geometry: LinkGeometry, scenario: WeatherScenario
) -> float:
    """Achievable data rate in bit/s under the given weather."""
    atm = total_atmospheric_loss(scenario, geometry, tx.wavelength_nm)
    power_w = received_power(tx, geometry, atm.total_db)
    return power_w / (photon_energy(tx.wavelength_nm) * tx.receiver_sensitivity_photons_per_bit)


def link_margin(rate_bps: float, target_rate_bps: float) -> float:
    """Margin in dB of an achieved rate over a target rate.

    10*log10(rate / target); equivalently received power over the power
    needed at the target rate. Zero rate yields -inf, the link-failure
    sentinel.
    """
    if rate_bps < 0:
        raise ValueError(f"rate_bps must be non-negative, got {rate_bps}")
    if target_rate_bps <= 0:
        raise ValueError(f"target_rate_bps must be positive, got {target_rate_bps}")
    if rate_bps == 0.0:
        return -math.inf
    return 10.0 * math.log10(rate_bps / target_rate_bps)


def evaluate_link(
    tx: TransceiverParams,
    geometry: LinkGeometry,
    scenario: WeatherScenario,
    target_rate_bps: float = DEFAULT_TARGET_RATE_BPS,
) -> LinkBudgetResult:
    """One-pass evaluation: full loss breakdown, received power, rate, margin.

    The breakdown is mutually consistent with the rate: converting the
    per-mechanism dB entries back to linear factors reproduces the rate to
    floating-point accuracy (optical lives in the efficiencies, geometrical
    in the capture fraction, each counted exactly once).
    """
    atm: AtmosphericLoss = total_atmospheric_loss(scenario, geometry, tx.wavelength_nm)
    power_w = received_power(tx, geometry, atm.total_db)
    rate_bps = power_w / (
        photon_energy(tx.wavelength_nm) * tx.receiver_sensitivity_photons_per_bit
    )
    breakdown = LossBreakdown(
        fog_db=atm.fog_db,
        rain_db=atm.rain_db,
        cloud_db=atm.cloud_db,
        scintillation_db=atm.scintillation_db,
        geometrical_db=geometrical_loss(geometry),
        pointing_db=tx.pointing_loss_db,
        optical_db=optical_loss(tx.tx_efficiency, tx.rx_efficiency),
    )
    return LinkBudgetResult(
        loss_breakdown=breakdown,
        received_power_w=power_w,
        data_rate_bps=rate_bps,
        link_margin_db=link_margin(rate_bps, target_rate_bps),
        target_rate_bps=target_rate_bps,
    )
