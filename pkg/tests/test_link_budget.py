"""Tests of the end-to-end link budget: power, rate, and margin."""

import math
from dataclasses import replace

import pytest
from hypothesis import given, strategies as st

from vfso.atmosphere import TurbulenceDescriptor, WeatherScenario
from vfso.geometry import LinkGeometry, geometrical_capture_fraction
from vfso.link_budget import (
    LinkBudgetResult,
    TransceiverParams,
    achievable_rate,
    evaluate_link,
    link_margin,
    optical_loss,
    photon_energy,
    received_power,
)
from vfso.scenario import default_parameters, preset

TX, GEOMETRY_20KM, TURB = default_parameters()
GEOMETRY_5KM = replace(GEOMETRY_20KM, nfp_altitude_m=5000.0)
CLEAR = preset("clear_sky")


class TestOpticalLoss:
    def test_two_db_product(self):
        assert optical_loss(0.631, 1.0) == pytest.approx(2.0, abs=1e-3)

    def test_ideal_optics(self):
        assert optical_loss(1.0, 1.0) == 0.0

    def test_half_efficiencies(self):
        assert optical_loss(0.5, 0.5) == pytest.approx(6.020599913279624, rel=1e-12)

    @pytest.mark.parametrize("eta", [0.0, -0.1, 1.1])
    def test_rejects_out_of_range_efficiency(self, eta):
        with pytest.raises(ValueError):
            optical_loss(eta, 0.5)


class TestPhotonEnergy:
    def test_1550_nm(self):
        # 6.626e-34 * 3e8 / 1.55e-6
        assert photon_energy(1550.0) == pytest.approx(1.2824516129032259e-19, rel=1e-12)

    def test_inverse_proportionality(self):
        assert photon_energy(775.0) == pytest.approx(2.0 * photon_energy(1550.0), rel=1e-12)

    def test_650_nm(self):
        assert photon_energy(650.0) == pytest.approx(3.058153846153846e-19, rel=1e-12)


class TestReceivedPower:
    def test_clear_sky_reference(self):
        got = received_power(TX, GEOMETRY_20KM, 0.7223257588578063)
        assert got == pytest.approx(5.393707695525116e-07, rel=1e-9)

    def test_huge_attenuation_underflows_to_zero(self):
        assert received_power(TX, GEOMETRY_20KM, 10000.0) == 0.0

    def test_lossless_link_delivers_transmit_power(self):
        tx = replace(TX, tx_efficiency=1.0, rx_efficiency=1.0, pointing_loss_db=0.0)
        narrow = replace(GEOMETRY_20KM, divergence_rad=1e-9)
        assert received_power(tx, narrow, 0.0) == tx.transmit_power_w

    @given(st.floats(min_value=0.0, max_value=60.0), st.floats(min_value=0.1, max_value=40.0))
    def test_adding_decibels_divides_power(self, base_db, extra_db):
        a = received_power(TX, GEOMETRY_20KM, base_db)
        b = received_power(TX, GEOMETRY_20KM, base_db + extra_db)
        assert b == pytest.approx(a * 10.0 ** (-extra_db / 10.0), rel=1e-9)


class TestAchievableRate:
    def test_clear_sky_20km(self):
        assert achievable_rate(TX, GEOMETRY_20KM, CLEAR) == pytest.approx(
            42057787141.88515, rel=1e-9
        )

    def test_clear_sky_5km(self):
        assert achievable_rate(TX, GEOMETRY_5KM, CLEAR) == pytest.approx(
            660096023024.8745, rel=1e-9
        )

    def test_narrow_beam_cloud_and_fog(self):
        narrow = replace(GEOMETRY_20KM, divergence_rad=1e-6)
        got = achievable_rate(TX, narrow, preset("cloud_and_fog"))
        assert got == pytest.approx(24631083420.861706, rel=1e-9)
        assert got > 1e10  # tens of Gbit/s despite the weather, thanks to the capped beam

    @given(st.floats(min_value=2e-5, max_value=1e-3), st.floats(min_value=1.5, max_value=10.0))
    def test_inverse_square_in_divergence_when_uncapped(self, theta, k):
        no_turb = WeatherScenario(label="none")
        g1 = replace(GEOMETRY_20KM, divergence_rad=theta)
        g2 = replace(GEOMETRY_20KM, divergence_rad=k * theta)
        assert achievable_rate(TX, g2, no_turb) == pytest.approx(
            achievable_rate(TX, g1, no_turb) / k**2, rel=1e-9
        )

    @given(st.floats(min_value=2e-5, max_value=2e-4), st.floats(min_value=1.5, max_value=5.0))
    def test_divergence_scaling_holds_under_any_weather(self, theta, k):
        # scintillation is divergence-independent, so the ratio stays exact
        cloudy = preset("cloud_and_fog")
        g1 = replace(GEOMETRY_20KM, divergence_rad=theta)
        g2 = replace(GEOMETRY_20KM, divergence_rad=k * theta)
        assert achievable_rate(TX, g1, cloudy) == pytest.approx(
            achievable_rate(TX, g2, cloudy) * k**2, rel=1e-9
        )

    @given(st.floats(min_value=1.5, max_value=4.0))
    def test_inverse_square_in_altitude_without_turbulence(self, k):
        no_turb = WeatherScenario(label="none")
        g1 = replace(GEOMETRY_20KM, nfp_altitude_m=5000.0)
        g2 = replace(GEOMETRY_20KM, nfp_altitude_m=k * 5000.0)
        assert achievable_rate(TX, g2, no_turb) == pytest.approx(
            achievable_rate(TX, g1, no_turb) / k**2, rel=1e-9
        )

    def test_monotone_decreasing_over_altitude_sweep(self):
        altitudes = [1000.0 + i * (19000.0 / 39) for i in range(40)]
        rates = [
            achievable_rate(TX, replace(GEOMETRY_20KM, nfp_altitude_m=h), CLEAR)
            for h in altitudes
        ]
        assert all(a > b for a, b in zip(rates, rates[1:]))


class TestLinkMargin:
    def test_clear_sky_margins(self):
        rate20 = achievable_rate(TX, GEOMETRY_20KM, CLEAR)
        rate5 = achievable_rate(TX, GEOMETRY_5KM, CLEAR)
        assert link_margin(rate20, 3e9) == pytest.approx(11.467251639551694, rel=1e-9)
        assert link_margin(rate5, 3e9) == pytest.approx(23.424858614835898, rel=1e-9)

    def test_rate_equal_to_target(self):
        assert link_margin(3e9, 3e9) == 0.0

    def test_zero_rate_is_negative_infinity(self):
        assert link_margin(0.0, 3e9) == -math.inf

    @given(st.floats(min_value=1e-6, max_value=1e6))
    def test_margin_identity(self, k):
        assert link_margin(k * 3e9, 3e9) == pytest.approx(10.0 * math.log10(k), abs=1e-9)

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            link_margin(-1.0, 3e9)
        with pytest.raises(ValueError):
            link_margin(1.0, 0.0)


class TestEvaluateLink:
    def test_clear_sky_breakdown(self):
        result = evaluate_link(TX, GEOMETRY_20KM, CLEAR)
        b = result.loss_breakdown
        assert b.geometrical_db == pytest.approx(50.96910013008056, rel=1e-9)
        assert b.scintillation_db == pytest.approx(0.7223257588578063, rel=1e-9)
        assert b.pointing_db == 2.0
        assert b.optical_db == pytest.approx(2.0, rel=1e-9)
        assert b.fog_db == b.rain_db == b.cloud_db == 0.0
        assert result.data_rate_bps == pytest.approx(42057787141.88515, rel=1e-9)
        assert result.link_viable

    def test_lossless_ceiling(self):
        tx = replace(TX, tx_efficiency=1.0, rx_efficiency=1.0, pointing_loss_db=0.0)
        narrow = replace(GEOMETRY_20KM, divergence_rad=1e-9)
        result = evaluate_link(tx, narrow, WeatherScenario(label="none"))
        ceiling = tx.transmit_power_w / (
            photon_energy(tx.wavelength_nm) * tx.receiver_sensitivity_photons_per_bit
        )
        assert result.data_rate_bps == pytest.approx(ceiling, rel=1e-12)

    def test_dense_fog_divides_clear_sky_rate(self):
        foggy = evaluate_link(TX, GEOMETRY_20KM, preset("fog_dense"))
        clear = evaluate_link(TX, GEOMETRY_20KM, CLEAR)
        expected = clear.data_rate_bps * 10.0 ** (-19.195791967395415 / 10.0)
        assert foggy.data_rate_bps == pytest.approx(expected, rel=1e-9)

    def test_cloud_and_fog_fails_the_link(self):
        result = evaluate_link(TX, GEOMETRY_20KM, preset("cloud_and_fog"))
        assert not result.link_viable
        assert result.link_margin_db == pytest.approx(-41.825477526261935, rel=1e-9)

    @pytest.mark.parametrize(
        "name", ["clear_sky", "fog_dense", "heavy_rain", "cloud_and_fog", "rain_and_cloud"]
    )
    def test_breakdown_reconstructs_rate(self, name):
        result = evaluate_link(TX, GEOMETRY_20KM, preset(name))
        b = result.loss_breakdown
        total_db = (
            b.fog_db + b.rain_db + b.cloud_db + b.scintillation_db
            + b.geometrical_db + b.pointing_db
        )
        reconstructed = (
            TX.transmit_power_w
            * TX.tx_efficiency
            * TX.rx_efficiency
            * 10.0 ** (-total_db / 10.0)
            / (photon_energy(TX.wavelength_nm) * TX.receiver_sensitivity_photons_per_bit)
        )
        assert result.data_rate_bps == pytest.approx(reconstructed, rel=1e-9)

    def test_result_fields_are_non_negative(self):
        result = evaluate_link(TX, GEOMETRY_20KM, preset("rain_and_cloud"))
        b = result.loss_breakdown
        assert result.received_power_w >= 0.0
        assert result.data_rate_bps >= 0.0
        assert min(
            b.fog_db, b.rain_db, b.cloud_db, b.scintillation_db,
            b.geometrical_db, b.pointing_db, b.optical_db,
        ) >= 0.0


class TestTransceiverValidation:
    @pytest.mark.parametrize(
        "kwargs",
        [
            {"transmit_power_w": 0.0},
            {"tx_efficiency": 0.0},
            {"rx_efficiency": 1.2},
            {"wavelength_nm": -1.0},
            {"pointing_loss_db": -0.5},
            {"receiver_sensitivity_photons_per_bit": 0.0},
        ],
    )
    def test_rejects_invalid_parameters(self, kwargs):
        base = dict(
            transmit_power_w=0.2,
            tx_efficiency=0.794,
            rx_efficiency=0.794,
            wavelength_nm=1550.0,
            pointing_loss_db=2.0,
            receiver_sensitivity_photons_per_bit=100.0,
        )
        base.update(kwargs)
        with pytest.raises(ValueError):
            TransceiverParams(**base)
