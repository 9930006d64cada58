"""Tests for the current consumption and lifetime model."""

from dataclasses import replace

import numpy as np
import pytest

from lrfhss_toolkit.core import InfeasiblePeriodError, RadioState, StateParams
from lrfhss_toolkit.energy import (
    Transmission,
    active_duration,
    active_state_durations,
    average_current,
    battery_lifetime,
    energy_report,
    state_charges,
    state_durations,
    transition_charge_reduction,
    transition_drop,
    transition_mean_current,
)
from lrfhss_toolkit.toa import toa_proposed, transition_count

FIFTEEN_MIN_MS = 15 * 60 * 1000.0


@pytest.fixture
def flat_cal(cal):
    """Synthetic calibration with zero standby and FS durations."""
    zero = ((1.0, 0.0), (255.0, 0.0))
    return replace(cal, standby_duration_curve=zero, fs_duration_curve=zero)


@pytest.fixture
def tx(dr8):
    return Transmission(payload_len=10, dr=dr8, p_tx_dbm=14.0)


def test_transition_currents():
    assert transition_mean_current(100.0, 4.94) == pytest.approx(68.313333333)
    assert transition_drop(100.0, 4.94) == pytest.approx(31.686666667)


def test_active_duration_with_state_table(flat_cal, tx):
    assert active_duration(tx, flat_cal) == pytest.approx(1447.2841, abs=1e-6)


def test_active_duration_includes_curves(cal, tx):
    durations = active_state_durations(tx, cal)
    assert durations[RadioState.STANDBY] == pytest.approx(4.0 + 9 * 5.0 / 64)
    assert durations[RadioState.TRANSMISSION] == toa_proposed(10, tx.dr, 0.61)
    assert RadioState.SLEEP not in durations


def test_active_duration_additive(flat_cal, tx):
    longer = replace(flat_cal, radio_prepare=StateParams(duration_ms=99.67 + 5.0, current_ma=2.968))
    assert active_duration(tx, longer) - active_duration(tx, flat_cal) == pytest.approx(5.0)


def test_only_transmission_time(flat_cal, tx):
    bare = replace(
        flat_cal,
        wake_up=StateParams(0.0, 1.9),
        radio_prepare=StateParams(0.0, 2.968),
        radio_off=StateParams(0.0, 4.94),
        standby_final_duration=0.0,
    )
    assert active_duration(tx, bare) == toa_proposed(10, tx.dr, 0.61)


def test_sleep_fills_period(cal, tx):
    durations = state_durations(tx, FIFTEEN_MIN_MS, cal)
    assert sum(durations.values()) == pytest.approx(FIFTEEN_MIN_MS)
    assert durations[RadioState.SLEEP] == pytest.approx(FIFTEEN_MIN_MS - active_duration(tx, cal))


def test_charge_additivity(cal, tx):
    gross = state_charges(tx, FIFTEEN_MIN_MS, cal)
    reduction = transition_charge_reduction(tx, cal)
    avg = average_current(tx, FIFTEEN_MIN_MS, cal)
    assert (sum(gross.values()) - reduction) / FIFTEEN_MIN_MS == pytest.approx(avg, rel=1e-9)


def test_transition_reduction(cal, tx):
    # I_tx = 48 mA at 14 dBm on the LPA
    expected = 0.61 * transition_drop(48.0, 4.94) * transition_count(10, tx.dr)
    assert transition_charge_reduction(tx, cal) == pytest.approx(expected)


def test_infeasible_period(cal, tx):
    with pytest.raises(InfeasiblePeriodError) as exc_info:
        average_current(tx, 1000.0, cal)
    assert "shorter than the active time" in str(exc_info.value)


@pytest.mark.parametrize("period", [0.0, -1.0, float("nan"), float("inf")])
def test_non_positive_or_non_finite_period(cal, tx, period):
    with pytest.raises(InfeasiblePeriodError):
        average_current(tx, period, cal)


def test_long_period_tends_to_sleep_current(cal, tx):
    avg = average_current(tx, 1e9, cal)
    assert avg == pytest.approx(0.053, rel=0.01)
    assert avg > 0.053


def test_strictly_decreasing_in_period(cal, tx):
    periods = [60_000.0 * k for k in (1, 2, 5, 15, 30, 60, 240)]
    currents = [average_current(tx, p, cal) for p in periods]
    assert all(b < a for a, b in zip(currents, currents[1:]))


def test_higher_power_draws_more(cal, dr8):
    low = average_current(Transmission(10, dr8, 0.0), FIFTEEN_MIN_MS, cal)
    high = average_current(Transmission(10, dr8, 22.0), FIFTEEN_MIN_MS, cal)
    assert high > low


class TestBatteryLifetime:
    """Linear battery model."""

    def test_unit_division(self):
        hours = battery_lifetime(1.0, 2400.0)
        assert hours == 2400.0
        assert hours / 24 == 100.0

    def test_inverse_proportional(self):
        assert battery_lifetime(0.5, 2400.0) == 2 * battery_lifetime(1.0, 2400.0)

    @pytest.mark.parametrize("seed", range(25))
    def test_halves_when_current_doubles(self, seed):
        rng = np.random.default_rng(seed)
        avg = float(rng.uniform(1e-3, 100.0))
        capacity = float(rng.uniform(1.0, 10_000.0))
        hours = battery_lifetime(avg, capacity)
        assert battery_lifetime(2 * avg, capacity) == pytest.approx(hours / 2)
        assert hours * avg == pytest.approx(capacity)

    @pytest.mark.parametrize("avg,capacity", [(1.0, 0.0), (0.0, 2400.0), (-1.0, 2400.0)])
    def test_non_positive_inputs(self, avg, capacity):
        with pytest.raises(ValueError):
            battery_lifetime(avg, capacity)


class TestEnergyReport:
    """Report assembly and unit conversion."""

    def test_report_matches_library(self, cal, tx):
        report = energy_report(tx, FIFTEEN_MIN_MS, cal)
        assert report.average_current == average_current(tx, FIFTEEN_MIN_MS, cal)
        assert report.toa_ms == toa_proposed(10, tx.dr, 0.61)
        assert report.active_duration_ms == pytest.approx(active_duration(tx, cal))
        assert report.lifetime_h is None
        assert "lifetime_h" not in report.to_dict()

    def test_net_state_charges_sum_to_average(self, cal, tx):
        report = energy_report(tx, FIFTEEN_MIN_MS, cal)
        assert list(report.state_charge_mams) == [s.label for s in RadioState]
        total = sum(report.state_charge_mams.values())
        assert total / FIFTEEN_MIN_MS == pytest.approx(report.average_current, rel=1e-9)

    def test_charge_per_packet(self, cal, tx):
        report = energy_report(tx, FIFTEEN_MIN_MS, cal)
        sleep = report.state_charge_mams["sleep"]
        active = report.average_current * FIFTEEN_MIN_MS - sleep
        assert report.charge_per_packet_mah == pytest.approx(active / 3_600_000.0)

    def test_lifetime_fields(self, cal, tx):
        report = energy_report(tx, FIFTEEN_MIN_MS, cal, capacity_mah=2400.0)
        assert report.lifetime_h == pytest.approx(2400.0 / report.average_current)
        assert report.lifetime_days == pytest.approx(report.lifetime_h / 24)
        assert report.lifetime_years == pytest.approx(report.lifetime_h / (24 * 365))

        data = report.to_dict()
        assert data["capacity_mah"] == 2400.0
        assert data["state_charge_mah"]["sleep"] == pytest.approx(
            report.state_charge_mams["sleep"] / 3_600_000.0
        )
