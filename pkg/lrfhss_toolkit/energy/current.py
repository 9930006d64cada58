"""
Average current and battery lifetime of a periodic LR-FHSS uplink.

One notification period walks through eight radio states: wake-up, standby,
frequency synthesis, radio preparation, transmission, radio off, a final
standby and sleep. The transmission current drops towards I_off at every hop
change; each drop is a triangle of width T_T whose mean is
(2 I_tx + I_off) / 3.

Currents are in mA, durations in ms, charges in mA*ms. Conversion to mAh
happens only in EnergyReport.
"""

import logging
import math
from dataclasses import dataclass
from typing import Any

from ..core.calibration import state_duration, tx_current
from ..core.models import (
    DataRateProfile,
    InfeasiblePeriodError,
    RadioCalibration,
    RadioState,
)
from ..toa.models import toa_proposed, transition_count

logger = logging.getLogger(__name__)

MS_PER_HOUR = 3_600_000.0
HOURS_PER_DAY = 24.0
DAYS_PER_YEAR = 365.0


@dataclass(frozen=True)
class Transmission:
    """Inputs that fix one periodic uplink: payload, data rate and transmit power."""
    payload_len: int
    dr: DataRateProfile
    p_tx_dbm: float


def transition_mean_current(i_tx: float, i_off: float) -> float:
    """Mean current over one hop transition, Ī_T = (2 I_tx + I_off) / 3."""
    return (2.0 * i_tx + i_off) / 3.0


def transition_drop(i_tx: float, i_off: float) -> float:
    """Current drop I_D = I_tx - Ī_T during a hop transition."""
    return i_tx - transition_mean_current(i_tx, i_off)


def active_state_durations(tx: Transmission, cal: RadioCalibration) -> dict[RadioState, float]:
    """
    Durations of the seven active states, in ms.

    Raises:
        ExtrapolationError: If the payload lies outside the duration curves
    """
    return {
        RadioState.WAKE_UP: cal.wake_up.duration_ms,
        RadioState.STANDBY: state_duration(cal, "standby", tx.payload_len),
        RadioState.FS: state_duration(cal, "fs", tx.payload_len),
        RadioState.RADIO_PREPARE: cal.radio_prepare.duration_ms,
        RadioState.TRANSMISSION: toa_proposed(tx.payload_len, tx.dr, cal.transition_time),
        RadioState.RADIO_OFF: cal.radio_off.duration_ms,
        RadioState.STANDBY_FINAL: cal.standby_final_duration,
    }


def active_duration(tx: Transmission, cal: RadioCalibration) -> float:
    """T_active: sum of the seven active state durations, in ms."""
    return sum(active_state_durations(tx, cal).values())


def state_currents(tx: Transmission, cal: RadioCalibration) -> dict[RadioState, float]:
    """
    Current of each of the eight states, in mA.

    Raises:
        MissingCalibrationError, ExtrapolationError: If p_tx is not calibrated
    """
    return {
        RadioState.WAKE_UP: cal.wake_up.current_ma,
        RadioState.STANDBY: cal.standby_current,
        RadioState.FS: cal.fs_current,
        RadioState.RADIO_PREPARE: cal.radio_prepare.current_ma,
        RadioState.TRANSMISSION: tx_current(cal, tx.p_tx_dbm, tx.dr),
        RadioState.RADIO_OFF: cal.radio_off.current_ma,
        RadioState.STANDBY_FINAL: cal.standby_current,
        RadioState.SLEEP: cal.sleep_current,
    }


def state_durations(tx: Transmission, notification_ms: float, cal: RadioCalibration) -> dict[RadioState, float]:
    """
    Durations of all eight states over one notification period.

    Raises:
        InfeasiblePeriodError: If the period is shorter than T_active
    """
    durations = active_state_durations(tx, cal)
    t_active = sum(durations.values())
    if not notification_ms >= t_active:
        raise InfeasiblePeriodError(
            f"Notification period {notification_ms:.3f} ms is shorter than the "
            f"active time {t_active:.3f} ms"
        )
    durations[RadioState.SLEEP] = notification_ms - t_active
    return durations


def state_charges(tx: Transmission, notification_ms: float, cal: RadioCalibration) -> dict[RadioState, float]:
    """Gross charge T_i * I_i of each state, in mA*ms, before the transition correction."""
    durations = state_durations(tx, notification_ms, cal)
    currents = state_currents(tx, cal)
    return {state: durations[state] * currents[state] for state in RadioState}


def transition_charge_reduction(tx: Transmission, cal: RadioCalibration) -> float:
    """Charge T_T * I_D * N_T not drawn during hop transitions, in mA*ms."""
    i_tx = tx_current(cal, tx.p_tx_dbm, tx.dr)
    drop = transition_drop(i_tx, cal.radio_off.current_ma)
    return cal.transition_time * drop * transition_count(tx.payload_len, tx.dr)


def average_current(tx: Transmission, notification_ms: float, cal: RadioCalibration) -> float:
    """
    Average current over one notification period, in mA.

    (sum_i T_i I_i - T_T I_D N_T) / T_notification, where the sleep state
    fills the period after the active states.

    Raises:
        InfeasiblePeriodError: If the period is shorter than T_active
        MissingCalibrationError, ExtrapolationError: If inputs are not calibrated
    """
    if not 0 < notification_ms < math.inf:
        raise InfeasiblePeriodError(f"Notification period must be positive and finite, got {notification_ms} ms")
    charge = sum(state_charges(tx, notification_ms, cal).values())
    charge -= transition_charge_reduction(tx, cal)
    return charge / notification_ms


def battery_lifetime(avg_current: float, capacity_mah: float) -> float:
    """
    Lifetime of an ideal (linear) battery, in hours.

    Raises:
        ValueError: If either input is not positive
    """
    if not capacity_mah > 0:
        raise ValueError(f"Battery capacity must be positive, got {capacity_mah} mAh")
    if not avg_current > 0:
        raise ValueError(f"Average current must be positive, got {avg_current} mA")
    return capacity_mah / avg_current


@dataclass(frozen=True)
class EnergyReport:
    """
    Current budget of one notification period.

    `state_charge_mams` holds the charge drawn in each state; the
    transmission entry is already reduced by the hop-transition drops, so
    the entries sum to average_current * notification_ms.
    """
    dr: str
    payload_len: int
    p_tx_dbm: float
    average_current: float
    state_charge_mams: dict[str, float]
    transition_reduction_mams: float
    toa_ms: float
    active_duration_ms: float
    notification_ms: float
    capacity_mah: float | None = None
    lifetime_h: float | None = None

    @property
    def charge_per_packet_mah(self) -> float:
        """Charge of the active part of the period (one transmission), in mAh."""
        active = sum(q for state, q in self.state_charge_mams.items() if state != RadioState.SLEEP.label)
        return active / MS_PER_HOUR

    @property
    def lifetime_days(self) -> float | None:
        return None if self.lifetime_h is None else self.lifetime_h / HOURS_PER_DAY

    @property
    def lifetime_years(self) -> float | None:
        return None if self.lifetime_h is None else self.lifetime_h / (HOURS_PER_DAY * DAYS_PER_YEAR)

    def to_dict(self) -> dict[str, Any]:
        """Convert the report to a JSON-ready dictionary."""
        data = {
            "dr": self.dr,
            "payload_len": self.payload_len,
            "p_tx_dbm": self.p_tx_dbm,
            "average_current_ma": self.average_current,
            "state_charge_mams": dict(self.state_charge_mams),
            "state_charge_mah": {k: v / MS_PER_HOUR for k, v in self.state_charge_mams.items()},
            "transition_reduction_mams": self.transition_reduction_mams,
            "charge_per_packet_mah": self.charge_per_packet_mah,
            "toa_ms": self.toa_ms,
            "active_duration_ms": self.active_duration_ms,
            "notification_ms": self.notification_ms,
        }
        if self.capacity_mah is not None:
            data["capacity_mah"] = self.capacity_mah
            data["lifetime_h"] = self.lifetime_h
            data["lifetime_days"] = self.lifetime_days
            data["lifetime_years"] = self.lifetime_years
        return data


def energy_report(
    tx: Transmission,
    notification_ms: float,
    cal: RadioCalibration,
    capacity_mah: float | None = None,
) -> EnergyReport:
    """
    Build the full EnergyReport for one configuration.

    Args:
        tx: Payload, data rate and transmit power
        notification_ms: Period between consecutive uplinks, in ms
        cal: Radio calibration
        capacity_mah: Battery capacity; adds the lifetime projection when given
    """
    durations = state_durations(tx, notification_ms, cal)
    gross = state_charges(tx, notification_ms, cal)
    reduction = transition_charge_reduction(tx, cal)
    i_avg = average_current(tx, notification_ms, cal)

    net = {state.label: charge for state, charge in gross.items()}
    net[RadioState.TRANSMISSION.label] -= reduction

    lifetime = battery_lifetime(i_avg, capacity_mah) if capacity_mah is not None else None
    report = EnergyReport(
        dr=tx.dr.id.value,
        payload_len=tx.payload_len,
        p_tx_dbm=tx.p_tx_dbm,
        average_current=i_avg,
        state_charge_mams=net,
        transition_reduction_mams=reduction,
        toa_ms=durations[RadioState.TRANSMISSION],
        active_duration_ms=sum(d for s, d in durations.items() if s is not RadioState.SLEEP),
        notification_ms=notification_ms,
        capacity_mah=capacity_mah,
        lifetime_h=lifetime,
    )
    logger.debug(
        f"Energy {tx.dr.id.value} L={tx.payload_len} P_tx={tx.p_tx_dbm} dBm "
        f"T={notification_ms} ms: I_avg={i_avg:.6f} mA"
    )
    return report
