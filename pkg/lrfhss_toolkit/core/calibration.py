"""
Calibration lookups: transmission current and payload-dependent state durations.

All curves are piecewise linear. Queries outside a curve's span are refused
rather than extrapolated, and the tx current curve is never interpolated
across the LPA/HPA switch.
"""

import logging
from typing import Iterable, Literal, Sequence

import numpy as np

from .models import (
    Amplifier,
    CalibrationError,
    DataRateProfile,
    ExtrapolationError,
    MissingCalibrationError,
    RadioCalibration,
)

logger = logging.getLogger(__name__)

DurationState = Literal["standby", "fs"]


def interpolate(points: Sequence[tuple[float, float]], x: float, what: str = "curve") -> float:
    """
    Piecewise-linear interpolation over (abscissa, ordinate) knots.

    Args:
        points: Knots with strictly increasing abscissae
        x: Query abscissa
        what: Curve name used in error messages

    Returns:
        Interpolated ordinate; exact at knots

    Raises:
        ExtrapolationError: If x lies outside [first, last] abscissa
    """
    xs = np.fromiter((p[0] for p in points), dtype=float)
    ys = np.fromiter((p[1] for p in points), dtype=float)
    if xs.size == 0:
        raise ExtrapolationError(f"{what} has no points")
    if not xs[0] <= x <= xs[-1]:
        raise ExtrapolationError(
            f"{what}: {x} is outside the calibrated span [{xs[0]}, {xs[-1]}]; "
            f"extrapolation is refused"
        )
    hit = np.flatnonzero(xs == x)
    if hit.size:
        return float(ys[hit[0]])
    return float(np.interp(x, xs, ys))


def amplifier_for(cal: RadioCalibration, p_tx: float) -> Amplifier:
    """Amplifier the radio uses at `p_tx` dBm."""
    return Amplifier.HPA if p_tx > cal.pa_switch_threshold else Amplifier.LPA


def tx_current(cal: RadioCalibration, p_tx: float, dr: DataRateProfile) -> float:
    """
    Transmission current at a transmit power, in mA.

    Points are matched on the data rate's DR8/DR9 class and on the amplifier
    region `p_tx` falls in.

    Raises:
        MissingCalibrationError: If there are no points for the data rate
        ExtrapolationError: If p_tx lies outside the matching region's span
    """
    for_dr = [p for p in cal.tx_current_curve if p.dr.canonical is dr.canonical]
    if not for_dr:
        raise MissingCalibrationError(
            f"No tx current calibration for {dr.id.value} "
            f"(looked up as {dr.canonical.value})"
        )

    pa = amplifier_for(cal, p_tx)
    region = sorted((p.p_tx_dbm, p.i_tx_ma) for p in for_dr if p.pa is pa)
    if not region:
        raise ExtrapolationError(
            f"tx_current: no {pa.value} points for {dr.canonical.value}; "
            f"{p_tx} dBm cannot be served"
        )

    current = interpolate(region, p_tx, what=f"tx_current[{dr.canonical.value}/{pa.value}]")
    logger.debug(f"I_tx({p_tx} dBm, {dr.id.value}, {pa.value}) = {current:.6f} mA")
    return current


def state_duration(cal: RadioCalibration, state: DurationState, payload_len: float) -> float:
    """
    Duration of the payload-dependent standby or FS state, in ms.

    Raises:
        ValueError: If state is not "standby" or "fs"
        ExtrapolationError: If payload_len lies outside the curve span
    """
    if state == "standby":
        curve = cal.standby_duration_curve
    elif state == "fs":
        curve = cal.fs_duration_curve
    else:
        raise ValueError(f"Unknown duration state '{state}'. Must be 'standby' or 'fs'.")
    return interpolate(curve, payload_len, what=f"{state} duration curve")


def _check_curve(points: Iterable[tuple[float, float]], field: str) -> None:
    points = list(points)
    if len(points) < 2:
        raise CalibrationError("curve needs at least 2 points", field)
    for prev, nxt in zip(points, points[1:]):
        if not nxt[0] > prev[0]:
            raise CalibrationError(
                f"abscissae must be strictly increasing ({prev[0]} then {nxt[0]})", field
            )
    for x, y in points:
        if not np.isfinite(x):
            raise CalibrationError(f"expected a finite abscissa, got {x}", field)
        if not 0 <= y < np.inf:
            raise CalibrationError(f"durations must be non-negative and finite (got {y} at {x})", field)


def validate_calibration(cal: RadioCalibration) -> RadioCalibration:
    """
    Check every RadioCalibration invariant.

    Returns:
        The same calibration, for chaining

    Raises:
        CalibrationError: Naming the offending field and the reason
    """
    currents = {
        "states.wake_up.current_ma": cal.wake_up.current_ma,
        "states.standby.current_ma": cal.standby_current,
        "states.fs.current_ma": cal.fs_current,
        "states.radio_prepare.current_ma": cal.radio_prepare.current_ma,
        "states.radio_off.current_ma": cal.radio_off.current_ma,
        "states.sleep.current_ma": cal.sleep_current,
    }
    for field, value in currents.items():
        if not 0 < value < np.inf:
            raise CalibrationError(f"currents must be positive and finite (got {value})", field)

    durations = {
        "states.wake_up.duration_ms": cal.wake_up.duration_ms,
        "states.radio_prepare.duration_ms": cal.radio_prepare.duration_ms,
        "states.radio_off.duration_ms": cal.radio_off.duration_ms,
        "states.standby_final.duration_ms": cal.standby_final_duration,
        "transition_time_ms": cal.transition_time,
    }
    for field, value in durations.items():
        if not 0 <= value < np.inf:
            raise CalibrationError(f"durations must be non-negative and finite (got {value})", field)

    if not cal.sleep_current < cal.standby_current:
        raise CalibrationError(
            f"sleep current ({cal.sleep_current}) must be below standby current "
            f"({cal.standby_current})",
            "states.sleep.current_ma",
        )

    _check_curve(cal.standby_duration_curve, "states.standby.curve")
    _check_curve(cal.fs_duration_curve, "states.fs.curve")

    if not np.isfinite(cal.pa_switch_threshold):
        raise CalibrationError(
            f"expected a finite threshold, got {cal.pa_switch_threshold}", "pa_switch_threshold_dbm"
        )

    if not cal.tx_current_curve:
        raise CalibrationError("at least one tx current point is required", "tx_current")

    groups: dict[tuple, list[float]] = {}
    for idx, point in enumerate(cal.tx_current_curve):
        field = f"tx_current[{idx}]"
        if not 0 < point.i_tx_ma < np.inf:
            raise CalibrationError(f"currents must be positive and finite (got {point.i_tx_ma})", f"{field}.i_tx_ma")
        if not point.i_tx_ma > cal.standby_current:
            raise CalibrationError(
                f"tx current ({point.i_tx_ma}) must exceed standby current ({cal.standby_current})",
                f"{field}.i_tx_ma",
            )
        if not np.isfinite(point.p_tx_dbm):
            raise CalibrationError(f"expected a finite power, got {point.p_tx_dbm}", f"{field}.p_tx_dbm")
        above = point.p_tx_dbm > cal.pa_switch_threshold
        if point.pa is Amplifier.LPA and above:
            raise CalibrationError(
                f"LPA point at {point.p_tx_dbm} dBm lies above the switch threshold "
                f"{cal.pa_switch_threshold} dBm",
                f"{field}.pa",
            )
        if point.pa is Amplifier.HPA and not above:
            raise CalibrationError(
                f"HPA point at {point.p_tx_dbm} dBm lies at or below the switch threshold "
                f"{cal.pa_switch_threshold} dBm",
                f"{field}.pa",
            )
        groups.setdefault((point.dr.canonical, point.pa), []).append(point.p_tx_dbm)

    for (dr, pa), powers in groups.items():
        field = f"tx_current[{dr.value}/{pa.value}]"
        if len(powers) < 2:
            raise CalibrationError("curve needs at least 2 points", field)
        for prev, nxt in zip(powers, powers[1:]):
            if not nxt > prev:
                raise CalibrationError(
                    f"p_tx_dbm must be strictly increasing ({prev} then {nxt})", field
                )

    return cal
