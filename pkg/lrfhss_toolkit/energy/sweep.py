"""Parameter sweeps over transmit power, payload or notification period."""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, asdict, replace
from enum import Enum
from typing import Any, Sequence

import numpy as np

from ..core.models import DataRateProfile, RadioCalibration
from ..toa.models import toa_proposed
from .current import Transmission, active_duration, average_current, battery_lifetime

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = [
    "dr",
    "payload_bytes",
    "p_tx_dbm",
    "notification_s",
    "toa_ms",
    "t_active_ms",
    "i_avg_ma",
    "lifetime_h",
]


class SweepDimension(Enum):
    """Input varied by a sweep."""
    P_TX = "p_tx"
    PAYLOAD = "payload"
    NOTIFICATION_PERIOD = "notification_period"


@dataclass(frozen=True)
class SweepRow:
    """One evaluated sample of a sweep."""
    dr: str
    payload_bytes: int
    p_tx_dbm: float
    notification_s: float
    toa_ms: float
    t_active_ms: float
    i_avg_ma: float
    lifetime_h: float | None

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def sample_range(start: float, stop: float, step: float) -> list[float]:
    """
    Inclusive, evenly spaced samples from start to stop.

    The sample count is rounded so that float steps such as 0.5 land on
    stop exactly.

    Raises:
        ValueError: If step is not positive or stop < start
    """
    if step <= 0:
        raise ValueError(f"Step must be positive, got {step}")
    if stop < start:
        raise ValueError(f"Range stop {stop} is below start {start}")
    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    return [float(v) for v in start + step * np.arange(count)]


def _evaluate(
    tx: Transmission,
    notification_s: float,
    cal: RadioCalibration,
    capacity_mah: float | None,
) -> SweepRow:
    notification_ms = notification_s * 1000.0
    i_avg = average_current(tx, notification_ms, cal)
    return SweepRow(
        dr=tx.dr.id.value,
        payload_bytes=tx.payload_len,
        p_tx_dbm=float(tx.p_tx_dbm),
        notification_s=float(notification_s),
        toa_ms=toa_proposed(tx.payload_len, tx.dr, cal.transition_time),
        t_active_ms=active_duration(tx, cal),
        i_avg_ma=i_avg,
        lifetime_h=battery_lifetime(i_avg, capacity_mah) if capacity_mah is not None else None,
    )


def sweep(
    dimension: SweepDimension,
    values: Sequence[float],
    base: Transmission,
    notification_s: float,
    cal: RadioCalibration,
    drs: Sequence[DataRateProfile] | None = None,
    capacity_mah: float | None = None,
    workers: int = 1,
) -> list[SweepRow]:
    """
    Evaluate ToA, active time, average current and lifetime over one input.

    Args:
        dimension: Which input `values` replaces
        values: Sample values (dBm, bytes or seconds)
        base: Fixed payload, data rate and transmit power
        notification_s: Fixed notification period in seconds
        cal: Radio calibration
        drs: Data rates to sweep; defaults to the base data rate
        capacity_mah: Battery capacity for the lifetime column
        workers: Threads used to evaluate rows; output order never changes

    Returns:
        Rows grouped by data rate, each group in `values` order

    Raises:
        ValueError: If values is empty or payload values are not whole bytes
        ExtrapolationError, InfeasiblePeriodError: From the energy model
    """
    if not values:
        raise ValueError("Sweep range is empty")
    dimension = SweepDimension(dimension)

    jobs = []
    for dr in drs or [base.dr]:
        for value in values:
            tx = replace(base, dr=dr)
            period = notification_s
            if dimension is SweepDimension.P_TX:
                tx = replace(tx, p_tx_dbm=float(value))
            elif dimension is SweepDimension.PAYLOAD:
                if float(value) != int(value):
                    raise ValueError(f"Payload sweep values must be whole bytes, got {value}")
                tx = replace(tx, payload_len=int(value))
            else:
                period = float(value)
            jobs.append((tx, period))

    def run(job: tuple[Transmission, float]) -> SweepRow:
        return _evaluate(job[0], job[1], cal, capacity_mah)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(run, jobs))
    else:
        rows = [run(job) for job in jobs]

    logger.debug(f"Sweep over {dimension.value}: {len(rows)} rows")
    return rows
