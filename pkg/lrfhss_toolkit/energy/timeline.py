"""
Explicit state timeline of one notification period.

The timeline is a numerical reconstruction of the current profile: one
segment per radio state, with the transmission segment broken at every block
boundary of the frame plan by a triangular dip of width T_T. Integrating it
is an independent check of the closed-form average current.
"""

import logging
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from ..core.models import RadioCalibration, RadioState
from ..framing.frame import build_frame_plan
from ..framing.hopping import DEFAULT_CHANNELS, HopGrid
from .current import (
    Transmission,
    state_currents,
    state_durations,
    transition_mean_current,
)

logger = logging.getLogger(__name__)

VERTEX_COLUMNS = ["t_ms", "i_ma", "state"]


@dataclass(frozen=True)
class Dip:
    """Current dip during one hop transition."""
    start: float
    width: float
    i_top: float
    i_bottom: float

    @property
    def mean_current(self) -> float:
        """Triangle centroid value (2 I_top + I_bottom) / 3."""
        return transition_mean_current(self.i_top, self.i_bottom)


@dataclass(frozen=True)
class Segment:
    """A contiguous stretch of one radio state."""
    state: RadioState
    start: float
    duration: float
    current: float
    dips: tuple[Dip, ...] = field(default=())

    @property
    def end(self) -> float:
        return self.start + self.duration

    def pieces(self) -> list[tuple[float, float]]:
        """(duration, mean current) pieces making up the segment."""
        dip_time = sum(d.width for d in self.dips)
        return [(self.duration - dip_time, self.current)] + [(d.width, d.mean_current) for d in self.dips]

    def to_dict(self) -> dict[str, Any]:
        return {
            "state": self.state.value,
            "name": self.state.label,
            "start_ms": self.start,
            "duration_ms": self.duration,
            "current_ma": self.current,
            "dips": [
                {"start_ms": d.start, "width_ms": d.width, "i_top_ma": d.i_top, "i_bottom_ma": d.i_bottom}
                for d in self.dips
            ],
        }


@dataclass(frozen=True)
class StateTimeline:
    """Ordered state segments covering [0, notification_ms)."""
    segments: tuple[Segment, ...]
    notification_ms: float

    def segment(self, state: RadioState) -> Segment:
        for seg in self.segments:
            if seg.state is state:
                return seg
        raise KeyError(state)

    def vertices(self) -> list[tuple[float, float, str]]:
        """
        Polyline of the current profile as (t_ms, i_ma, state) vertices.

        States are flat steps; each dip is drawn as a triangle from I_tx down
        to I_off at its midpoint and back.
        """
        points: list[tuple[float, float, str]] = []
        for seg in self.segments:
            name = seg.state.label
            points.append((seg.start, seg.current, name))
            for dip in seg.dips:
                points.append((dip.start, dip.i_top, name))
                points.append((dip.start + dip.width / 2.0, dip.i_bottom, name))
                points.append((dip.start + dip.width, dip.i_top, name))
            points.append((seg.end, seg.current, name))
        return points

    def vertex_rows(self) -> list[dict[str, Any]]:
        return [dict(zip(VERTEX_COLUMNS, v)) for v in self.vertices()]

    def to_dict(self) -> dict[str, Any]:
        return {
            "notification_ms": self.notification_ms,
            "segments": [seg.to_dict() for seg in self.segments],
        }


def build_state_timeline(
    tx: Transmission,
    notification_ms: float,
    cal: RadioCalibration,
    grid: HopGrid | None = None,
) -> StateTimeline:
    """
    Lay out the eight states of one notification period.

    Args:
        tx: Payload, data rate and transmit power
        notification_ms: Period length in ms
        cal: Radio calibration
        grid: Hop grid for the frame plan; only block boundaries matter here

    Raises:
        InfeasiblePeriodError: If the period is shorter than T_active
    """
    durations = state_durations(tx, notification_ms, cal)
    currents = state_currents(tx, cal)
    plan = build_frame_plan(tx.payload_len, tx.dr, grid or HopGrid(DEFAULT_CHANNELS))

    segments: list[Segment] = []
    start = 0.0
    for state in RadioState:
        if state is RadioState.SLEEP:
            # Sleep closes the period exactly.
            duration = notification_ms - start
        else:
            duration = durations[state]

        dips: tuple[Dip, ...] = ()
        if state is RadioState.TRANSMISSION:
            dip_list = []
            t = start
            for block in plan.blocks[:-1]:
                t += block.duration
                dip_list.append(Dip(t, cal.transition_time, currents[state], cal.radio_off.current_ma))
                t += cal.transition_time
            dips = tuple(dip_list)

        segments.append(Segment(state, start, duration, currents[state], dips))
        start += duration

    logger.debug(
        f"Timeline {tx.dr.id.value} L={tx.payload_len}: {len(segments)} segments, "
        f"{plan.transitions} dips"
    )
    return StateTimeline(tuple(segments), notification_ms)


def average_current_from_timeline(timeline: StateTimeline) -> float:
    """Time-weighted mean current of a timeline, in mA."""
    pieces = np.array([p for seg in timeline.segments for p in seg.pieces()], dtype=float)
    durations, currents = pieces[:, 0], pieces[:, 1]
    return float(np.dot(durations, currents) / durations.sum())
