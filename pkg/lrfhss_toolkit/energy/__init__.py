"""Current consumption, state timeline and battery lifetime models."""

from .current import (
    Transmission,
    EnergyReport,
    transition_mean_current,
    transition_drop,
    active_state_durations,
    active_duration,
    state_currents,
    state_durations,
    state_charges,
    transition_charge_reduction,
    average_current,
    battery_lifetime,
    energy_report,
)
from .timeline import (
    VERTEX_COLUMNS,
    Dip,
    Segment,
    StateTimeline,
    build_state_timeline,
    average_current_from_timeline,
)
from .sweep import SWEEP_COLUMNS, SweepDimension, SweepRow, sample_range, sweep

__all__ = [
    "Transmission",
    "EnergyReport",
    "transition_mean_current",
    "transition_drop",
    "active_state_durations",
    "active_duration",
    "state_currents",
    "state_durations",
    "state_charges",
    "transition_charge_reduction",
    "average_current",
    "battery_lifetime",
    "energy_report",
    "VERTEX_COLUMNS",
    "Dip",
    "Segment",
    "StateTimeline",
    "build_state_timeline",
    "average_current_from_timeline",
    "SWEEP_COLUMNS",
    "SweepDimension",
    "SweepRow",
    "sample_range",
    "sweep",
]
