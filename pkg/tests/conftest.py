"""Shared fixtures: a synthetic calibration built on the LR1120 state table."""

import copy

import pytest

from lrfhss_toolkit.core import calibration_from_dict, get_profile, reset_registry


def _tx_points(dr: str, lpa: tuple, hpa: tuple) -> list[dict]:
    points = [{"p_tx_dbm": p, "dr": dr, "i_tx_ma": i, "pa": "LPA"} for p, i in lpa]
    points += [{"p_tx_dbm": p, "dr": dr, "i_tx_ma": i, "pa": "HPA"} for p, i in hpa]
    return points


SYNTHETIC_DOCUMENT = {
    "schema_version": 1,
    "description": "synthetic test calibration",
    "states": {
        "wake_up": {"duration_ms": 0.4301, "current_ma": 1.9},
        "standby": {"current_ma": 1.229, "curve": [[1, 4.0], [65, 9.0], [255, 20.0]]},
        "fs": {"current_ma": 3.7392, "curve": [[1, 0.5], [255, 2.0]]},
        "radio_prepare": {"duration_ms": 99.67, "current_ma": 2.968},
        "radio_off": {"duration_ms": 9.45, "current_ma": 4.94},
        "standby_final": {"duration_ms": 1.044},
        "sleep": {"current_ma": 0.053},
    },
    "tx_current": (
        _tx_points("DR8", lpa=((0, 20.0), (14, 48.0)), hpa=((15, 90.0), (22, 118.0)))
        + _tx_points("DR9", lpa=((0, 19.0), (7, 30.0), (14, 46.0)), hpa=((15, 88.0), (22, 115.0)))
    ),
    "transition_time_ms": 0.61,
    "pa_switch_threshold_dbm": 14,
}

# p_tx knots present for both data rates
TX_KNOTS = [0.0, 14.0, 15.0, 22.0]


@pytest.fixture(autouse=True)
def clean_registry():
    """Reset the data-rate registry around each test."""
    reset_registry()
    yield
    reset_registry()


@pytest.fixture
def calibration_document():
    """A deep copy of the synthetic calibration document, safe to mutate."""
    return copy.deepcopy(SYNTHETIC_DOCUMENT)


@pytest.fixture
def cal(calibration_document):
    """The synthetic calibration, loaded and validated."""
    return calibration_from_dict(calibration_document)


@pytest.fixture
def dr8():
    return get_profile("DR8")


@pytest.fixture
def dr9():
    return get_profile("DR9")


@pytest.fixture
def no_cal_env(monkeypatch):
    """Make sure LRFHSS_CAL does not leak in from the environment."""
    monkeypatch.delenv("LRFHSS_CAL", raising=False)
