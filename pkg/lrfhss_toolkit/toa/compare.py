"""Side-by-side comparison of the ToA models over a payload range."""

import logging
from dataclasses import dataclass, asdict
from typing import Any

from ..core.models import DEFAULT_TRANSITION_TIME_MS, DataRateProfile
from .models import toa_model_i, toa_model_ii, toa_proposed

logger = logging.getLogger(__name__)

COMPARE_COLUMNS = [
    "L",
    "dr",
    "toa_proposed_ms",
    "toa_model1_ms",
    "toa_model2_ms",
    "delta1_ms",
    "delta2_ms",
]


@dataclass(frozen=True)
class ToaComparison:
    """
    ToA of one payload length under the three models.

    Deltas are baseline minus proposed; the relative errors are the same
    deltas as a percentage of the proposed value.
    """
    L: int
    dr: str
    toa_proposed_ms: float
    toa_model1_ms: float
    toa_model2_ms: float
    delta1_ms: float
    delta2_ms: float
    rel1_pct: float
    rel2_pct: float

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def compare_row(
    payload_len: int,
    dr: DataRateProfile,
    transition_time: float = DEFAULT_TRANSITION_TIME_MS,
) -> ToaComparison:
    """Evaluate all three models for one payload length."""
    proposed = toa_proposed(payload_len, dr, transition_time)
    model1 = toa_model_i(payload_len, dr)
    model2 = toa_model_ii(payload_len, dr)
    return ToaComparison(
        L=payload_len,
        dr=dr.id.value,
        toa_proposed_ms=proposed,
        toa_model1_ms=model1,
        toa_model2_ms=model2,
        delta1_ms=model1 - proposed,
        delta2_ms=model2 - proposed,
        rel1_pct=100.0 * (model1 - proposed) / proposed,
        rel2_pct=100.0 * (model2 - proposed) / proposed,
    )


def compare_models(
    payload_range: range,
    dr: DataRateProfile,
    transition_time: float = DEFAULT_TRANSITION_TIME_MS,
) -> list[ToaComparison]:
    """
    Compare the proposed model against Model I and Model II.

    Args:
        payload_range: Payload lengths in bytes, e.g. range(10, 66)
        dr: Data-rate profile
        transition_time: T_T in ms used by the proposed model

    Returns:
        One ToaComparison per payload length, in range order

    Raises:
        ValueError: If the range is empty
        PayloadRangeError: If any length is outside 1..255
    """
    if len(payload_range) == 0:
        raise ValueError("Payload range is empty")
    rows = [compare_row(length, dr, transition_time) for length in payload_range]
    logger.debug(f"Compared {len(rows)} payload lengths for {dr.id.value}")
    return rows
