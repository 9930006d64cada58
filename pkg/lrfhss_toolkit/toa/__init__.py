"""Time-on-Air models and model comparison."""

from .models import (
    toa_proposed,
    toa_model_i,
    toa_model_ii,
    toa_from_frame_plan,
    model_i_divisor,
    model_ii_fragments,
    transition_count,
    total_bits,
)
from .compare import COMPARE_COLUMNS, ToaComparison, compare_row, compare_models

__all__ = [
    "toa_proposed",
    "toa_model_i",
    "toa_model_ii",
    "toa_from_frame_plan",
    "model_i_divisor",
    "model_ii_fragments",
    "transition_count",
    "total_bits",
    "COMPARE_COLUMNS",
    "ToaComparison",
    "compare_row",
    "compare_models",
]
