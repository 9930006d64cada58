"""Core constants, data-rate profiles and calibration data model."""

from .models import (
    DataRate,
    DataRateProfile,
    PhyConstants,
    PHY,
    DEFAULT_TRANSITION_TIME_MS,
    RadioState,
    Amplifier,
    TxCurrentPoint,
    StateParams,
    RadioCalibration,
    LrFhssError,
    DataRateNotFoundError,
    UnsupportedCodeRateError,
    PayloadRangeError,
    CalibrationError,
    ExtrapolationError,
    MissingCalibrationError,
    InfeasiblePeriodError,
)
from .registry import register_profile, get_profile, list_profiles, reset_registry
from .calibration import (
    interpolate,
    amplifier_for,
    tx_current,
    state_duration,
    validate_calibration,
)
from .config_store import (
    resolve_calibration_path,
    default_calibration_path,
    calibration_from_dict,
    load_calibration,
    load_calibration_file,
    serialize_calibration,
    save_calibration,
    save_json,
)

__all__ = [
    "DataRate",
    "DataRateProfile",
    "PhyConstants",
    "PHY",
    "DEFAULT_TRANSITION_TIME_MS",
    "RadioState",
    "Amplifier",
    "TxCurrentPoint",
    "StateParams",
    "RadioCalibration",
    "LrFhssError",
    "DataRateNotFoundError",
    "UnsupportedCodeRateError",
    "PayloadRangeError",
    "CalibrationError",
    "ExtrapolationError",
    "MissingCalibrationError",
    "InfeasiblePeriodError",
    "register_profile",
    "get_profile",
    "list_profiles",
    "reset_registry",
    "interpolate",
    "amplifier_for",
    "tx_current",
    "state_duration",
    "validate_calibration",
    "resolve_calibration_path",
    "default_calibration_path",
    "calibration_from_dict",
    "load_calibration",
    "load_calibration_file",
    "serialize_calibration",
    "save_calibration",
    "save_json",
]
