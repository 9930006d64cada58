"""Calibration persistence and output writers."""

import csv
import io
import json
import logging
import math
import os
import sys
from importlib import resources
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence, TextIO

from .calibration import validate_calibration
from .models import (
    Amplifier,
    CalibrationError,
    DataRate,
    DataRateNotFoundError,
    RadioCalibration,
    StateParams,
    TxCurrentPoint,
)

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
CALIBRATION_ENV_VAR = "LRFHSS_CAL"
DEFAULT_CALIBRATION = "table4.json"

_STATE_KEYS = {
    "wake_up": {"duration_ms", "current_ma"},
    "standby": {"current_ma", "curve"},
    "fs": {"current_ma", "curve"},
    "radio_prepare": {"duration_ms", "current_ma"},
    "radio_off": {"duration_ms", "current_ma"},
    "standby_final": {"duration_ms"},
    "sleep": {"current_ma"},
}
_TX_KEYS = {"p_tx_dbm", "dr", "i_tx_ma", "pa"}


def default_calibration_path() -> Path:
    """Path of the bundled calibration document."""
    return Path(str(resources.files("lrfhss_toolkit").joinpath("data").joinpath(DEFAULT_CALIBRATION)))


def resolve_calibration_path(path: str | Path | None = None) -> Path:
    """
    Decide which calibration file to use.

    The file is determined by:
    1. The explicit path if given
    2. Otherwise, environment variable LRFHSS_CAL if set
    3. Otherwise, the bundled table4.json

    Returns:
        Path to the calibration document
    """
    if path:
        return Path(path)
    env_path = os.environ.get(CALIBRATION_ENV_VAR)
    if env_path:
        logger.debug(f"Using calibration from ${CALIBRATION_ENV_VAR}: {env_path}")
        return Path(env_path)
    return default_calibration_path()


def _check_keys(obj: Any, required: set[str], optional: set[str], field: str) -> dict:
    if not isinstance(obj, dict):
        raise CalibrationError("expected a JSON object", field)
    unknown = sorted(set(obj) - required - optional)
    if unknown:
        raise CalibrationError(f"unknown key(s) {', '.join(unknown)}", field)
    for key in sorted(required):
        if key not in obj:
            raise CalibrationError("missing required field", f"{field}.{key}" if field else key)
    return obj


def _number(value: Any, field: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise CalibrationError(f"expected a number, got {value!r}", field)
    if not math.isfinite(value):
        raise CalibrationError(f"expected a finite number, got {value!r}", field)
    return float(value)


def _curve(value: Any, field: str) -> tuple[tuple[float, float], ...]:
    if not isinstance(value, list):
        raise CalibrationError("expected an array of [payload_bytes, ms] pairs", field)
    points = []
    for idx, pair in enumerate(value):
        if not isinstance(pair, list) or len(pair) != 2:
            raise CalibrationError("expected a [payload_bytes, ms] pair", f"{field}[{idx}]")
        points.append((_number(pair[0], f"{field}[{idx}][0]"), _number(pair[1], f"{field}[{idx}][1]")))
    return tuple(points)


def _tx_point(value: Any, field: str) -> TxCurrentPoint:
    _check_keys(value, _TX_KEYS, set(), field)
    try:
        dr = DataRate.parse(value["dr"])
    except DataRateNotFoundError as e:
        raise CalibrationError(str(e), f"{field}.dr") from e
    try:
        pa = Amplifier(value["pa"])
    except ValueError:
        raise CalibrationError(f"amplifier must be 'LPA' or 'HPA', got {value['pa']!r}", f"{field}.pa") from None
    return TxCurrentPoint(
        p_tx_dbm=_number(value["p_tx_dbm"], f"{field}.p_tx_dbm"),
        dr=dr,
        i_tx_ma=_number(value["i_tx_ma"], f"{field}.i_tx_ma"),
        pa=pa,
    )


def calibration_from_dict(data: Any) -> RadioCalibration:
    """
    Build and validate a RadioCalibration from a parsed calibration document.

    Raises:
        CalibrationError: On missing or unknown fields, wrong types or any
            invariant violation; the error names the dotted field path
    """
    _check_keys(
        data,
        {"schema_version", "states", "tx_current", "transition_time_ms"},
        {"description", "pa_switch_threshold_dbm"},
        "",
    )
    version = data["schema_version"]
    if type(version) is not int or version != SCHEMA_VERSION:
        raise CalibrationError(
            f"unsupported schema version {data['schema_version']!r} (expected {SCHEMA_VERSION})",
            "schema_version",
        )
    description = data.get("description", "")
    if not isinstance(description, str):
        raise CalibrationError("expected a string", "description")

    states = _check_keys(data["states"], set(_STATE_KEYS), set(), "states")
    for name, keys in _STATE_KEYS.items():
        _check_keys(states[name], keys, set(), f"states.{name}")

    def state(name: str) -> StateParams:
        return StateParams(
            duration_ms=_number(states[name]["duration_ms"], f"states.{name}.duration_ms"),
            current_ma=_number(states[name]["current_ma"], f"states.{name}.current_ma"),
        )

    if not isinstance(data["tx_current"], list):
        raise CalibrationError("expected an array of tx current points", "tx_current")

    cal = RadioCalibration(
        wake_up=state("wake_up"),
        standby_current=_number(states["standby"]["current_ma"], "states.standby.current_ma"),
        standby_final_duration=_number(states["standby_final"]["duration_ms"], "states.standby_final.duration_ms"),
        fs_current=_number(states["fs"]["current_ma"], "states.fs.current_ma"),
        radio_prepare=state("radio_prepare"),
        radio_off=state("radio_off"),
        sleep_current=_number(states["sleep"]["current_ma"], "states.sleep.current_ma"),
        transition_time=_number(data["transition_time_ms"], "transition_time_ms"),
        tx_current_curve=tuple(
            _tx_point(p, f"tx_current[{idx}]") for idx, p in enumerate(data["tx_current"])
        ),
        standby_duration_curve=_curve(states["standby"]["curve"], "states.standby.curve"),
        fs_duration_curve=_curve(states["fs"]["curve"], "states.fs.curve"),
        pa_switch_threshold=_number(data.get("pa_switch_threshold_dbm", 14), "pa_switch_threshold_dbm"),
        description=description,
        schema_version=data["schema_version"],
    )
    return validate_calibration(cal)


def load_calibration(document: str) -> RadioCalibration:
    """
    Parse a calibration document (JSON text).

    Raises:
        CalibrationError: If the text is not valid JSON or the document is invalid
    """
    try:
        data = json.loads(document)
    except json.JSONDecodeError as e:
        raise CalibrationError(f"Invalid JSON: {e}") from e
    return calibration_from_dict(data)


def load_calibration_file(path: str | Path | None = None) -> RadioCalibration:
    """
    Load a calibration document from disk.

    Args:
        path: Calibration file; resolved with resolve_calibration_path when None

    Raises:
        CalibrationError: If the file does not exist or is invalid
    """
    path = resolve_calibration_path(path)
    if not path.exists():
        raise CalibrationError(f"Calibration file not found: {path}")
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise CalibrationError(f"Failed to read calibration from {path}: {e}") from e

    cal = load_calibration(text)
    logger.info(f"Loaded calibration from {path}")
    if cal.is_placeholder:
        logger.warning(f"Calibration {path} contains placeholder curves; replace them with measurements")
    return cal


def serialize_calibration(cal: RadioCalibration) -> dict[str, Any]:
    """Convert a RadioCalibration to the calibration document structure."""
    data: dict[str, Any] = {"schema_version": cal.schema_version}
    if cal.description:
        data["description"] = cal.description
    data["states"] = {
        "wake_up": {"duration_ms": cal.wake_up.duration_ms, "current_ma": cal.wake_up.current_ma},
        "standby": {"current_ma": cal.standby_current, "curve": [list(p) for p in cal.standby_duration_curve]},
        "fs": {"current_ma": cal.fs_current, "curve": [list(p) for p in cal.fs_duration_curve]},
        "radio_prepare": {"duration_ms": cal.radio_prepare.duration_ms, "current_ma": cal.radio_prepare.current_ma},
        "radio_off": {"duration_ms": cal.radio_off.duration_ms, "current_ma": cal.radio_off.current_ma},
        "standby_final": {"duration_ms": cal.standby_final_duration},
        "sleep": {"current_ma": cal.sleep_current},
    }
    data["tx_current"] = [p.to_dict() for p in cal.tx_current_curve]
    data["transition_time_ms"] = cal.transition_time
    data["pa_switch_threshold_dbm"] = cal.pa_switch_threshold
    return data


def save_json(data: Any, path: str | Path) -> Path:
    """
    Save data as indented JSON.

    Raises:
        CalibrationError: If the file cannot be written
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    try:
        with open(path, "w") as f:
            json.dump(data, f, indent=2)
            f.write("\n")
    except OSError as e:
        raise CalibrationError(f"Failed to save JSON to {path}: {e}") from e
    logger.debug(f"Saved JSON to {path}")
    return path


def save_calibration(cal: RadioCalibration, path: str | Path) -> Path:
    """Write a calibration document that load_calibration_file reads back identically."""
    return save_json(serialize_calibration(cal), path)


def format_value(value: Any) -> str:
    """CSV cell text: floats with six decimals, everything else via str()."""
    if isinstance(value, float):
        return f"{value:.6f}"
    if value is None:
        return ""
    return str(value)


def write_csv(rows: Iterable[Mapping[str, Any]], columns: Sequence[str], out: TextIO) -> int:
    """
    Write rows as CSV with a fixed column order.

    Returns:
        Number of data rows written
    """
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(columns)
    count = 0
    for row in rows:
        writer.writerow([format_value(row[c]) for c in columns])
        count += 1
    return count


def render_csv(rows: Iterable[Mapping[str, Any]], columns: Sequence[str]) -> str:
    """CSV text for rows, see write_csv."""
    buf = io.StringIO()
    write_csv(rows, columns, buf)
    return buf.getvalue()


def emit(text: str, out_path: str | Path | None = None) -> None:
    """Write text to a file, or to standard output when no path is given."""
    if out_path is None:
        sys.stdout.write(text)
        return
    path = Path(out_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    logger.info(f"Wrote {path}")
