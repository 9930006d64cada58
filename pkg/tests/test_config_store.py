"""Tests for calibration persistence and output writers."""

import io
import json

import pytest

from lrfhss_toolkit.core.config_store import (
    CALIBRATION_ENV_VAR,
    calibration_from_dict,
    default_calibration_path,
    format_value,
    load_calibration,
    load_calibration_file,
    render_csv,
    resolve_calibration_path,
    save_calibration,
    serialize_calibration,
    write_csv,
)
from lrfhss_toolkit.core.models import CalibrationError


def test_bundled_calibration_has_state_table(no_cal_env):
    cal = load_calibration_file()
    assert cal.radio_prepare.duration_ms == 99.67
    assert cal.radio_prepare.current_ma == 2.968
    assert cal.wake_up.duration_ms == 0.4301
    assert cal.sleep_current == 0.053
    assert cal.transition_time == 0.61
    assert cal.is_placeholder


def test_bundled_calibration_warns_placeholder(no_cal_env, caplog):
    load_calibration_file()
    assert "placeholder" in caplog.text


def test_load_from_text(calibration_document):
    cal = load_calibration(json.dumps(calibration_document))
    assert cal.standby_current == 1.229
    assert len(cal.tx_current_curve) == 9
    assert cal.pa_switch_threshold == 14.0
    assert not cal.is_placeholder


def test_zero_sleep_current_rejected(calibration_document):
    calibration_document["states"]["sleep"]["current_ma"] = 0
    with pytest.raises(CalibrationError) as exc_info:
        calibration_from_dict(calibration_document)
    assert "currents must be positive" in str(exc_info.value)
    assert exc_info.value.field == "states.sleep.current_ma"


def test_unknown_key_rejected(calibration_document):
    calibration_document["states"]["wake_up"]["voltage_v"] = 3.3
    with pytest.raises(CalibrationError) as exc_info:
        calibration_from_dict(calibration_document)
    assert "voltage_v" in str(exc_info.value)
    assert exc_info.value.field == "states.wake_up"


def test_missing_field_named(calibration_document):
    del calibration_document["states"]["radio_off"]["duration_ms"]
    with pytest.raises(CalibrationError) as exc_info:
        calibration_from_dict(calibration_document)
    assert exc_info.value.field == "states.radio_off.duration_ms"
    assert "missing" in str(exc_info.value)


def test_missing_top_level_field(calibration_document):
    del calibration_document["transition_time_ms"]
    with pytest.raises(CalibrationError) as exc_info:
        calibration_from_dict(calibration_document)
    assert exc_info.value.field == "transition_time_ms"


@pytest.mark.parametrize("version", [2, True, 1.0, "1"])
def test_wrong_schema_version(calibration_document, version):
    calibration_document["schema_version"] = version
    with pytest.raises(CalibrationError) as exc_info:
        calibration_from_dict(calibration_document)
    assert exc_info.value.field == "schema_version"


def test_boolean_is_not_a_number(calibration_document):
    calibration_document["states"]["fs"]["current_ma"] = True
    with pytest.raises(CalibrationError) as exc_info:
        calibration_from_dict(calibration_document)
    assert exc_info.value.field == "states.fs.current_ma"


@pytest.mark.parametrize("path,value", [
    (("states", "radio_prepare", "duration_ms"), float("nan")),
    (("states", "wake_up", "current_ma"), float("inf")),
    (("transition_time_ms",), float("inf")),
    (("pa_switch_threshold_dbm",), float("-inf")),
])
def test_non_finite_number_rejected(calibration_document, path, value):
    *parents, key = path
    target = calibration_document
    for name in parents:
        target = target[name]
    target[key] = value
    with pytest.raises(CalibrationError) as exc_info:
        load_calibration(json.dumps(calibration_document))
    assert exc_info.value.field == ".".join(path)
    assert "finite" in str(exc_info.value)


def test_non_finite_curve_point_rejected(calibration_document):
    calibration_document["states"]["fs"]["curve"] = [[1, float("nan")], [255, 2.0]]
    with pytest.raises(CalibrationError) as exc_info:
        load_calibration(json.dumps(calibration_document))
    assert exc_info.value.field.startswith("states.fs.curve")


def test_bad_amplifier_tag(calibration_document):
    calibration_document["tx_current"][0]["pa"] = "MPA"
    with pytest.raises(CalibrationError) as exc_info:
        calibration_from_dict(calibration_document)
    assert exc_info.value.field == "tx_current[0].pa"


def test_invalid_json():
    with pytest.raises(CalibrationError) as exc_info:
        load_calibration("{not json")
    assert "Invalid JSON" in str(exc_info.value)


def test_serialize_round_trip(cal):
    assert calibration_from_dict(serialize_calibration(cal)) == cal


def test_save_and_load_file(cal, tmp_path):
    path = save_calibration(cal, tmp_path / "nested" / "cal.json")
    assert path.exists()
    assert load_calibration_file(path) == cal


def test_file_not_found(tmp_path):
    with pytest.raises(CalibrationError) as exc_info:
        load_calibration_file(tmp_path / "missing.json")
    assert "not found" in str(exc_info.value)


def test_undecodable_file(tmp_path):
    path = tmp_path / "cal.json"
    path.write_bytes(b"\xff\xfe{}")
    with pytest.raises(CalibrationError) as exc_info:
        load_calibration_file(path)
    assert "Failed to read" in str(exc_info.value)


def test_resolution_order(tmp_path, monkeypatch):
    monkeypatch.delenv(CALIBRATION_ENV_VAR, raising=False)
    assert resolve_calibration_path() == default_calibration_path()

    env_file = tmp_path / "env.json"
    monkeypatch.setenv(CALIBRATION_ENV_VAR, str(env_file))
    assert resolve_calibration_path() == env_file

    explicit = tmp_path / "explicit.json"
    assert resolve_calibration_path(explicit) == explicit


def test_env_var_calibration_loaded(cal, tmp_path, monkeypatch):
    path = save_calibration(cal, tmp_path / "cal.json")
    monkeypatch.setenv(CALIBRATION_ENV_VAR, str(path))
    assert load_calibration_file() == cal


def test_format_value():
    assert format_value(1336.69) == "1336.690000"
    assert format_value(9) == "9"
    assert format_value("DR8") == "DR8"
    assert format_value(None) == ""


def test_write_csv():
    out = io.StringIO()
    rows = [{"a": 1, "b": 0.5}, {"a": 2, "b": None}]
    count = write_csv(rows, ["a", "b"], out)
    assert count == 2
    assert out.getvalue() == "a,b\n1,0.500000\n2,\n"


def test_render_csv_header_only():
    assert render_csv([], ["x", "y"]) == "x,y\n"
