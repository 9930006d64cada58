"""Tests for core data models."""

from fractions import Fraction

import pytest

from lrfhss_toolkit.core.models import (
    PHY,
    DataRate,
    DataRateProfile,
    DataRateNotFoundError,
    PayloadRangeError,
    CalibrationError,
    LrFhssError,
    RadioState,
    UnsupportedCodeRateError,
)


def test_header_duration():
    """T_H = 114 bits at 488.28125 bit/s."""
    assert PHY.header_duration == pytest.approx(233.472, abs=1e-9)


def test_fragment_duration_counts_preamble():
    assert PHY.fragment_bits == 50
    assert PHY.fragment_duration == pytest.approx(102.4, abs=1e-9)


def test_bit_duration():
    assert PHY.bits_to_ms(1) == pytest.approx(2.048, abs=1e-12)


@pytest.mark.parametrize("label,expected", [
    ("DR8", DataRate.DR8),
    ("dr9", DataRate.DR9),
    ("DR5US", DataRate.DR5_US),
    ("dr6_us", DataRate.DR6_US),
    (DataRate.DR11, DataRate.DR11),
])
def test_data_rate_parse(label, expected):
    assert DataRate.parse(label) is expected


def test_data_rate_parse_unknown():
    with pytest.raises(DataRateNotFoundError) as exc_info:
        DataRate.parse("DR7")
    assert "Unknown data rate" in str(exc_info.value)


def test_data_rate_aliases():
    assert DataRate.DR10.canonical is DataRate.DR8
    assert DataRate.DR5_US.canonical is DataRate.DR8
    assert DataRate.DR11.canonical is DataRate.DR9
    assert DataRate.DR6_US.canonical is DataRate.DR9
    assert DataRate.DR8.canonical is DataRate.DR8


def test_profile_creation():
    profile = DataRateProfile(id=DataRate.DR8, code_rate=Fraction(1, 3), header_replicas=3)
    assert profile.code_rate == Fraction(1, 3)
    assert profile.to_dict() == {"id": "DR8", "code_rate": "1/3", "header_replicas": 3}


@pytest.mark.parametrize("code_rate", [Fraction(1, 2), Fraction(5, 6)])
def test_reserved_code_rates_rejected(code_rate):
    with pytest.raises(UnsupportedCodeRateError) as exc_info:
        DataRateProfile(id=DataRate.DR8, code_rate=code_rate, header_replicas=3)
    assert "reserved" in str(exc_info.value)


def test_code_rate_must_match_data_rate():
    with pytest.raises(UnsupportedCodeRateError):
        DataRateProfile(id=DataRate.DR9, code_rate=Fraction(1, 3), header_replicas=3)


def test_header_replicas_follow_code_rate():
    with pytest.raises(UnsupportedCodeRateError, match="header replicas"):
        DataRateProfile(id=DataRate.DR9, code_rate=Fraction(2, 3), header_replicas=3)


def test_profile_is_immutable():
    profile = DataRateProfile(id=DataRate.DR9, code_rate=Fraction(2, 3), header_replicas=2)
    with pytest.raises(AttributeError):
        profile.header_replicas = 3


def test_radio_state_order():
    assert [s.value for s in RadioState] == list(range(1, 9))
    assert RadioState.STANDBY_FINAL.label == "standby_final"


def test_error_hierarchy():
    assert issubclass(PayloadRangeError, LrFhssError)
    assert issubclass(PayloadRangeError, ValueError)

    err = CalibrationError("currents must be positive (got 0.0)", "states.sleep.current_ma")
    assert str(err) == "states.sleep.current_ma: currents must be positive (got 0.0)"
    assert err.field == "states.sleep.current_ma"
    assert err.reason == "currents must be positive (got 0.0)"
