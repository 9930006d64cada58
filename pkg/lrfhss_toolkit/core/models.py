"""Core data models for the LR-FHSS toolkit."""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any


class DataRate(Enum):
    """LoRaWAN data-rate labels that select LR-FHSS modulation."""
    DR8 = "DR8"
    DR9 = "DR9"
    DR10 = "DR10"
    DR11 = "DR11"
    DR5_US = "DR5_US"
    DR6_US = "DR6_US"

    @classmethod
    def parse(cls, label: "str | DataRate") -> "DataRate":
        """
        Parse a data-rate label.

        Accepts the enum value itself, "DR5_US" or the CLI spelling "DR5US",
        case-insensitively.

        Raises:
            DataRateNotFoundError: If the label names no LR-FHSS data rate
        """
        if isinstance(label, cls):
            return label
        key = str(label).strip().upper().replace("-", "_")
        if key.endswith("US") and not key.endswith("_US"):
            key = key[:-2] + "_US"
        try:
            return cls(key)
        except ValueError:
            raise DataRateNotFoundError(
                f"Unknown data rate '{label}'. "
                f"Supported: {', '.join(dr.value for dr in cls)}"
            ) from None

    @property
    def canonical(self) -> "DataRate":
        """The ETSI DR8/DR9 label this data rate is an alias of."""
        return DR_ALIASES.get(self, self)


DR_ALIASES: dict[DataRate, DataRate] = {
    DataRate.DR10: DataRate.DR8,
    DataRate.DR5_US: DataRate.DR8,
    DataRate.DR11: DataRate.DR9,
    DataRate.DR6_US: DataRate.DR9,
}

SUPPORTED_CODE_RATES = (Fraction(1, 3), Fraction(2, 3))
RESERVED_CODE_RATES = (Fraction(1, 2), Fraction(5, 6))

# Header-replica count each supported code rate implies.
HEADER_REPLICAS = {Fraction(1, 3): 3, Fraction(2, 3): 2}


@dataclass(frozen=True)
class DataRateProfile:
    """Code rate and header-replica count of an LR-FHSS data rate."""
    id: DataRate
    code_rate: Fraction
    header_replicas: int

    def __post_init__(self):
        code_rate = Fraction(self.code_rate)
        object.__setattr__(self, "code_rate", code_rate)

        if code_rate in RESERVED_CODE_RATES:
            raise UnsupportedCodeRateError(
                f"Code rate {code_rate} is reserved and not supported by LoRaWAN LR-FHSS"
            )
        if code_rate not in SUPPORTED_CODE_RATES:
            raise UnsupportedCodeRateError(f"Code rate {code_rate} is not an LR-FHSS code rate")

        expected_cr = SUPPORTED_CODE_RATES[0] if self.id.canonical is DataRate.DR8 else SUPPORTED_CODE_RATES[1]
        if code_rate != expected_cr:
            raise UnsupportedCodeRateError(
                f"{self.id.value} implies code rate {expected_cr}, got {code_rate}"
            )
        if self.header_replicas != HEADER_REPLICAS[code_rate]:
            raise UnsupportedCodeRateError(
                f"{self.id.value} implies {HEADER_REPLICAS[code_rate]} header replicas, "
                f"got {self.header_replicas}"
            )

    @property
    def canonical(self) -> DataRate:
        return self.id.canonical

    def to_dict(self) -> dict[str, Any]:
        """Convert the profile to a dictionary."""
        return {
            "id": self.id.value,
            "code_rate": str(self.code_rate),
            "header_replicas": self.header_replicas,
        }


@dataclass(frozen=True)
class PhyConstants:
    """
    Physical-layer constants of LR-FHSS with BT = 1.

    Durations are in milliseconds. A fragment carries 48 coded payload bits
    plus a 2-bit preamble; the fragment duration counts all 50 bits.
    """
    bit_rate: float = 488.28125
    header_bits: int = 114
    fragment_payload_bits: int = 48
    preamble_bits_per_fragment: int = 2
    crc_bytes: int = 2
    overhead_bits: int = 6
    min_payload_bytes: int = 1
    max_payload_bytes: int = 255

    @property
    def fragment_bits(self) -> int:
        return self.fragment_payload_bits + self.preamble_bits_per_fragment

    def bits_to_ms(self, bits: float) -> float:
        """Duration of `bits` coded bits on air, in milliseconds."""
        return bits * 1000.0 / self.bit_rate

    @property
    def header_duration(self) -> float:
        """T_H in milliseconds (233.472 ms)."""
        return self.bits_to_ms(self.header_bits)

    @property
    def fragment_duration(self) -> float:
        """T_P in milliseconds (102.4 ms)."""
        return self.bits_to_ms(self.fragment_bits)


PHY = PhyConstants()

# Measured inter-hop transition time of the LR1120, in ms.
DEFAULT_TRANSITION_TIME_MS = 0.61


class RadioState(Enum):
    """Transmission states of the radio, numbered in the order they occur."""
    WAKE_UP = 1
    STANDBY = 2
    FS = 3
    RADIO_PREPARE = 4
    TRANSMISSION = 5
    RADIO_OFF = 6
    STANDBY_FINAL = 7
    SLEEP = 8

    @property
    def label(self) -> str:
        return self.name.lower()


class Amplifier(Enum):
    """Power amplifier used for a transmit-power setting."""
    LPA = "LPA"
    HPA = "HPA"


@dataclass(frozen=True)
class TxCurrentPoint:
    """One measured point of transmission current versus transmit power."""
    p_tx_dbm: float
    dr: DataRate
    i_tx_ma: float
    pa: Amplifier

    def to_dict(self) -> dict[str, Any]:
        return {
            "p_tx_dbm": self.p_tx_dbm,
            "dr": self.dr.value,
            "i_tx_ma": self.i_tx_ma,
            "pa": self.pa.value,
        }


@dataclass(frozen=True)
class StateParams:
    """Duration and current of a fixed-length radio state."""
    duration_ms: float
    current_ma: float


@dataclass(frozen=True)
class RadioCalibration:
    """
    Measured per-state durations and currents of an LR-FHSS radio.

    Duration curves map payload bytes to milliseconds; the tx current curve
    maps transmit power to milliamperes per data rate and amplifier. Use
    `lrfhss_toolkit.core.config_store.load_calibration` to build a validated
    instance from a calibration document.
    """
    wake_up: StateParams
    standby_current: float
    standby_final_duration: float
    fs_current: float
    radio_prepare: StateParams
    radio_off: StateParams
    sleep_current: float
    transition_time: float
    tx_current_curve: tuple[TxCurrentPoint, ...]
    standby_duration_curve: tuple[tuple[float, float], ...]
    fs_duration_curve: tuple[tuple[float, float], ...]
    pa_switch_threshold: float = 14.0
    description: str = ""
    schema_version: int = 1

    @property
    def is_placeholder(self) -> bool:
        """True when the document labels itself as placeholder data."""
        return "placeholder" in self.description.lower()


class LrFhssError(Exception):
    """Base class for all toolkit errors."""
    pass


class DataRateNotFoundError(LrFhssError):
    """Raised when a data-rate label is not known."""
    pass


class UnsupportedCodeRateError(LrFhssError):
    """Raised for reserved or unknown code rates."""
    pass


class PayloadRangeError(LrFhssError, ValueError):
    """Raised when a payload length is outside 1..255 bytes."""
    pass


class CalibrationError(LrFhssError):
    """Raised when a calibration document cannot be loaded or is invalid."""

    def __init__(self, message: str, field: str | None = None):
        super().__init__(f"{field}: {message}" if field else message)
        self.field = field
        self.reason = message


class ExtrapolationError(LrFhssError):
    """Raised when a query falls outside a calibrated span."""
    pass


class MissingCalibrationError(LrFhssError):
    """Raised when no calibration points exist for a data rate."""
    pass


class InfeasiblePeriodError(LrFhssError):
    """Raised when the notification period is shorter than the active time."""
    pass

