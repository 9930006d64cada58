"""
Time-on-Air models.

`toa_proposed` counts every coded bit (headers, coded payload with CRC and
overhead, one preamble per fragment) at the instantaneous bit rate and adds
one transition time per hop change. `toa_model_i` and `toa_model_ii` are the
two earlier closed forms, reproduced as published, including their biases.
All durations are in milliseconds.
"""

import logging
from fractions import Fraction

from ..core.models import DEFAULT_TRANSITION_TIME_MS, PHY, DataRateProfile
from ..framing.frame import FramePlan, check_payload_len, encoded_payload_bits, fragment_count

logger = logging.getLogger(__name__)


def _check_transition_time(transition_time: float) -> None:
    if transition_time < 0:
        raise ValueError(f"Transition time must be non-negative, got {transition_time} ms")


def transition_count(payload_len: int, dr: DataRateProfile) -> int:
    """Number of hop changes N_T = N_H + N_F - 1."""
    return dr.header_replicas + fragment_count(payload_len, dr) - 1


def total_bits(payload_len: int, dr: DataRateProfile) -> int:
    """All coded bits P_B of a packet."""
    n_fragments = fragment_count(payload_len, dr)
    payload_bits = encoded_payload_bits(payload_len, dr) + PHY.preamble_bits_per_fragment * n_fragments
    return PHY.header_bits * dr.header_replicas + payload_bits


def toa_proposed(
    payload_len: int,
    dr: DataRateProfile,
    transition_time: float = DEFAULT_TRANSITION_TIME_MS,
) -> float:
    """
    Time-on-Air of one packet: P_B / R_b + T_T N_T.

    Args:
        payload_len: Physical-layer payload L in bytes (1..255)
        dr: Data-rate profile
        transition_time: Inter-hop transition time T_T in ms

    Raises:
        PayloadRangeError: If payload_len is out of range
        ValueError: If transition_time is negative
    """
    _check_transition_time(transition_time)
    bits = total_bits(payload_len, dr)
    toa = PHY.bits_to_ms(bits) + transition_time * transition_count(payload_len, dr)
    logger.debug(f"ToA proposed L={payload_len} {dr.id.value} T_T={transition_time}: {toa:.6f} ms")
    return toa


def model_i_divisor(dr: DataRateProfile) -> int:
    """Payload bytes per fragment M assumed by Model I (2 for CR 1/3, 4 for CR 2/3)."""
    return 2 if dr.code_rate == Fraction(1, 3) else 4


def toa_model_i(payload_len: int, dr: DataRateProfile) -> float:
    """
    Model I: N_H T_H + T_P ceil((L + 3) / M).

    Every fragment is assumed to last the full T_P = 102.4 ms, which makes the
    result a staircase in L.
    """
    check_payload_len(payload_len)
    m = model_i_divisor(dr)
    n_fragments = -(-(payload_len + 3) // m)
    return dr.header_replicas * PHY.header_duration + PHY.fragment_duration * n_fragments


def model_ii_fragments(payload_len: int, dr: DataRateProfile) -> Fraction:
    """Fractional fragment count N_PL = (L + P_CRC) / (6 CR) of Model II."""
    check_payload_len(payload_len)
    return Fraction(payload_len + PHY.crc_bytes) / (6 * dr.code_rate)


def toa_model_ii(payload_len: int, dr: DataRateProfile) -> float:
    """
    Model II: N_H T_H + N_PL T_P.

    N_PL is left fractional, so the last fragment is shortened pro rata; the
    overhead bits, preambles and transitions are not counted.
    """
    n_fragments = model_ii_fragments(payload_len, dr)
    return dr.header_replicas * PHY.header_duration + float(n_fragments) * PHY.fragment_duration


def toa_from_frame_plan(plan: FramePlan, transition_time: float = DEFAULT_TRANSITION_TIME_MS) -> float:
    """
    Time-on-Air summed block by block from a frame plan.

    Used to cross-check `toa_proposed`: sum of block durations plus one
    transition time per hop change.
    """
    _check_transition_time(transition_time)
    return sum(block.duration for block in plan.blocks) + transition_time * plan.transitions
