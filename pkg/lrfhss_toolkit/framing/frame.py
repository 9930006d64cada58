"""
Frame construction: header replicas and FEC-sized payload fragments.

Bit accounting follows the LR-FHSS frame layout:

    P_L' = 8 (L + P_CRC) / CR + O_B      coded payload+CRC bits
    N_F  = ceil(P_L' / 48)               payload fragments
    P_L  = P_L' + P_b N_F                fragment bits including preambles
    P_B  = H_b N_H + P_L                 all coded bits of the packet
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Any

from ..core.models import PHY, DataRateProfile, PayloadRangeError
from .hopping import HopGrid, generate_hop_sequence

logger = logging.getLogger(__name__)

BLOCK_COLUMNS = ["index", "kind", "bits", "start_ms", "duration_ms", "channel"]


class BlockKind(Enum):
    """Kind of on-air block."""
    HEADER = "header"
    FRAGMENT = "fragment"


@dataclass(frozen=True)
class Block:
    """One hop: a header replica or a payload fragment."""
    kind: BlockKind
    bits: int
    duration: float
    channel: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind.value,
            "bits": self.bits,
            "duration_ms": self.duration,
            "channel": self.channel,
        }


@dataclass(frozen=True)
class FramePlan:
    """Ordered on-air blocks of one LR-FHSS packet."""
    dr: DataRateProfile
    payload_len: int
    encoded_payload_bits: int
    total_payload_bits: int
    total_bits: int
    fragments: int
    transitions: int
    blocks: tuple[Block, ...]
    seed: int
    n_channels: int

    @property
    def header_replicas(self) -> int:
        return self.dr.header_replicas

    def block_rows(self, transition_time: float = 0.0) -> list[dict[str, Any]]:
        """
        One row per block for CSV export.

        `start_ms` places each block after its predecessors and the
        `transition_time` gaps between them.
        """
        rows = []
        start = 0.0
        for idx, block in enumerate(self.blocks):
            rows.append({"index": idx, "start_ms": start, **block.to_dict()})
            start += block.duration + transition_time
        return rows

    def to_dict(self) -> dict[str, Any]:
        """Convert the plan to a JSON-ready dictionary."""
        return {
            "dr": self.dr.id.value,
            "code_rate": str(self.dr.code_rate),
            "header_replicas": self.header_replicas,
            "payload_len": self.payload_len,
            "encoded_payload_bits": self.encoded_payload_bits,
            "total_payload_bits": self.total_payload_bits,
            "total_bits": self.total_bits,
            "fragments": self.fragments,
            "transitions": self.transitions,
            "seed": self.seed,
            "n_channels": self.n_channels,
            "blocks": [b.to_dict() for b in self.blocks],
        }


def check_payload_len(payload_len: int) -> int:
    """
    Validate a physical-layer payload length.

    Raises:
        PayloadRangeError: If the length is not an integer in 1..255
    """
    if isinstance(payload_len, bool) or not isinstance(payload_len, int):
        raise PayloadRangeError(f"Payload length must be an integer, got {payload_len!r}")
    if not PHY.min_payload_bytes <= payload_len <= PHY.max_payload_bytes:
        raise PayloadRangeError(
            f"Payload length {payload_len} B is outside "
            f"{PHY.min_payload_bytes}..{PHY.max_payload_bytes} B"
        )
    return payload_len


def encoded_payload_bits(payload_len: int, dr: DataRateProfile) -> int:
    """Coded payload-plus-CRC bits P_L' after FEC, including overhead bits."""
    check_payload_len(payload_len)
    coded = 8 * (payload_len + PHY.crc_bytes) / dr.code_rate
    # Integral for the supported code rates; round up for any other.
    return math.ceil(coded) + PHY.overhead_bits


def fragment_count(payload_len: int, dr: DataRateProfile) -> int:
    """Number of payload fragments N_F."""
    return math.ceil(encoded_payload_bits(payload_len, dr) / PHY.fragment_payload_bits)


def fragment_bits(encoded_bits: int) -> list[int]:
    """
    Bit count of each fragment, preamble included.

    Every fragment carries 48 coded bits except the last, which carries the
    remainder (a full 48 when the remainder is zero).
    """
    n_fragments = math.ceil(encoded_bits / PHY.fragment_payload_bits)
    remainder = encoded_bits - (n_fragments - 1) * PHY.fragment_payload_bits
    bits = [PHY.fragment_bits] * (n_fragments - 1)
    bits.append(remainder + PHY.preamble_bits_per_fragment)
    return bits


def build_frame_plan(payload_len: int, dr: DataRateProfile, grid: HopGrid) -> FramePlan:
    """
    Lay out a packet as header replicas followed by payload fragments.

    Args:
        payload_len: Physical-layer payload L in bytes (1..255)
        dr: Data-rate profile (code rate and header replicas)
        grid: Hop grid used to assign channels

    Returns:
        FramePlan with per-block bits, durations and channels

    Raises:
        PayloadRangeError: If payload_len is out of range
    """
    encoded = encoded_payload_bits(payload_len, dr)
    frag_bits = fragment_bits(encoded)
    n_fragments = len(frag_bits)
    n_headers = dr.header_replicas

    kinds_bits = [(BlockKind.HEADER, PHY.header_bits)] * n_headers
    kinds_bits += [(BlockKind.FRAGMENT, bits) for bits in frag_bits]
    channels = generate_hop_sequence(len(kinds_bits), grid)

    blocks = tuple(
        Block(kind=kind, bits=bits, duration=PHY.bits_to_ms(bits), channel=channel)
        for (kind, bits), channel in zip(kinds_bits, channels)
    )

    total_payload_bits = encoded + PHY.preamble_bits_per_fragment * n_fragments
    plan = FramePlan(
        dr=dr,
        payload_len=payload_len,
        encoded_payload_bits=encoded,
        total_payload_bits=total_payload_bits,
        total_bits=PHY.header_bits * n_headers + total_payload_bits,
        fragments=n_fragments,
        transitions=n_headers + n_fragments - 1,
        blocks=blocks,
        seed=grid.seed,
        n_channels=grid.n_channels,
    )
    logger.debug(
        f"Frame plan L={payload_len} {dr.id.value}: N_H={n_headers} N_F={n_fragments} "
        f"P_B={plan.total_bits}"
    )
    return plan
