"""Frame construction and hop-channel planning."""

from .hopping import DEFAULT_CHANNELS, HopGrid, generate_hop_sequence, xorshift64star
from .frame import (
    BLOCK_COLUMNS,
    Block,
    BlockKind,
    FramePlan,
    build_frame_plan,
    check_payload_len,
    encoded_payload_bits,
    fragment_bits,
    fragment_count,
)

__all__ = [
    "DEFAULT_CHANNELS",
    "HopGrid",
    "generate_hop_sequence",
    "xorshift64star",
    "BLOCK_COLUMNS",
    "Block",
    "BlockKind",
    "FramePlan",
    "build_frame_plan",
    "check_payload_len",
    "encoded_payload_bits",
    "fragment_bits",
    "fragment_count",
]
