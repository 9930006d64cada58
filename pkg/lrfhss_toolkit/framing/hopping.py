"""
Deterministic intra-packet hop sequences.

This is a behavioural stand-in for the radio's pseudo-random hop selection:
consecutive blocks never share an OBW channel and a seed fully determines the
sequence. It does not reproduce the vendor hop-sequence algorithm.
"""

import logging
from dataclasses import dataclass
from typing import Iterator

logger = logging.getLogger(__name__)

_MASK64 = (1 << 64) - 1

# Illustrative grid size, not a regulatory value.
DEFAULT_CHANNELS = 35


@dataclass(frozen=True)
class HopGrid:
    """OBW channels available inside one OCW channel."""
    n_channels: int
    seed: int = 0

    def __post_init__(self):
        if self.n_channels < 2:
            raise ValueError(f"Hop grid needs at least 2 channels, got {self.n_channels}")
        if not 0 <= self.seed <= _MASK64:
            raise ValueError(f"Seed must be an unsigned 64-bit integer, got {self.seed}")


def _splitmix64(seed: int) -> int:
    z = (seed + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def xorshift64star(seed: int) -> Iterator[int]:
    """
    Endless xorshift64* stream of 64-bit values.

    The seed is scrambled with splitmix64 first so that 0 and small seeds
    still give a non-zero, well-mixed state.
    """
    state = _splitmix64(seed) or 0x9E3779B97F4A7C15
    while True:
        state ^= state >> 12
        state ^= (state << 25) & _MASK64
        state ^= state >> 27
        yield (state * 0x2545F4914F6CDD1D) & _MASK64


def generate_hop_sequence(n_blocks: int, grid: HopGrid) -> list[int]:
    """
    Assign an OBW channel index to each of `n_blocks` on-air blocks.

    Args:
        n_blocks: Number of blocks (headers plus fragments), at least 1
        grid: Channel count and generator seed

    Returns:
        Channel indices in [0, n_channels), no two consecutive equal

    Raises:
        ValueError: If n_blocks < 1
    """
    if n_blocks < 1:
        raise ValueError(f"n_blocks must be at least 1, got {n_blocks}")

    stream = xorshift64star(grid.seed)
    channels: list[int] = []
    previous = None
    while len(channels) < n_blocks:
        channel = next(stream) % grid.n_channels
        if channel == previous:
            continue
        channels.append(channel)
        previous = channel

    logger.debug(f"Generated {n_blocks} hops over {grid.n_channels} channels (seed={grid.seed})")
    return channels
