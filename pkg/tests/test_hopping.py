"""Tests for hop sequence generation."""

import pytest

from lrfhss_toolkit.framing import HopGrid, generate_hop_sequence, xorshift64star


def test_single_block():
    channels = generate_hop_sequence(1, HopGrid(35, seed=7))
    assert len(channels) == 1
    assert 0 <= channels[0] < 35


def test_deterministic_for_seed():
    grid = HopGrid(35, seed=42)
    assert generate_hop_sequence(100, grid) == generate_hop_sequence(100, grid)


def test_seeds_give_different_sequences():
    a = generate_hop_sequence(50, HopGrid(35, seed=1))
    b = generate_hop_sequence(50, HopGrid(35, seed=2))
    assert a != b


def test_thousand_blocks_no_adjacent_repeats():
    channels = generate_hop_sequence(1000, HopGrid(35, seed=0))
    assert len(channels) == 1000
    assert all(c < 35 for c in channels)
    assert all(a != b for a, b in zip(channels, channels[1:]))


@pytest.mark.parametrize("n_channels", [2, 8, 35, 280])
@pytest.mark.parametrize("seed", [0, 1, 0xDEADBEEF, 2**64 - 1])
def test_sequence_properties(n_channels, seed):
    """Adjacency-distinct and in-range over 10^4 blocks."""
    channels = generate_hop_sequence(10_000, HopGrid(n_channels, seed=seed))
    assert all(0 <= c < n_channels for c in channels)
    assert all(a != b for a, b in zip(channels, channels[1:]))


def test_sequence_uses_whole_grid():
    channels = generate_hop_sequence(10_000, HopGrid(8, seed=3))
    assert set(channels) == set(range(8))


def test_zero_seed_stream_is_not_stuck():
    stream = xorshift64star(0)
    values = [next(stream) for _ in range(10)]
    assert len(set(values)) == 10
    assert all(0 <= v < 2**64 for v in values)


def test_grid_needs_two_channels():
    with pytest.raises(ValueError):
        HopGrid(1)


@pytest.mark.parametrize("seed", [-1, 2**64])
def test_seed_must_be_u64(seed):
    with pytest.raises(ValueError):
        HopGrid(35, seed=seed)


def test_zero_blocks_rejected():
    with pytest.raises(ValueError):
        generate_hop_sequence(0, HopGrid(35))
