"""Deterministic 64-bit PRNG (splitmix64) for reproducible instance generation.

Every random draw in this package flows through :class:`RngStream` so that a
given seed produces bit-identical results on any platform.  The generator is
splitmix64: the state advances by the 64-bit golden-ratio constant and the
output is the mixed state.  Unit-interval draws take the top 53 bits of the
output divided by 2**53, giving a double in [0, 1).
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK
    return z ^ (z >> 31)


def splitmix64(x: int) -> int:
    """One splitmix64 step from state ``x``: the first output of a stream seeded there."""
    return _mix((x + _GOLDEN) & _MASK)


def derive_seed(base_seed: int, ordinal: int) -> int:
    """Per-instance seed: splitmix64 of (base_seed XOR ordinal)."""
    return splitmix64((base_seed ^ ordinal) & _MASK)


class RngStream:
    """A single-owner splitmix64 stream.  Never share one between consumers."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK
        return _mix(self.state)

    def next_unit(self) -> float:
        """Uniform double in [0, 1): top 53 bits of the next output over 2**53."""
        return (self.next_u64() >> 11) * 2.0**-53
