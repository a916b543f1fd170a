"""Seeded 64-bit xorshift PRNG.

The generator state is a nonzero 64-bit integer x, updated by

    x ^= (x << 13) mod 2^64
    x ^= (x >> 7)
    x ^= (x << 17) mod 2^64

and each update yields the new state.  The algorithm is fixed here by its
update equations so that seeds reproduce identical corpora across
implementations and languages.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1


class XorShift64:
    """Deterministic stream of 64-bit values from a seed."""

    def __init__(self, seed: int):
        self.state = (seed & _MASK) or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        x = self.state
        x ^= (x << 13) & _MASK
        x ^= x >> 7
        x ^= (x << 17) & _MASK
        self.state = x
        return x

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi], inclusive."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.next_u64() % (hi - lo + 1)
