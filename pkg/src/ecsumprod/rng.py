"""Deterministic 64-bit generator (SplitMix64) behind every seeded draw.

The stream is pinned by its constants so any language can reproduce it
bit-for-bit:

    state   = (state + 0x9E3779B97F4A7C15) mod 2^64
    z       = state
    z       = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
    z       = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2^64
    output  = z ^ (z >> 31)

Bounded draws use plain rejection sampling (see SplitMix64.below), which is
also bit-exact across ports.
"""

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """The SplitMix64 output mix of a 64-bit word."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """Tiny seeded generator; one instance per independent sampling task."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GAMMA) & MASK64
        return mix64(self.state)

    def below(self, n: int) -> int:
        """Uniform draw from [0, n).

        Rejection rule: discard 64-bit outputs >= floor(2^64 / n) * n, then
        reduce mod n. No modulo bias, no floating point.
        """
        if n <= 0:
            raise ValueError("below() needs n >= 1")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % n


def derive_seed(master: int, *labels: int) -> int:
    """Stable sub-seed from a master seed and integer labels.

    Defined as state = mix64(master), then for each label
    state = mix64(state ^ mix64(label + GAMMA)). Equal inputs always give
    equal sub-seeds, so derived streams never depend on evaluation order.
    """
    state = mix64(master & MASK64)
    for label in labels:
        state = mix64(state ^ mix64((label + GAMMA) & MASK64))
    return state
