"""Deterministic pseudo-random numbers: splitmix64-seeded xoshiro256++.

Both generators follow the public-domain reference code by Blackman and
Vigna (https://prng.di.unimi.it/) bit for bit, so streams reproduce
across implementations and languages.  Doubles in [0, 1) take the top 53
bits of each 64-bit output.
"""

_MASK64 = (1 << 64) - 1
_TO_DOUBLE = 1.0 / (1 << 53)


def splitmix64(state):
    """One splitmix64 step; returns (output, next_state)."""
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31), state


class Xoshiro256PP:
    """xoshiro256++ with its 256-bit state filled by splitmix64(seed)."""

    __slots__ = ("s0", "s1", "s2", "s3")

    def __init__(self, seed):
        if not 0 <= seed <= _MASK64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed!r}")
        sm = seed
        self.s0, sm = splitmix64(sm)
        self.s1, sm = splitmix64(sm)
        self.s2, sm = splitmix64(sm)
        self.s3, sm = splitmix64(sm)

    def next_u64(self):
        s0 = self.s0
        s1 = self.s1
        s2 = self.s2
        s3 = self.s3
        x = (s0 + s3) & _MASK64
        result = ((((x << 23) & _MASK64) | (x >> 41)) + s0) & _MASK64
        t = (s1 << 17) & _MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        self.s0 = s0
        self.s1 = s1
        self.s2 = s2
        self.s3 = ((s3 << 45) & _MASK64) | (s3 >> 19)
        return result

    def next_float(self):
        """Next double in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * _TO_DOUBLE

    def state(self):
        return self.s0, self.s1, self.s2, self.s3
