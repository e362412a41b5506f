"""Deterministic counter-based random streams.

Every stochastic element of the framework (crit rolls, scripted-policy
decisions, episode seeds) draws from its own :class:`Stream`, keyed by a tuple
of integers. A stream's i-th value is a pure function of (key, i), so streams
never perturb one another and any draw can be replayed from its key alone.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _splitmix64(z: int) -> int:
    z = (z + _GOLDEN) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def mix(*parts: int) -> int:
    """Hash a tuple of integers into a 64-bit stream key."""
    h = 0x8BADF00D5EEDC0DE
    for p in parts:
        h = _splitmix64(h ^ (p & _MASK64))
    return h


class Stream:
    """Counter-based RNG; cheap to fork and fully reproducible."""

    __slots__ = ("key", "counter")

    def __init__(self, *parts: int):
        self.key = mix(*parts)
        self.counter = 0

    def next_u64(self) -> int:
        v = _splitmix64(self.key ^ _splitmix64(self.counter))
        self.counter += 1
        return v

    def uniform(self) -> float:
        # 53 mantissa bits -> uniform in [0, 1)
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def randint(self, n: int) -> int:
        """Uniform integer in [0, n). Modulo bias is < 2**-50 for desk-scale n."""
        if n <= 0:
            raise ValueError("randint bound must be positive")
        return self.next_u64() % n

    def choice(self, seq):
        return seq[self.randint(len(seq))]

    def fork(self, *parts: int) -> "Stream":
        s = Stream.__new__(Stream)
        s.key = mix(self.key, *parts)
        s.counter = 0
        return s
