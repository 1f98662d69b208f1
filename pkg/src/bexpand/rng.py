"""SplitMix64: the single pseudo-random stream behind every ``--seed``.

The generator is fully defined by its recurrence, so any implementation can
reproduce the same draws (all arithmetic modulo 2**64)::

    state <- state + 0x9E3779B97F4A7C15
    z <- state
    z <- (z xor (z >> 30)) * 0xBF58476D1CE4E5B9
    z <- (z xor (z >> 27)) * 0x94D049BB133111EB
    output z xor (z >> 31)

Derived draws:

* ``below(k)``: draw x, reject while ``x < (2**64 mod k)``, return ``x mod k``.
* ``random()``: ``(x >> 11) * 2**-53``, a float in [0, 1).
* ``shuffle(seq)``: Fisher-Yates from the last index down, ``j = below(i + 1)``.
"""
from __future__ import annotations

from typing import MutableSequence, TypeVar

T = TypeVar("T")

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed: int = 0):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        if k <= 0:
            raise ValueError("below() needs a positive bound")
        threshold = (1 << 64) % k
        while True:
            x = self.next_u64()
            if x >= threshold:
                return x % k

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def shuffle(self, seq: MutableSequence[T]) -> None:
        for i in range(len(seq) - 1, 0, -1):
            j = self.below(i + 1)
            seq[i], seq[j] = seq[j], seq[i]
