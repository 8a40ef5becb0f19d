"""Deterministic random number generation for reproducible datasets.

Every random decision in the package flows through :class:`Rng`, a
counter-based SplitMix64 generator implemented in pure integer arithmetic.
Identical seeds therefore produce identical draw sequences on every
platform and Python version, which is what makes generated datasets
byte-reproducible.

Algorithm (SplitMix64): the state advances by the 64-bit odd constant
0x9E3779B97F4A7C15 per draw; the output is the advanced state passed
through two xor-multiply finalization rounds (constants 0xBF58476D1CE4E5B9
and 0x94D049BB133111EB) and a final 31-bit xor-shift.
"""

from __future__ import annotations

import hashlib

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def _mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
    return z ^ (z >> 31)


def _key_to_int(key: int | str) -> int:
    if isinstance(key, int):
        return key & _MASK64
    digest = hashlib.blake2b(key.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "big")


class Rng:
    """Seeded SplitMix64 stream with cheap derived child streams."""

    def __init__(self, seed: int):
        self.seed = seed & _MASK64
        self._state = self.seed

    def next_u64(self) -> int:
        """Next raw 64-bit draw."""
        self._state = (self._state + _GOLDEN) & _MASK64
        return _mix64(self._state)

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) / float(1 << 53)

    def randbelow(self, n: int) -> int:
        """Uniform integer in [0, n). Modulo reduction; bias is negligible
        for the small ranges used here and keeps the draw sequence simple
        to document and replay."""
        if n <= 0:
            raise ValueError(f"randbelow() requires n >= 1, got {n}")
        return self.next_u64() % n

    def randint(self, a: int, b: int) -> int:
        """Uniform integer in [a, b], both ends inclusive."""
        if b < a:
            raise ValueError(f"empty range [{a}, {b}]")
        return a + self.randbelow(b - a + 1)

    def uniform(self, a: float, b: float) -> float:
        return a + (b - a) * self.random()

    def choice(self, seq):
        if not seq:
            raise ValueError("choice() from empty sequence")
        return seq[self.randbelow(len(seq))]

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randbelow(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample(self, seq, k: int) -> list:
        """k distinct elements, order randomized."""
        if k > len(seq):
            raise ValueError(f"sample size {k} exceeds population {len(seq)}")
        pool = list(seq)
        self.shuffle(pool)
        return pool[:k]

    def derive(self, *keys: int | str) -> "Rng":
        """Independent child stream keyed off this stream's original seed.

        Derivation depends only on (seed, keys), never on how many draws
        the parent has made, so parallel consumers can derive identical
        substreams regardless of evaluation order.
        """
        h = self.seed
        for key in keys:
            h = _mix64((h ^ _key_to_int(key)) + _GOLDEN & _MASK64)
        return Rng(h)
