"""Portable seeded draws for exact Monte Carlo sampling.

The stream is numpy's PCG64 bit generator (128-bit LCG state, XSL-RR output
permutation). Only its raw 64-bit output is consumed: the raw stream is fixed
for a given seed, while numpy's distribution methods may change between
releases. Each draw keeps the top 53 bits, so a uniform variate is the exact
rational u / 2**53.
"""

from fractions import Fraction

import numpy as np

RESOLUTION_BITS = 53
RESOLUTION = 1 << RESOLUTION_BITS

_DISCARD_BITS = np.uint64(64 - RESOLUTION_BITS)


class RationalStream:
    """Buffered sequence of 53-bit draws from a seeded PCG64 generator.

    Example:
        stream = RationalStream(seed=42)
        u = stream.unit()        # Fraction in [0, 1)
        side = stream.choice(3)  # 0, 1 or 2
    """

    def __init__(self, seed: int, block_size: int = 8192) -> None:
        """Initialize the stream.

        Args:
            seed: Non-negative integer seed.
            block_size: Number of raw words fetched per refill.
        """
        if seed < 0:
            raise ValueError("seed must be non-negative")
        self._bit_generator = np.random.PCG64(seed)
        self._block_size = block_size
        self._buffer: list[int] = []
        self._position = 0

    def _refill(self) -> None:
        raw = self._bit_generator.random_raw(self._block_size)
        self._buffer = (raw >> _DISCARD_BITS).tolist()
        self._position = 0

    def next_bits(self) -> int:
        """Return the next integer in [0, 2**53)."""
        if self._position >= len(self._buffer):
            self._refill()
        value = self._buffer[self._position]
        self._position += 1
        return value

    def unit(self) -> Fraction:
        """Return the next uniform variate as an exact Fraction in [0, 1)."""
        return Fraction(self.next_bits(), RESOLUTION)

    def choice(self, k: int) -> int:
        """Return an index in [0, k) with probability 1/k up to 2**-53."""
        return (self.next_bits() * k) >> RESOLUTION_BITS

    def weighted_choice(self, weights: list[Fraction]) -> int:
        """Return index i with probability weights[i] (weights sum to 1)."""
        u = self.unit()
        cumulative = Fraction(0)
        for index, weight in enumerate(weights):
            cumulative += weight
            if u < cumulative:
                return index
        return len(weights) - 1
