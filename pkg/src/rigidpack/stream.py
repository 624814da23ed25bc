"""Seeded randomness split into independent named streams.

Every randomized component takes (seed, stream id) rather than a bare RNG,
so trials parallelize without sharing state and identical inputs replay
bit-identically.  Seeding goes through the string path of random.Random,
which hashes with SHA-512 and is stable across platforms and processes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass


def stream_rng(seed: int, stream: int = 0) -> random.Random:
    """Fresh generator fully determined by (seed, stream)."""
    return random.Random(f"{seed}:{stream}")


@dataclass(frozen=True)
class SeededStream:
    """A (seed, stream id) pair; hand ``child(i)`` streams to sub-tasks."""

    seed: int
    stream: int = 0

    def rng(self) -> random.Random:
        return stream_rng(self.seed, self.stream)

    def child(self, index: int) -> "SeededStream":
        # disjoint fan-out: children of distinct (stream, index) never collide
        return SeededStream(self.seed, self.stream * 1_000_003 + index + 1)
