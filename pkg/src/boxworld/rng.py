"""Deterministic substreams for protocol simulation.

Every random draw in a protocol run comes from a stream keyed by the run's
64-bit seed plus a label (one per box, one per role), so trials are
reproducible bit for bit and independent of evaluation order.  Streams are
derived by hashing, so adding a box never shifts another box's draws.
"""

from __future__ import annotations

import hashlib
import random


def substream(seed: int, label: str) -> random.Random:
    digest = hashlib.sha256(f"{seed}:{label}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def bit(rng: random.Random) -> int:
    return rng.getrandbits(1)


def bits(rng: random.Random, n: int) -> tuple:
    return tuple(rng.getrandbits(1) for _ in range(n))
