"""Deterministic substream derivation for reproducible experiments.

One root seed per run; every trial/qubit/party derives an independent
stream keyed by a path of labels, so results are bit-reproducible no
matter how the work is scheduled.
"""

from __future__ import annotations

import hashlib
import random


def substream(seed: int, *path) -> random.Random:
    """An independent ``random.Random`` keyed by (seed, *path)."""
    h = hashlib.blake2b(digest_size=16)
    h.update(str(int(seed)).encode())
    for part in path:
        h.update(b"/")
        h.update(str(part).encode())
    return random.Random(int.from_bytes(h.digest(), "big"))
