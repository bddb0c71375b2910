"""n-of-n XOR secret splitting (key escrow as taught in the campaign)."""
from __future__ import annotations

import random


def xor_split(secret: bytes, n: int, seed: int) -> list[bytes]:
    """Split into n shares: n-1 seeded random shares plus one balancing share."""
    if n < 2:
        raise ValueError("need at least two shares")
    rng = random.Random(seed)
    shares = [bytes(rng.randrange(256) for _ in range(len(secret))) for _ in range(n - 1)]
    last = bytearray(secret)
    for share in shares:
        for i, b in enumerate(share):
            last[i] ^= b
    shares.append(bytes(last))
    return shares


def xor_combine(shares: list[bytes]) -> bytes:
    if not shares:
        raise ValueError("no shares to combine")
    length = len(shares[0])
    if any(len(s) != length for s in shares):
        raise ValueError("shares must all have the same length")
    out = bytearray(length)
    for share in shares:
        for i, b in enumerate(share):
            out[i] ^= b
    return bytes(out)
