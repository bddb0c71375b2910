"""Toy 32-bit Merkle-Damgard hash and an avalanche measurement helper.

Compression, per input byte b:

    state <- rotl32(state ^ (b * 0x045D9F3B mod 2^32), 7) + 0x9E3779B9 mod 2^32

starting from 0x811C9DC5, finalized by absorbing the message length in
bytes (mod 256) as one extra block.
"""
from __future__ import annotations

import random
from typing import Callable

_MASK32 = 0xFFFFFFFF
_INIT = 0x811C9DC5
_MULT = 0x045D9F3B
_INCREMENT = 0x9E3779B9

# one 32-bit product per possible byte, precomputed for speed
_BYTE_MIX = tuple((b * _MULT) & _MASK32 for b in range(256))


def _compress(state: int, block: int) -> int:
    x = state ^ _BYTE_MIX[block]
    return ((((x << 7) | (x >> 25)) & _MASK32) + _INCREMENT) & _MASK32


def toy_hash(data: bytes) -> int:
    """32-bit digest of ``data``; deterministic, invertible by nobody, toy only."""
    state = _INIT
    for b in data:
        state = _compress(state, b)
    return _compress(state, len(data) % 256)


def hamming32(a: int, b: int) -> int:
    return ((a ^ b) & _MASK32).bit_count()


def avalanche_score(
    n_samples: int,
    input_len: int,
    seed: int,
    hash_fn: Callable[[bytes], int] = toy_hash,
) -> float:
    """Mean digest bit flips when one random input bit flips, over seeded samples."""
    if n_samples < 1:
        raise ValueError("n_samples must be at least 1")
    if input_len < 1:
        raise ValueError("input_len must be at least 1")
    rng = random.Random(seed)
    total = 0
    for _ in range(n_samples):
        data = bytearray(rng.randrange(256) for _ in range(input_len))
        before = hash_fn(bytes(data))
        bit = rng.randrange(input_len * 8)
        data[bit // 8] ^= 1 << (bit % 8)
        total += hamming32(before, hash_fn(bytes(data)))
    return total / n_samples
