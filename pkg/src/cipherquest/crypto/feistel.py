"""Toy 16-bit Feistel block cipher and CBC mode over 2-byte blocks.

Four rounds on 8-bit halves. Round function:

    F(R, K) = rotate_left8(((R ^ K) + 0x55) mod 256, 2)

Round i maps (L, R) -> (R, L ^ F(R, K_i)); decryption walks the subkeys
in reverse. Deliberately desk-scale: the whole 2^16 block space is
exhaustively checkable in testing.
"""
from __future__ import annotations

from dataclasses import dataclass

BLOCK_BYTES = 2


class InvalidPaddingError(ValueError):
    """CBC decryption produced a padding block that fails validation."""


@dataclass(frozen=True)
class FeistelKey:
    """32-bit master key; round subkeys are its four bytes, MSB first."""

    master: int

    def __post_init__(self) -> None:
        if not 0 <= self.master <= 0xFFFFFFFF:
            raise ValueError("master key must be a 32-bit unsigned integer")

    @property
    def round_subkeys(self) -> tuple[int, int, int, int]:
        m = self.master
        return ((m >> 24) & 0xFF, (m >> 16) & 0xFF, (m >> 8) & 0xFF, m & 0xFF)


def round_function(r: int, k: int) -> int:
    t = ((r ^ k) + 0x55) & 0xFF
    return ((t << 2) | (t >> 6)) & 0xFF


def _check_block(block: int) -> None:
    if not 0 <= block <= 0xFFFF:
        raise ValueError("block must be a 16-bit value")


def feistel_encrypt_block(block: int, key: FeistelKey) -> int:
    _check_block(block)
    left, right = block >> 8, block & 0xFF
    for k in key.round_subkeys:
        left, right = right, left ^ round_function(right, k)
    return (left << 8) | right


def feistel_decrypt_block(block: int, key: FeistelKey) -> int:
    _check_block(block)
    left, right = block >> 8, block & 0xFF
    for k in reversed(key.round_subkeys):
        left, right = right ^ round_function(left, k), left
    return (left << 8) | right


def _pad(data: bytes) -> bytes:
    pad = BLOCK_BYTES - (len(data) % BLOCK_BYTES)
    return data + bytes([pad]) * pad


def _unpad(data: bytes) -> bytes:
    if not data:
        raise InvalidPaddingError("empty plaintext has no padding block")
    pad = data[-1]
    if not 1 <= pad <= BLOCK_BYTES or data[-pad:] != bytes([pad]) * pad:
        raise InvalidPaddingError("invalid padding")
    return data[:-pad]


def cbc_encrypt(plaintext: bytes, key: FeistelKey, iv: int) -> bytes:
    _check_block(iv)
    data = _pad(plaintext)
    out = bytearray()
    prev = iv
    for i in range(0, len(data), BLOCK_BYTES):
        block = (data[i] << 8) | data[i + 1]
        c = feistel_encrypt_block(block ^ prev, key)
        out += c.to_bytes(BLOCK_BYTES, "big")
        prev = c
    return bytes(out)


def cbc_decrypt(ciphertext: bytes, key: FeistelKey, iv: int) -> bytes:
    _check_block(iv)
    if len(ciphertext) == 0 or len(ciphertext) % BLOCK_BYTES != 0:
        raise ValueError("ciphertext length must be a positive multiple of 2")
    out = bytearray()
    prev = iv
    for i in range(0, len(ciphertext), BLOCK_BYTES):
        c = (ciphertext[i] << 8) | ciphertext[i + 1]
        block = feistel_decrypt_block(c, key) ^ prev
        out += block.to_bytes(BLOCK_BYTES, "big")
        prev = c
    return _unpad(bytes(out))
