"""8-bit LFSR keystream generator and XOR stream operations.

The register implements the primitive polynomial x^8+x^6+x^5+x^4+1 as a
Fibonacci LFSR: the output bit is the register LSB, the feedback bit
(parity of taps 8,6,5,4, i.e. state mask 0x71) enters at the MSB. Every
nonzero seed sits on the single maximal cycle of length 255.
"""
from __future__ import annotations

from dataclasses import dataclass

LFSR_WIDTH = 8
LFSR_TAPS = (8, 6, 5, 4)
_TAP_MASK = 0x71  # bits 6,5,4,0: recurrence a[t+8] = a[t+6]^a[t+5]^a[t+4]^a[t]


@dataclass(frozen=True)
class LfsrConfig:
    seed: int
    width: int = LFSR_WIDTH
    taps: tuple[int, ...] = LFSR_TAPS

    def __post_init__(self) -> None:
        if self.width != LFSR_WIDTH:
            raise ValueError("register width is fixed at 8 bits")
        if tuple(self.taps) != LFSR_TAPS:
            raise ValueError(f"taps are fixed to {LFSR_TAPS}")
        if not 0 < self.seed <= 0xFF:
            raise ValueError("seed must be a nonzero 8-bit value")


def lfsr_step(state: int) -> int:
    feedback = (state & _TAP_MASK).bit_count() & 1
    return (state >> 1) | (feedback << 7)


def lfsr_states(cfg: LfsrConfig, count: int) -> list[int]:
    """First ``count`` register states, starting with the seed itself."""
    states = []
    s = cfg.seed
    for _ in range(count):
        states.append(s)
        s = lfsr_step(s)
    return states


def lfsr_keystream(cfg: LfsrConfig, nbytes: int) -> bytes:
    """Collect 8 output bits (register LSB, MSB-first) per keystream byte."""
    if nbytes < 0:
        raise ValueError("nbytes must be nonnegative")
    s = cfg.seed
    out = bytearray()
    for _ in range(nbytes):
        b = 0
        for _ in range(8):
            b = (b << 1) | (s & 1)
            s = lfsr_step(s)
        out.append(b)
    return bytes(out)


def stream_xor(data: bytes, keystream: bytes) -> bytes:
    if len(keystream) < len(data):
        raise ValueError("keystream shorter than data")
    return bytes(d ^ k for d, k in zip(data, keystream))
