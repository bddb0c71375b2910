"""Classical pen-and-paper ciphers over the A-Z alphabet.

All functions here are strict about their input alphabet: uppercase
letters and spaces only. Normalization of free-form student text happens
at the puzzle layer, never here.
"""
from __future__ import annotations

from dataclasses import dataclass

ALPHABET = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
_INDEX = {c: i for i, c in enumerate(ALPHABET)}

MAX_COLUMNS = 12


def _check_text(text: str) -> None:
    for ch in text:
        if ch != " " and ch not in _INDEX:
            raise ValueError(f"unnormalized input: {ch!r} (expected A-Z or space)")


def caesar_shift(text: str, shift: int) -> str:
    """Rotate each letter by ``shift`` positions (mod 26); spaces pass through."""
    _check_text(text)
    s = shift % 26
    return "".join(" " if ch == " " else ALPHABET[(_INDEX[ch] + s) % 26] for ch in text)


@dataclass(frozen=True)
class SubstitutionKey:
    """A permutation of the alphabet; ``table[i]`` is the image of ALPHABET[i]."""

    table: str

    def __post_init__(self) -> None:
        if len(self.table) != 26 or sorted(self.table) != sorted(ALPHABET):
            raise ValueError("substitution key must be a permutation of A-Z")

    @classmethod
    def identity(cls) -> "SubstitutionKey":
        return cls(ALPHABET)

    @classmethod
    def from_shift(cls, shift: int) -> "SubstitutionKey":
        return cls(caesar_shift(ALPHABET, shift))

    def invert(self) -> "SubstitutionKey":
        inverse = [""] * 26
        for i, ch in enumerate(self.table):
            inverse[_INDEX[ch]] = ALPHABET[i]
        return SubstitutionKey("".join(inverse))


def substitution_apply(text: str, key: SubstitutionKey) -> str:
    _check_text(text)
    return "".join(" " if ch == " " else key.table[_INDEX[ch]] for ch in text)


def substitution_invert(key: SubstitutionKey) -> SubstitutionKey:
    return key.invert()


@dataclass(frozen=True)
class TranspositionKey:
    """Column read order for a columnar transposition; k columns, k <= 12."""

    column_order: tuple[int, ...]

    def __post_init__(self) -> None:
        k = len(self.column_order)
        if k == 0:
            raise ValueError("transposition key needs at least one column")
        if k > MAX_COLUMNS:
            raise ValueError(f"transposition key too wide (max {MAX_COLUMNS} columns)")
        if sorted(self.column_order) != list(range(k)):
            raise ValueError("column_order must be a permutation of 0..k-1")

    @property
    def columns(self) -> int:
        return len(self.column_order)


def transposition_encrypt(text: str, key: TranspositionKey) -> str:
    """Write row-wise into k columns, read columns in ``column_order``.

    Pads with 'X' up to a multiple of k; decryption returns the padded
    text, so callers that care about exact round-trips should pass text
    whose length is already a multiple of k.
    """
    _check_text(text)
    k = key.columns
    pad = (-len(text)) % k
    padded = text + "X" * pad
    rows = [padded[i : i + k] for i in range(0, len(padded), k)]
    return "".join("".join(row[c] for row in rows) for c in key.column_order)


def transposition_decrypt(text: str, key: TranspositionKey) -> str:
    _check_text(text)
    k = key.columns
    if len(text) % k != 0:
        raise ValueError("ciphertext length must be a multiple of the column count")
    rows = len(text) // k
    columns: dict[int, str] = {}
    for j, col in enumerate(key.column_order):
        columns[col] = text[j * rows : (j + 1) * rows]
    return "".join(columns[c][r] for r in range(rows) for c in range(k))
