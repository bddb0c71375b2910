"""English-likeness fitness used for warmer/colder feedback.

The score is a negated chi-squared statistic against a standard relative
letter-frequency table, normalized by letter count so texts of different
lengths compare sensibly. It is a monotone fitness tool, not a probability.
"""
from __future__ import annotations

import math

# Relative English letter frequencies (percent). Normalized below.
_FREQUENCY_PERCENT = {
    "E": 12.702, "T": 9.056, "A": 8.167, "O": 7.507, "I": 6.966, "N": 6.749,
    "S": 6.327, "H": 6.094, "R": 5.987, "D": 4.253, "L": 4.025, "C": 2.782,
    "U": 2.758, "M": 2.406, "W": 2.360, "F": 2.228, "G": 2.015, "Y": 1.974,
    "P": 1.929, "B": 1.492, "V": 0.978, "K": 0.772, "J": 0.153, "X": 0.150,
    "Q": 0.095, "Z": 0.074,
}

_TOTAL = sum(_FREQUENCY_PERCENT.values())
LETTER_FREQUENCIES: dict[str, float] = {
    letter: percent / _TOTAL for letter, percent in _FREQUENCY_PERCENT.items()
}


def english_score(text: str) -> float:
    """Higher is more English-like; -inf when the text has no letters."""
    counts = [0] * 26
    total = 0
    for ch in text.upper():
        index = ord(ch) - ord("A")
        if 0 <= index < 26:
            counts[index] += 1
            total += 1
    if total == 0:
        return -math.inf
    chi2 = 0.0
    for letter, fraction in LETTER_FREQUENCIES.items():
        expected = total * fraction
        observed = counts[ord(letter) - ord("A")]
        chi2 += (observed - expected) ** 2 / expected
    return -chi2 / total


def normalize_answer(text: str) -> str:
    """Canonical text answer: uppercase, letters and spaces only, single spaces.

    Idempotent: normalize(normalize(s)) == normalize(s).
    """
    kept = []
    for ch in text.upper():
        if "A" <= ch <= "Z":
            kept.append(ch)
        elif ch.isspace():
            kept.append(" ")
        # punctuation and digits are dropped entirely
    return " ".join("".join(kept).split())
