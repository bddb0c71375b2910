"""Break a Caesar level by hand with the library primitives.

Generates the same kind of challenge the game serves for level-01, then walks
through the classical attack: try all 26 shifts and keep the candidate that
reads most like English. Run it with:

    python3 demos/break_a_caesar.py
"""

from cipherquest.crypto import caesar_shift
from cipherquest.puzzles import (
    PuzzleKind,
    PuzzleSpec,
    check_answer,
    english_score,
    generate_instance,
)

INTERCEPT_POOL = (
    "THE COURIER LEAVES THE PACKAGE UNDER THE THIRD BENCH AT THE STATION",
    "MEET THE CONTACT AT THE OLD LIGHTHOUSE WHEN THE FOG ROLLS IN TONIGHT",
    "THE SAFE HOUSE ON THE CORNER IS COMPROMISED MOVE TO THE RIVER FLAT",
)


def main() -> None:
    spec = PuzzleSpec(
        id="demo-caesar",
        kind=PuzzleKind.CAESAR,
        plaintext_pool=INTERCEPT_POOL,
        intro_text="An intercepted burst, shifted by an unknown amount.",
        success_text="Signal recovered.",
        hint_texts=("Count the shift.", "Try them all.", "E is everywhere."),
    )
    instance = generate_instance(spec, seed=42)
    ciphertext = instance.challenge["ciphertext"]

    print("intercepted ciphertext:")
    print(f"  {ciphertext}")
    print()

    # The whole keyspace is 26 shifts, so score every decryption and sort.
    # english_score is the same letter-frequency fitness the game uses for
    # its warmer/colder feedback.
    candidates = []
    for shift in range(26):
        plaintext = caesar_shift(ciphertext, (26 - shift) % 26)
        candidates.append((english_score(plaintext), shift, plaintext))
    candidates.sort(reverse=True)

    print("top three candidates by english fitness:")
    for fitness, shift, plaintext in candidates[:3]:
        print(f"  shift {shift:2d}  fitness {fitness:6.2f}  {plaintext[:44]}...")
    print()

    best_fitness, best_shift, best_plaintext = candidates[0]
    print(f"best guess uses shift {best_shift}; submitting it for grading")
    feedback = check_answer(instance, best_plaintext)
    print(f"  verdict: {feedback.verdict}")
    print(f"  message: {feedback.message}")


if __name__ == "__main__":
    main()
