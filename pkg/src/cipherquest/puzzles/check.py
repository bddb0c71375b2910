"""Answer grading. Format mistakes are not cryptanalysis mistakes: a
submission that cannot be read in the puzzle's answer form raises
MalformedSubmissionError and must not be counted as an attempt."""
from __future__ import annotations

from typing import Optional

from ..cipherscript import ScriptError, evaluate, parse
from .english import normalize_answer
from .types import AnswerForm, Feedback, PuzzleInstance, PuzzleKind


class MalformedSubmissionError(ValueError):
    """Submission not readable in the instance's answer form."""

    def __init__(self, message: str, position: Optional[int] = None):
        super().__init__(message)
        self.message = message
        self.position = position


def canonicalize_submission(instance: PuzzleInstance, submission: str) -> str:
    """Reduce a raw submission to canonical comparable form, or raise."""
    if not isinstance(submission, str):
        raise MalformedSubmissionError("submission must be a string")
    form = instance.answer_form
    if form is AnswerForm.TEXT:
        return normalize_answer(submission)
    if form is AnswerForm.INTEGER:
        text = submission.strip()
        try:
            return str(int(text, 10))
        except ValueError:
            raise MalformedSubmissionError(
                f"expected a base-10 integer, got {text!r}"
            ) from None
    if form is AnswerForm.HEX:
        text = submission.strip().lower()
        if text.startswith("0x"):
            text = text[2:]
        if not text:
            raise MalformedSubmissionError("expected hex bytes, got an empty string")
        if len(text) % 2 != 0:
            raise MalformedSubmissionError("hex submission has odd length")
        try:
            bytes.fromhex(text)
        except ValueError:
            raise MalformedSubmissionError(f"invalid hex digits in {text!r}") from None
        return text
    if form is AnswerForm.POINT:
        return _canonical_point(instance, submission)
    # script form: syntax must be valid; semantics are judged at evaluation
    try:
        parse(submission)
    except ScriptError as exc:
        raise MalformedSubmissionError(
            f"script does not parse ({exc.kind}): {exc.message}", position=exc.position
        ) from None
    return submission


def _canonical_point(instance: PuzzleInstance, submission: str) -> str:
    text = submission.strip().lower()
    if text == "infinity":
        return "infinity"
    parts = text.split(",")
    if len(parts) != 2:
        raise MalformedSubmissionError(
            'expected a point as "x,y" or the word "infinity"'
        )
    try:
        x, y = (int(part.strip(), 10) for part in parts)
    except ValueError:
        raise MalformedSubmissionError("point coordinates must be integers") from None
    p = instance.challenge["p"]
    return f"{x % p},{y % p}"


def check_answer(instance: PuzzleInstance, submission: str) -> Feedback:
    canonical = canonicalize_submission(instance, submission)
    if instance.kind is PuzzleKind.HASH_PREIMAGE:
        correct = _hash_preimage_hits(instance, canonical)
    elif instance.answer_form is AnswerForm.SCRIPT:
        correct = _script_decrypts(instance, canonical)
    elif instance.answer_form is AnswerForm.TEXT:
        correct = canonical == normalize_answer(instance.solution)
    else:
        correct = canonical == instance.solution
    if correct:
        return Feedback(verdict="correct", message="Message recovered.")
    return Feedback(verdict="incorrect", message="That is not the hidden message.")


def _hash_preimage_hits(instance: PuzzleInstance, canonical_hex: str) -> bool:
    """Any input hashing to the truncated target wins, not only the seeded one."""
    from ..crypto import toy_hash

    mask = (1 << instance.challenge["bits"]) - 1
    return toy_hash(bytes.fromhex(canonical_hex)) & mask == instance.challenge["target"]


def _script_decrypts(instance: PuzzleInstance, source: str) -> bool:
    ciphertext = bytes.fromhex(instance.challenge["ciphertext_hex"])
    try:
        output = evaluate(parse(source), ciphertext)
        text = output.decode("ascii")
    except (ScriptError, UnicodeDecodeError):
        return False  # parses but fails to run: an honest wrong attempt
    return normalize_answer(text) == normalize_answer(instance.private["plaintext"])
