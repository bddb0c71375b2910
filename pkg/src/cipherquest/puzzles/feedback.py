"""Warmer/colder feedback, attempt/time hint tiers, and scoring."""
from __future__ import annotations

import math
from typing import Optional

from ..cipherscript import ScriptError, evaluate, parse
from .english import english_score
from .types import AnswerForm, AttemptLog, Feedback, PuzzleInstance, PuzzleSpec

# tier -> (attempt threshold, seconds threshold); tier = max over both axes
HINT_TIERS = ((1, 3, 90.0), (2, 6, 240.0), (3, 10, 480.0))

SCORE_MAX = 100
SCORE_MIN = 10
HINT_PENALTY = 15
ATTEMPT_PENALTY = 2

# Only forms with a decryption preview may steer the player; integer, hex,
# and point answers say nothing, so nothing about the secret leaks.
_PREVIEW_FORMS = (AnswerForm.TEXT, AnswerForm.SCRIPT)


def submission_fitness(instance: PuzzleInstance, submission: str) -> Optional[float]:
    """English fitness of the submission's decryption preview; None when the
    answer form has no preview."""
    if instance.answer_form is AnswerForm.TEXT:
        return english_score(submission)
    if instance.answer_form is AnswerForm.SCRIPT:
        ciphertext = bytes.fromhex(instance.challenge["ciphertext_hex"])
        try:
            output = evaluate(parse(submission), ciphertext)
            return english_score(output.decode("ascii"))
        except (ScriptError, UnicodeDecodeError):
            return -math.inf
    return None


def directional_feedback(
    instance: PuzzleInstance, log: AttemptLog, new_submission: str
) -> Feedback:
    """Judge an already-incorrect submission against the previous attempt."""
    fitness = submission_fitness(instance, new_submission)
    if fitness is None or instance.answer_form not in _PREVIEW_FORMS:
        return Feedback("incorrect", "neutral", "No directional reading on this channel.")
    previous = log.last_fitness()
    if previous is None:
        return Feedback("incorrect", "neutral", "First reading logged.")
    if fitness > previous:
        return Feedback("incorrect", "warmer", "Warmer. You are moving in the right direction.")
    if fitness < previous:
        return Feedback("incorrect", "colder", "Colder. That reads less like a real message.")
    return Feedback("incorrect", "neutral", "No change in the signal.")


def hint_tier(attempts: int, elapsed_seconds: float) -> int:
    tier = 0
    for level, min_attempts, min_seconds in HINT_TIERS:
        if attempts >= min_attempts or elapsed_seconds >= min_seconds:
            tier = level
    return tier


def hint_for(
    spec: PuzzleSpec, log: AttemptLog, now: float
) -> Optional[tuple[int, str]]:
    tier = hint_tier(log.attempt_count, now - log.started_at)
    if tier == 0:
        return None
    return tier, spec.hint_texts[tier - 1]


def score_attempt(log: AttemptLog, solved: bool) -> int:
    if not solved:
        raise ValueError("only solved logs are scored")
    raw = (
        SCORE_MAX
        - HINT_PENALTY * log.hints_taken
        - ATTEMPT_PENALTY * (log.attempt_count - 1)
    )
    return max(raw, SCORE_MIN)
