"""Puzzle engine: seeded generation, grading, feedback, hints, solving."""
from .check import MalformedSubmissionError, canonicalize_submission, check_answer
from .english import english_score, normalize_answer
from .feedback import (
    HINT_TIERS,
    directional_feedback,
    hint_for,
    hint_tier,
    score_attempt,
    submission_fitness,
)
from .generate import generate_instance
from .solve import VerificationError, reference_solve
from .types import (
    ANSWER_FORMS,
    TEXT_KINDS,
    AnswerForm,
    Attempt,
    AttemptLog,
    Feedback,
    PuzzleInstance,
    PuzzleKind,
    PuzzleSpec,
)

__all__ = [
    "ANSWER_FORMS",
    "AnswerForm",
    "Attempt",
    "AttemptLog",
    "Feedback",
    "HINT_TIERS",
    "MalformedSubmissionError",
    "PuzzleInstance",
    "PuzzleKind",
    "PuzzleSpec",
    "TEXT_KINDS",
    "VerificationError",
    "canonicalize_submission",
    "check_answer",
    "directional_feedback",
    "english_score",
    "generate_instance",
    "hint_for",
    "hint_tier",
    "normalize_answer",
    "reference_solve",
    "score_attempt",
    "submission_fitness",
]
