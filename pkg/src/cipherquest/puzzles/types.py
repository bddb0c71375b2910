"""Core puzzle vocabulary: kinds, answer forms, specs, instances, logs."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Optional


class PuzzleKind(str, enum.Enum):
    CAESAR = "CAESAR"
    MONO_SUB = "MONO_SUB"
    TRANSPOSITION = "TRANSPOSITION"
    STREAM_XOR = "STREAM_XOR"
    FEISTEL_CBC = "FEISTEL_CBC"
    DH_EXCHANGE = "DH_EXCHANGE"
    RSA_SMALL = "RSA_SMALL"
    EC_SCALAR = "EC_SCALAR"
    HASH_PREIMAGE = "HASH_PREIMAGE"
    KEY_ESCROW = "KEY_ESCROW"
    SCRIPT_PIPELINE = "SCRIPT_PIPELINE"


class AnswerForm(str, enum.Enum):
    TEXT = "text"
    INTEGER = "integer"
    HEX = "hex"
    POINT = "point"
    SCRIPT = "script"


ANSWER_FORMS: dict[PuzzleKind, AnswerForm] = {
    PuzzleKind.CAESAR: AnswerForm.TEXT,
    PuzzleKind.MONO_SUB: AnswerForm.TEXT,
    PuzzleKind.TRANSPOSITION: AnswerForm.TEXT,
    PuzzleKind.STREAM_XOR: AnswerForm.TEXT,
    PuzzleKind.FEISTEL_CBC: AnswerForm.TEXT,
    PuzzleKind.DH_EXCHANGE: AnswerForm.INTEGER,
    PuzzleKind.RSA_SMALL: AnswerForm.INTEGER,
    PuzzleKind.EC_SCALAR: AnswerForm.POINT,
    PuzzleKind.HASH_PREIMAGE: AnswerForm.HEX,
    PuzzleKind.KEY_ESCROW: AnswerForm.HEX,
    PuzzleKind.SCRIPT_PIPELINE: AnswerForm.SCRIPT,
}

# Kinds whose challenge starts from a pooled plaintext message.
TEXT_KINDS = frozenset(
    {
        PuzzleKind.CAESAR,
        PuzzleKind.MONO_SUB,
        PuzzleKind.TRANSPOSITION,
        PuzzleKind.STREAM_XOR,
        PuzzleKind.FEISTEL_CBC,
        PuzzleKind.SCRIPT_PIPELINE,
    }
)


@dataclass(frozen=True)
class PuzzleSpec:
    """Authoring-time description of one level's puzzle."""

    id: str
    kind: PuzzleKind
    plaintext_pool: tuple[str, ...] = ()
    parameter_ranges: dict[str, Any] = field(default_factory=dict)
    intro_text: str = ""
    success_text: str = ""
    codex_refs: tuple[str, ...] = ()
    hint_texts: tuple[str, str, str] = ("", "", "")

    def __post_init__(self):
        if not self.id:
            raise ValueError("spec id must be nonempty")
        if len(self.hint_texts) != 3:
            raise ValueError("hint_texts must have exactly 3 entries")
        if self.kind in TEXT_KINDS and not self.plaintext_pool:
            raise ValueError(f"{self.kind.value} spec needs a nonempty plaintext pool")
        _validate_ranges(self.kind, self.parameter_ranges)

    @property
    def answer_form(self) -> AnswerForm:
        return ANSWER_FORMS[self.kind]


def _validate_ranges(kind: PuzzleKind, ranges: dict[str, Any]) -> None:
    if kind is PuzzleKind.DH_EXCHANGE:
        from ..crypto import MAX_DH_PRIME, DhParams

        p = ranges.get("p")
        g = ranges.get("g")
        if p is None or g is None:
            raise ValueError("DH_EXCHANGE needs parameter_ranges with 'p' and 'g'")
        DhParams(p, g)  # raises if out of desk-scale bounds
        if p > MAX_DH_PRIME:
            raise ValueError(f"DH prime must be <= {MAX_DH_PRIME}")
    elif kind is PuzzleKind.HASH_PREIMAGE:
        bits = ranges.get("bits", 12)
        if not 1 <= bits <= 16:
            raise ValueError("HASH_PREIMAGE bits must be in [1, 16]")
    elif kind is PuzzleKind.KEY_ESCROW:
        shares = ranges.get("shares", 3)
        if not 2 <= shares <= 8:
            raise ValueError("KEY_ESCROW shares must be in [2, 8]")
    elif kind is PuzzleKind.TRANSPOSITION:
        low = ranges.get("min_columns", 3)
        high = ranges.get("max_columns", 6)
        if not 2 <= low <= high <= 12:
            raise ValueError("TRANSPOSITION column bounds must satisfy 2 <= min <= max <= 12")
    elif kind is PuzzleKind.MONO_SUB:
        revealed = ranges.get("revealed_pairs", 8)
        if not 0 <= revealed <= 26:
            raise ValueError("MONO_SUB revealed_pairs must be in [0, 26]")


@dataclass(frozen=True)
class PuzzleInstance:
    """One concrete, seeded realization of a spec.

    ``challenge`` is the public face (safe to serialize to players);
    ``solution`` and ``private`` never leave the server.
    """

    spec_id: str
    kind: PuzzleKind
    seed: int
    challenge: dict[str, Any]
    solution: str
    answer_form: AnswerForm
    private: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class Attempt:
    answer: str
    timestamp: float
    fitness: Optional[float] = None


@dataclass
class AttemptLog:
    """Per-instance history; owned and mutated by a single session."""

    started_at: float
    attempts: list[Attempt] = field(default_factory=list)
    hints_taken: int = 0

    def record(self, answer: str, timestamp: float, fitness: Optional[float] = None) -> Attempt:
        if self.attempts and timestamp < self.attempts[-1].timestamp:
            raise ValueError("attempt timestamps must be nondecreasing")
        if timestamp < self.started_at:
            raise ValueError("attempt cannot predate the instance start")
        attempt = Attempt(answer, timestamp, fitness)
        self.attempts.append(attempt)
        return attempt

    def take_hint(self, tier: int) -> None:
        if not 0 <= tier <= 3:
            raise ValueError("hint tier must be in [0, 3]")
        self.hints_taken = max(self.hints_taken, tier)

    @property
    def attempt_count(self) -> int:
        return len(self.attempts)

    def last_fitness(self) -> Optional[float]:
        for attempt in reversed(self.attempts):
            if attempt.fitness is not None:
                return attempt.fitness
        return None


@dataclass(frozen=True)
class Feedback:
    verdict: str  # correct | incorrect
    direction: str = "neutral"  # warmer | colder | neutral
    message: str = ""

    def __post_init__(self):
        if self.verdict not in ("correct", "incorrect"):
            raise ValueError(f"bad verdict {self.verdict!r}")
        if self.direction not in ("warmer", "colder", "neutral"):
            raise ValueError(f"bad direction {self.direction!r}")
        if self.verdict == "correct" and self.direction != "neutral":
            raise ValueError("correct verdicts carry neutral direction")
