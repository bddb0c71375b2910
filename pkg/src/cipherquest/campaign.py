"""Campaign loading and progression: chapters, levels, codex, unlock gating.

The campaign file is JSON with exactly the top-level keys ``version``,
``chapters``, ``levels``, ``codex``. Hidden solutions never appear in it;
instances are generated per session, not stored.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Any, Optional

import jsonschema

from .profiles import LevelRecord, PlayerProfile
from .puzzles import (
    PuzzleKind,
    PuzzleSpec,
    generate_instance,
    reference_solve,
)

CAMPAIGN_VERSION = 1

# The course outline the game follows: five groups, each with its leaf
# topics. Chapter titles must match the group names one to one, and every
# leaf must be claimed by at least one level or codex entry.
SYLLABUS: tuple[tuple[str, tuple[str, ...]], ...] = (
    ("Classical Cryptography", ("Substitution Ciphers", "Transposition Ciphers")),
    ("Symmetric-Key Cryptography", ("Block Ciphers", "Stream Ciphers", "Key Management")),
    (
        "Public-Key Cryptography",
        ("Encryption Algorithms", "Elliptic Curve Cryptography", "Diffie-Hellman Key Exchange"),
    ),
    ("Cryptographic Hash Functions", ("Key Concepts", "Common Hash Functions")),
    (
        "Key Management and Key Distribution",
        ("Key Exchange Protocols", "Key Distribution Systems", "Key Escrow"),
    ),
)

CHAPTER_TITLES = tuple(title for title, _ in SYLLABUS)
ALL_TOPICS = tuple(leaf for _, leaves in SYLLABUS for leaf in leaves)

PROBE_SEEDS = (0, 1, 2, 3, 4)

_KIND_NAMES = [kind.value for kind in PuzzleKind]

_SPEC_SCHEMA = {
    "type": "object",
    "required": ["intro_text", "success_text", "codex_refs", "hint_texts"],
    "additionalProperties": False,
    "properties": {
        "plaintext_pool": {"type": "array", "items": {"type": "string"}},
        "parameter_ranges": {"type": "object"},
        "intro_text": {"type": "string"},
        "success_text": {"type": "string"},
        "codex_refs": {"type": "array", "items": {"type": "string"}},
        "hint_texts": {
            "type": "array",
            "items": {"type": "string"},
            "minItems": 3,
            "maxItems": 3,
        },
    },
}

_LEVEL_SCHEMA = {
    "type": "object",
    "required": ["id", "kind", "prerequisites", "story_intro", "story_outro", "topics", "spec"],
    "additionalProperties": False,
    "properties": {
        "id": {"type": "string", "minLength": 1},
        "kind": {"type": "string", "enum": _KIND_NAMES},
        "prerequisites": {"type": "array", "items": {"type": "string"}},
        "story_intro": {"type": "string"},
        "story_outro": {"type": "string"},
        "topics": {"type": "array", "items": {"type": "string"}},
        "spec": _SPEC_SCHEMA,
    },
}

_CODEX_SCHEMA = {
    "type": "object",
    "required": ["concept_id", "title", "body", "unlocked_by", "topics"],
    "additionalProperties": False,
    "properties": {
        "concept_id": {"type": "string", "minLength": 1},
        "title": {"type": "string", "minLength": 1},
        "body": {"type": "string", "minLength": 1},
        "unlocked_by": {"type": "string", "minLength": 1},
        "topics": {"type": "array", "items": {"type": "string"}},
    },
}

CAMPAIGN_SCHEMA = {
    "type": "object",
    "required": ["version", "chapters", "levels", "codex"],
    "additionalProperties": False,
    "properties": {
        "version": {"type": "integer", "minimum": 1},
        "chapters": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["title", "levels"],
                "additionalProperties": False,
                "properties": {
                    "title": {"type": "string", "minLength": 1},
                    "levels": {
                        "type": "array",
                        "minItems": 1,
                        "items": {"type": "string"},
                    },
                },
            },
        },
        "levels": {"type": "array", "minItems": 1, "items": _LEVEL_SCHEMA},
        "codex": {"type": "array", "items": _CODEX_SCHEMA},
    },
}


class CampaignError(ValueError):
    """Campaign document rejected; ``path`` points at the offending field."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.reason = message


@dataclass(frozen=True)
class Chapter:
    title: str
    level_ids: tuple[str, ...]


@dataclass(frozen=True)
class LevelNode:
    id: str
    spec: PuzzleSpec
    prerequisites: tuple[str, ...]
    story_intro: str
    story_outro: str
    topics: tuple[str, ...]

    @property
    def kind(self) -> PuzzleKind:
        return self.spec.kind


@dataclass(frozen=True)
class CodexEntry:
    concept_id: str
    title: str
    body: str
    unlocked_by: str
    topics: tuple[str, ...]


@dataclass(frozen=True)
class Campaign:
    version: int
    chapters: tuple[Chapter, ...]
    levels: tuple[LevelNode, ...]
    codex_entries: tuple[CodexEntry, ...]
    levels_by_id: dict[str, LevelNode] = field(repr=False, default_factory=dict)

    @property
    def level_order(self) -> tuple[str, ...]:
        return tuple(lid for chapter in self.chapters for lid in chapter.level_ids)

    def level(self, level_id: str) -> LevelNode:
        return self.levels_by_id[level_id]

    def codex_for_level(self, level_id: str) -> tuple[str, ...]:
        return self.levels_by_id[level_id].spec.codex_refs


def load_campaign(document: str, probe: bool = True) -> Campaign:
    """Parse, schema-check, semantically validate, and probe-solve a campaign."""
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise CampaignError("$", f"not valid JSON: {exc}") from None
    return campaign_from_data(data, probe=probe)


def campaign_from_data(data: Any, probe: bool = True) -> Campaign:
    try:
        jsonschema.validate(data, CAMPAIGN_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise CampaignError(exc.json_path, exc.message) from None

    if data["version"] > CAMPAIGN_VERSION:
        raise CampaignError(
            "$.version",
            f"campaign version {data['version']} is newer than supported {CAMPAIGN_VERSION}",
        )

    levels = _build_levels(data["levels"])
    chapters = _build_chapters(data["chapters"], levels)
    codex_entries = _build_codex(data["codex"], levels)
    _check_prerequisites(levels, chapters)
    _check_codex_refs(levels, codex_entries)

    campaign = Campaign(
        version=data["version"],
        chapters=chapters,
        levels=tuple(levels.values()),
        codex_entries=codex_entries,
        levels_by_id=levels,
    )
    if probe:
        _probe_solvability(campaign)
    return campaign


def _build_levels(raw_levels: list[dict]) -> dict[str, LevelNode]:
    levels: dict[str, LevelNode] = {}
    for index, raw in enumerate(raw_levels):
        path = f"$.levels[{index}]"
        if raw["id"] in levels:
            raise CampaignError(f"{path}.id", f"duplicate level id {raw['id']!r}")
        spec_raw = raw["spec"]
        try:
            spec = PuzzleSpec(
                id=raw["id"],
                kind=PuzzleKind(raw["kind"]),
                plaintext_pool=tuple(spec_raw.get("plaintext_pool", ())),
                parameter_ranges=dict(spec_raw.get("parameter_ranges", {})),
                intro_text=spec_raw["intro_text"],
                success_text=spec_raw["success_text"],
                codex_refs=tuple(spec_raw["codex_refs"]),
                hint_texts=tuple(spec_raw["hint_texts"]),
            )
        except ValueError as exc:
            raise CampaignError(f"{path}.spec", str(exc)) from None
        levels[raw["id"]] = LevelNode(
            id=raw["id"],
            spec=spec,
            prerequisites=tuple(raw["prerequisites"]),
            story_intro=raw["story_intro"],
            story_outro=raw["story_outro"],
            topics=tuple(raw["topics"]),
        )
    return levels


def _build_chapters(raw_chapters: list[dict], levels: dict[str, LevelNode]) -> tuple[Chapter, ...]:
    chapters = []
    seen: set[str] = set()
    for index, raw in enumerate(raw_chapters):
        path = f"$.chapters[{index}]"
        for position, level_id in enumerate(raw["levels"]):
            if level_id not in levels:
                raise CampaignError(
                    f"{path}.levels[{position}]", f"unknown level id {level_id!r}"
                )
            if level_id in seen:
                raise CampaignError(
                    f"{path}.levels[{position}]",
                    f"level {level_id!r} appears in more than one chapter",
                )
            seen.add(level_id)
        chapters.append(Chapter(title=raw["title"], level_ids=tuple(raw["levels"])))
    missing = set(levels) - seen
    if missing:
        raise CampaignError("$.chapters", f"levels not placed in any chapter: {sorted(missing)}")

    titles = tuple(chapter.title for chapter in chapters)
    if titles != CHAPTER_TITLES:
        raise CampaignError(
            "$.chapters",
            f"chapter titles must be exactly {list(CHAPTER_TITLES)} in order, got {list(titles)}",
        )
    return tuple(chapters)


def _build_codex(raw_codex: list[dict], levels: dict[str, LevelNode]) -> tuple[CodexEntry, ...]:
    entries = []
    seen: set[str] = set()
    for index, raw in enumerate(raw_codex):
        path = f"$.codex[{index}]"
        if raw["concept_id"] in seen:
            raise CampaignError(f"{path}.concept_id", f"duplicate concept {raw['concept_id']!r}")
        seen.add(raw["concept_id"])
        if raw["unlocked_by"] not in levels:
            raise CampaignError(
                f"{path}.unlocked_by", f"unknown level id {raw['unlocked_by']!r}"
            )
        entries.append(
            CodexEntry(
                concept_id=raw["concept_id"],
                title=raw["title"],
                body=raw["body"],
                unlocked_by=raw["unlocked_by"],
                topics=tuple(raw["topics"]),
            )
        )
    return tuple(entries)


def _check_prerequisites(levels: dict[str, LevelNode], chapters: tuple[Chapter, ...]) -> None:
    order = [lid for chapter in chapters for lid in chapter.level_ids]
    position = {lid: i for i, lid in enumerate(order)}
    for level in levels.values():
        path = f"$.levels[{_index_of(levels, level.id)}].prerequisites"
        for prereq in level.prerequisites:
            if prereq not in levels:
                raise CampaignError(path, f"unknown prerequisite {prereq!r}")
            if position[prereq] >= position[level.id]:
                raise CampaignError(
                    path,
                    f"prerequisite {prereq!r} does not come before {level.id!r};"
                    " the dependency graph must be a forward-only chain (cycle)",
                )


def _index_of(levels: dict[str, LevelNode], level_id: str) -> int:
    return list(levels).index(level_id)


def _check_codex_refs(levels: dict[str, LevelNode], codex: tuple[CodexEntry, ...]) -> None:
    known = {entry.concept_id for entry in codex}
    for level in levels.values():
        for ref in level.spec.codex_refs:
            if ref not in known:
                raise CampaignError(
                    f"$.levels[{_index_of(levels, level.id)}].spec.codex_refs",
                    f"dangling codex reference {ref!r}",
                )


def _probe_solvability(campaign: Campaign) -> None:
    for level in campaign.levels:
        for seed in PROBE_SEEDS:
            try:
                reference_solve(generate_instance(level.spec, seed), verify=True)
            except Exception as exc:
                raise CampaignError(
                    f"$.levels[{_index_of(campaign.levels_by_id, level.id)}]",
                    f"level {level.id!r} unsolvable at probe seed {seed}: {exc}",
                ) from exc


def check_topic_coverage(campaign: Campaign) -> list[str]:
    """Return the syllabus leaf topics not claimed by any level or codex entry."""
    claimed: set[str] = set()
    for level in campaign.levels:
        claimed.update(level.topics)
    for entry in campaign.codex_entries:
        claimed.update(entry.topics)
    return [topic for topic in ALL_TOPICS if topic not in claimed]


def shipped_campaign_text() -> str:
    return (
        resources.files("cipherquest").joinpath("data/campaign.json").read_text("utf-8")
    )


def shipped_campaign(probe: bool = False) -> Campaign:
    """The packaged default campaign. Probing is off by default because the
    shipped file is validated by its own tests and by `validate`."""
    return load_campaign(shipped_campaign_text(), probe=probe)


# --- progression ---------------------------------------------------------

LOCKED = "locked"
UNLOCKED = "unlocked"
COMPLETED = "completed"


class LockedLevelError(ValueError):
    pass


def unlock_state(campaign: Campaign, profile: PlayerProfile) -> dict[str, str]:
    """Level id -> locked | unlocked | completed."""
    completed = {
        level_id
        for level_id, record in profile.levels.items()
        if record.status == COMPLETED
    }
    state: dict[str, str] = {}
    first_id = campaign.chapters[0].level_ids[0]
    for level in campaign.levels:
        if level.id in completed:
            state[level.id] = COMPLETED
        elif level.id == first_id or all(p in completed for p in level.prerequisites):
            state[level.id] = UNLOCKED
        else:
            state[level.id] = LOCKED
    return state


def record_completion(
    campaign: Campaign,
    profile: PlayerProfile,
    level_id: str,
    score: int,
    attempts: int,
    elapsed: float,
) -> list[str]:
    """Mark a level completed; returns newly unlocked codex concept ids."""
    if level_id not in campaign.levels_by_id:
        raise KeyError(level_id)
    state = unlock_state(campaign, profile)
    if state[level_id] == LOCKED:
        raise LockedLevelError(f"level {level_id!r} is locked")

    existing = profile.levels.get(level_id)
    if existing is None:
        profile.levels[level_id] = LevelRecord(
            status=COMPLETED, best_score=score, attempts=attempts, total_time=elapsed
        )
    else:
        profile.levels[level_id] = LevelRecord(
            status=COMPLETED,
            best_score=max(existing.best_score, score),
            attempts=existing.attempts + attempts,
            total_time=existing.total_time + elapsed,
        )

    new_concepts = [
        entry.concept_id
        for entry in campaign.codex_entries
        if entry.concept_id in campaign.level(level_id).spec.codex_refs
        and entry.concept_id not in profile.codex
    ]
    profile.codex.extend(new_concepts)

    fresh_state = unlock_state(campaign, profile)
    profile.current = next(
        (lid for lid in campaign.level_order if fresh_state[lid] == UNLOCKED), None
    )
    return new_concepts
