"""Player profiles: versioned JSON documents written atomically.

A save is a temporary file in the target directory renamed over the old
file, so a crash mid-save leaves the previous version readable.
"""
from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

PROFILE_VERSION = 1


class ProfileError(ValueError):
    """Profile document unreadable or structurally invalid."""


class ProfileMigrationError(ProfileError):
    """Save is from a newer format version than this build supports."""


@dataclass(frozen=True)
class LevelRecord:
    status: str
    best_score: int
    attempts: int
    total_time: float

    def __post_init__(self):
        if self.status != "completed":
            raise ValueError("stored level records are always completed")
        if self.best_score < 0 or self.attempts < 0 or self.total_time < 0:
            raise ValueError("level statistics must be nonnegative")


@dataclass
class PlayerProfile:
    player_id: str
    levels: dict[str, LevelRecord] = field(default_factory=dict)
    codex: list[str] = field(default_factory=list)
    current: Optional[str] = None
    version: int = PROFILE_VERSION

    def completed_ids(self) -> set[str]:
        return {lid for lid, rec in self.levels.items() if rec.status == "completed"}


def profile_to_document(profile: PlayerProfile) -> dict[str, Any]:
    return {
        "version": profile.version,
        "player_id": profile.player_id,
        "levels": {
            level_id: {
                "status": record.status,
                "best_score": record.best_score,
                "attempts": record.attempts,
                "total_time": record.total_time,
            }
            for level_id, record in sorted(profile.levels.items())
        },
        "codex": list(profile.codex),
        "current": profile.current,
    }


def profile_from_document(data: Any) -> PlayerProfile:
    if not isinstance(data, dict):
        raise ProfileError("profile document must be a JSON object")
    version = data.get("version")
    if not isinstance(version, int):
        raise ProfileError("profile is missing an integer 'version'")
    if version > PROFILE_VERSION:
        raise ProfileMigrationError(
            f"profile version {version} is newer than supported {PROFILE_VERSION}"
        )
    player_id = data.get("player_id")
    if not isinstance(player_id, str) or not player_id:
        raise ProfileError("profile needs a nonempty 'player_id'")
    raw_levels = data.get("levels", {})
    if not isinstance(raw_levels, dict):
        raise ProfileError("'levels' must be an object")
    levels: dict[str, LevelRecord] = {}
    for level_id, raw in raw_levels.items():
        try:
            levels[level_id] = LevelRecord(
                status=raw["status"],
                best_score=raw["best_score"],
                attempts=raw["attempts"],
                total_time=raw["total_time"],
            )
        except (TypeError, KeyError, ValueError) as exc:
            raise ProfileError(f"levels[{level_id!r}]: {exc}") from None
    codex = data.get("codex", [])
    if not isinstance(codex, list) or not all(isinstance(c, str) for c in codex):
        raise ProfileError("'codex' must be a list of concept ids")
    current = data.get("current")
    if current is not None and not isinstance(current, str):
        raise ProfileError("'current' must be a level id or null")
    return PlayerProfile(
        player_id=player_id,
        levels=levels,
        codex=list(codex),
        current=current,
        version=version,
    )


def save_profile(profile: PlayerProfile) -> str:
    return json.dumps(profile_to_document(profile), indent=2) + "\n"


def load_profile(document: str) -> PlayerProfile:
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ProfileError(f"not valid JSON: {exc}") from None
    return profile_from_document(data)


def profile_path(directory: Path, player_id: str) -> Path:
    return Path(directory) / f"{player_id}.json"


def save_profile_file(profile: PlayerProfile, directory: Path) -> Path:
    """Atomic write: temp file in the same directory, then rename."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    target = profile_path(directory, profile.player_id)
    payload = save_profile(profile)
    fd, temp_name = tempfile.mkstemp(
        prefix=f".{profile.player_id}.", suffix=".tmp", dir=directory
    )
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(payload)
        os.replace(temp_name, target)
    except BaseException:
        try:
            os.unlink(temp_name)
        except OSError:
            pass
        raise
    return target


def load_profile_file(path: Path) -> PlayerProfile:
    return load_profile(Path(path).read_text("utf-8"))
