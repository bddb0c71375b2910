#!/usr/bin/env python3
"""Freeze generator outputs into src/cipherquest/data/known_answers.txt.

Each line pins one (level, seed) pair with digests of the challenge and the
solution. The digests lock in the exact RNG consumption order of every
builder: any accidental change to generation breaks the paired test loudly.
Digests, not raw solutions, so the shipped package never carries answers in
the clear.
"""
from __future__ import annotations

import hashlib
import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from cipherquest.campaign import shipped_campaign  # noqa: E402
from cipherquest.puzzles import generate_instance  # noqa: E402

SEEDS = range(10)


def digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def main() -> int:
    campaign = shipped_campaign()
    lines = ["# level_id seed challenge_digest solution_digest"]
    for level in campaign.levels:
        for seed in SEEDS:
            instance = generate_instance(level.spec, seed)
            challenge = json.dumps(instance.challenge, sort_keys=True, separators=(",", ":"))
            lines.append(
                f"{level.id} {seed} {digest(challenge)} {digest(instance.solution)}"
            )
    out = ROOT / "src" / "cipherquest" / "data" / "known_answers.txt"
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {out} ({len(lines) - 1} entries)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
