"""Headless reference bot: plays the whole campaign over the HTTP API.

The bot is the integration proof: it regenerates each served instance
locally from the seed rule, solves it with the verified reference solver,
and checks every response against the rules the service promises (codex
wiring, score formula, hint thresholds, solution secrecy).
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Any, Callable

from .campaign import Campaign
from .puzzles import generate_instance, reference_solve
from .service import derive_seed

# dict keys that must never appear in any service response
FORBIDDEN_KEYS = frozenset({"solution", "private", "plaintext", "plaintext_pool"})

# the substring scan covers forms whose solutions are unique secrets;
# integer and point answers are small values (or the word "infinity")
# whose text legitimately occurs in instructions and unrelated fields
SCANNED_FORMS = frozenset({"text", "script", "hex"})
MIN_SCAN_LENGTH = 6

WRONG_TEXTS = (
    "THIS IS NOT THE HIDDEN MESSAGE AT ALL",
    "A DECOY READING THAT MUST FAIL",
    "STILL GUESSING WITHOUT A KEY HERE",
    "PLAINLY WRONG ANSWER NUMBER FOUR",
)


class BotFailure(RuntimeError):
    """A promise made by the service or spec content was broken."""


@dataclass
class BotReport:
    player_id: str
    levels_completed: list[str] = field(default_factory=list)
    attempts_total: int = 0
    hints_total: int = 0
    score_total: int = 0
    time_total: float = 0.0
    endpoints: set[str] = field(default_factory=set)
    payloads: list[tuple[str, str]] = field(default_factory=list)

    @property
    def endpoint_count(self) -> int:
        return len(self.endpoints)


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise BotFailure(message)


def _collect_keys(node: Any, found: set[str]) -> None:
    if isinstance(node, dict):
        for key, value in node.items():
            found.add(key)
            _collect_keys(value, found)
    elif isinstance(node, list):
        for value in node:
            _collect_keys(value, found)


class _Recorder:
    """Wraps an httpx-style client; remembers every response body."""

    def __init__(self, client, report: BotReport):
        self._client = client
        self._report = report

    def post(self, path: str, endpoint: str, **kwargs):
        response = self._client.post(path, **kwargs)
        self._remember(endpoint, response)
        return response

    def get(self, path: str, endpoint: str, **kwargs):
        response = self._client.get(path, **kwargs)
        self._remember(endpoint, response)
        return response

    def _remember(self, endpoint: str, response) -> None:
        self._report.endpoints.add(endpoint)
        self._report.payloads.append((endpoint, response.text))


def run_reference_bot(
    client,
    campaign: Campaign,
    player_id: str = "reference-bot",
    rng_seed: int = 0,
    out: Callable[[str], None] = print,
) -> BotReport:
    """Complete every level in order; raises BotFailure on any broken promise."""
    rng = random.Random(rng_seed)
    report = BotReport(player_id=player_id)
    api = _Recorder(client, report)

    response = api.post("/api/session", "session", json={"player_id": player_id})
    _expect(response.status_code == 200, f"session open failed: {response.text}")
    opened = response.json()
    session_id = opened["session_id"]
    headers = {"X-Session": session_id}
    out(f"session opened player={player_id} resumed={str(opened['resumed']).lower()}")

    response = api.get("/api/progress", "progress", headers=headers)
    _expect(response.status_code == 200, "progress endpoint failed")

    unlocked_codex: list[str] = []
    solutions_seen: list[tuple[str, str]] = []

    for index, level_id in enumerate(campaign.level_order):
        level = campaign.level(level_id)
        response = api.post(f"/api/level/{level_id}/start", "start", headers=headers)
        _expect(response.status_code == 200, f"{level_id}: start failed: {response.text}")
        body = response.json()

        # regenerate locally: the served challenge must match the seed rule
        seed = derive_seed(session_id, level_id, body["replay"])
        expected = generate_instance(level.spec, seed)
        _expect(
            body["challenge"] == expected.challenge,
            f"{level_id}: served challenge does not match the seed derivation rule",
        )
        _expect(
            body["answer_form"] == expected.answer_form.value,
            f"{level_id}: answer_form mismatch",
        )
        out(f"{level_id} {body['kind']} start replay={body['replay']}")

        answer = reference_solve(expected, verify=True)
        if expected.answer_form.value in SCANNED_FORMS:
            solutions_seen.append((level_id, expected.solution))

        attempts = 0
        hints_taken = 0

        if index == 0:
            # no hint immediately after starting
            response = api.post("/api/hint", "hint", headers=headers)
            _expect(response.status_code == 204, "hint granted before any struggle")
            out(f"{level_id} hint: none earned yet")
            attempts += _submit_wrong(api, headers, level_id, expected, rng, out, 1)
        elif index == 1:
            # three failures earn the tier 1 hint
            attempts += _submit_wrong(api, headers, level_id, expected, rng, out, 3)
            response = api.post("/api/hint", "hint", headers=headers)
            _expect(response.status_code == 200, "tier 1 hint expected after 3 misses")
            hint = response.json()
            _expect(hint["tier"] == 1, f"expected tier 1, got {hint['tier']}")
            _expect(
                hint["text"] == level.spec.hint_texts[0],
                "hint text does not match the level's first tier",
            )
            hints_taken = hint["hints_taken"]
            out(f"{level_id} hint tier={hint['tier']}")

        response = api.post("/api/attempt", "attempt", headers=headers, json={"answer": answer})
        _expect(response.status_code == 200, f"{level_id}: submit failed: {response.text}")
        verdict = response.json()
        attempts += 1
        _expect(verdict["verdict"] == "correct", f"{level_id}: reference answer rejected")
        _expect(verdict["attempts"] == attempts, f"{level_id}: attempt count drifted")

        expected_new = [
            ref for ref in _codex_order(campaign, level.spec.codex_refs)
            if ref not in unlocked_codex
        ]
        _expect(
            verdict["codex_updates"] == expected_new,
            f"{level_id}: codex updates {verdict['codex_updates']} != {expected_new}",
        )
        unlocked_codex.extend(verdict["codex_updates"])

        expected_score = _expected_score(attempts, hints_taken)
        _expect(
            verdict["score"] == expected_score,
            f"{level_id}: score {verdict['score']} != formula value {expected_score}",
        )

        report.levels_completed.append(level_id)
        report.attempts_total += attempts
        report.hints_total += hints_taken
        report.score_total += verdict["score"]
        out(
            f"{level_id} attempt {attempts} correct"
            f" score={verdict['score']} codex+{len(verdict['codex_updates'])}"
        )

    response = api.get("/api/codex", "codex", headers=headers)
    _expect(response.status_code == 200, "codex endpoint failed")
    codex = response.json()
    _expect(
        len(codex["entries"]) == codex["total"] == len(campaign.codex_entries),
        f"codex incomplete: {len(codex['entries'])}/{codex['total']}",
    )
    out(f"codex {len(codex['entries'])}/{codex['total']} unlocked")

    response = api.get("/api/progress", "progress", headers=headers)
    progress = response.json()
    _expect(
        all(row["status"] == "completed" for row in progress["levels"]),
        "progress shows unfinished levels after full run",
    )
    _expect(progress["current"] is None, "current level should be exhausted")
    report.time_total = sum(row["total_time"] for row in progress["levels"])
    out(f"progress {len(progress['levels'])}/{len(campaign.level_order)} completed")

    _scan_payloads(report, solutions_seen)
    out(f"secrecy scan: {len(report.payloads)} payloads clean")
    out(
        f"summary levels={len(report.levels_completed)}"
        f" attempts={report.attempts_total} hints={report.hints_total}"
        f" score_total={report.score_total} time={report.time_total:.0f}s"
        f" endpoints={report.endpoint_count}/6"
    )
    _expect(report.endpoint_count == 6, "not every endpoint was exercised")
    return report


def _submit_wrong(api, headers, level_id, instance, rng, out, count: int) -> int:
    """Deliberate misses; only meaningful for text-form levels."""
    decoys = rng.sample(WRONG_TEXTS, count)
    for number, decoy in enumerate(decoys, start=1):
        response = api.post("/api/attempt", "attempt", headers=headers, json={"answer": decoy})
        _expect(response.status_code == 200, f"{level_id}: wrong answer rejected as malformed")
        verdict = response.json()
        _expect(verdict["verdict"] == "incorrect", f"{level_id}: decoy accepted")
        _expect(
            verdict["direction"] in {"warmer", "colder", "neutral"},
            f"{level_id}: direction field missing or invalid",
        )
        out(f"{level_id} attempt {number} incorrect direction={verdict['direction']}")
    return count


def _codex_order(campaign: Campaign, refs) -> list[str]:
    order = [entry.concept_id for entry in campaign.codex_entries]
    return [cid for cid in order if cid in set(refs)]


def _expected_score(attempts: int, hints_taken: int) -> int:
    return max(100 - 15 * hints_taken - 2 * (attempts - 1), 10)


def _scan_payloads(report: BotReport, solutions: list[tuple[str, str]]) -> None:
    """No response may carry a forbidden key or a recoverable solution."""
    targets = [
        (level_id, text) for level_id, text in solutions if len(text) >= MIN_SCAN_LENGTH
    ]
    for endpoint, payload in report.payloads:
        keys: set[str] = set()
        _collect_keys(json.loads(payload) if payload else {}, keys)
        leaked = keys & FORBIDDEN_KEYS
        _expect(not leaked, f"{endpoint}: forbidden keys in payload: {sorted(leaked)}")
        for level_id, solution in targets:
            _expect(
                solution not in payload,
                f"{endpoint}: payload contains the solution for {level_id}",
            )
