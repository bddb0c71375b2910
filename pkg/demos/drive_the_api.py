"""Play the first level over the HTTP API, wrong answers and all.

Spins up the service in-process (no sockets) in deterministic mode, opens a
session, asks for a hint too early, submits a malformed answer, a wrong one,
and finally the real plaintext recovered from the served challenge. Run it
with:

    python3 demos/drive_the_api.py
"""

import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

from cipherquest.campaign import shipped_campaign
from cipherquest.crypto import caesar_shift
from cipherquest.puzzles import english_score
from cipherquest.service import SESSION_HEADER, ServiceConfig, create_app


def crack_caesar(ciphertext: str) -> str:
    """Same brute force as demos/break_a_caesar.py, condensed."""
    return max(
        (caesar_shift(ciphertext, (26 - s) % 26) for s in range(26)),
        key=english_score,
    )


def main() -> None:
    with tempfile.TemporaryDirectory() as profile_dir:
        config = ServiceConfig(
            campaign=shipped_campaign(),
            profile_dir=Path(profile_dir),
            deterministic=True,
        )
        client = TestClient(create_app(config))

        print("POST /api/session")
        session = client.post("/api/session", json={"player_id": "demo"}).json()
        headers = {SESSION_HEADER: session["session_id"]}
        print(f"  current level: {session['current']}")

        print("POST /api/level/level-01/start")
        started = client.post("/api/level/level-01/start", headers=headers).json()
        ciphertext = started["challenge"]["ciphertext"]
        print(f"  challenge ciphertext: {ciphertext[:48]}...")

        print("POST /api/hint (no attempts yet)")
        hint = client.post("/api/hint", headers=headers)
        print(f"  status {hint.status_code}: no hint earned this early")

        print("POST /api/attempt with garbage bytes")
        bad = client.post("/api/attempt", json={"answer": 7}, headers=headers)
        body = bad.json()
        print(f"  status {bad.status_code} {body['code']}: {body['message']}")

        print("POST /api/attempt with a wrong but readable guess")
        wrong = client.post(
            "/api/attempt",
            json={"answer": "THE DROP IS CANCELLED GO HOME"},
            headers=headers,
        ).json()
        print(f"  verdict {wrong['verdict']}, direction {wrong['direction']},"
              f" attempts {wrong['attempts']}")

        print("POST /api/attempt with the cracked plaintext")
        answer = crack_caesar(ciphertext)
        right = client.post(
            "/api/attempt", json={"answer": answer}, headers=headers
        ).json()
        print(f"  verdict {right['verdict']}, score {right['score']}")
        print(f"  codex unlocked: {right['codex_updates']}")
        print(f"  next level: {right['next_level']}")

        print("GET /api/progress")
        progress = client.get("/api/progress", headers=headers).json()
        done = [row["id"] for row in progress["levels"]
                if row["status"] == "completed"]
        print(f"  completed: {done}, now on {progress['current']}")


if __name__ == "__main__":
    main()
