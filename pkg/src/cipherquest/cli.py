"""Instructor and developer command line.

Subcommands: validate, gen, solve, play, serve. Exit codes: 0 success,
1 validation or game failure, 2 usage error. Configuration falls back from
flags to CIPHERQUEST_* environment variables to built-in defaults.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import socket
import sys
import tempfile
import time
from pathlib import Path
from typing import Any, Optional

from .campaign import (
    PROBE_SEEDS,
    Campaign,
    CampaignError,
    check_topic_coverage,
    load_campaign,
    shipped_campaign,
    shipped_campaign_text,
)
from .puzzles import (
    AnswerForm,
    PuzzleInstance,
    PuzzleKind,
    VerificationError,
    generate_instance,
    reference_solve,
)

WATERMARK = "AUTHORING OUTPUT: contains solution; never serve this file to players"

ENV_CAMPAIGN = "CIPHERQUEST_CAMPAIGN"
ENV_PROFILE_DIR = "CIPHERQUEST_PROFILE_DIR"
ENV_PORT = "CIPHERQUEST_PORT"
ENV_DETERMINISTIC = "CIPHERQUEST_DETERMINISTIC"


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 1


def _resolve_campaign(path_arg: Optional[str], probe: bool = False) -> Campaign:
    path = path_arg or os.environ.get(ENV_CAMPAIGN)
    if path is None:
        return shipped_campaign(probe=probe)
    return load_campaign(Path(path).read_text(encoding="utf-8"), probe=probe)


def _resolve_profile_dir(arg: Optional[str], default: str = "profiles") -> Path:
    return Path(arg or os.environ.get(ENV_PROFILE_DIR) or default)


def _env_flag(name: str) -> bool:
    return os.environ.get(name, "").strip().lower() in {"1", "true", "yes", "on"}


# --- validate --------------------------------------------------------------


def cmd_validate(args: argparse.Namespace) -> int:
    as_json = args.format == "json"
    path = args.campaign or os.environ.get(ENV_CAMPAIGN)
    try:
        text = Path(path).read_text(encoding="utf-8") if path else shipped_campaign_text()
    except OSError as exc:
        if as_json:
            print(json.dumps({"ok": False, "path": "$", "error": str(exc)}))
            return 1
        return _fail(str(exc))

    try:
        campaign = load_campaign(text, probe=False)
    except CampaignError as exc:
        if as_json:
            print(json.dumps({"ok": False, "path": exc.path, "error": exc.reason}))
            return 1
        return _fail(f"{exc.path}: {exc.reason}")

    levels_report: list[dict[str, Any]] = []
    for level in campaign.levels:
        for seed in PROBE_SEEDS:
            try:
                reference_solve(generate_instance(level.spec, seed), verify=True)
            except Exception as exc:
                message = f"level {level.id!r} failed at probe seed {seed}: {exc}"
                if as_json:
                    print(json.dumps({"ok": False, "path": f"$.levels[{level.id}]",
                                      "error": message}))
                    return 1
                return _fail(message)
        levels_report.append(
            {"id": level.id, "kind": level.kind.value, "solvable_seeds": len(PROBE_SEEDS)}
        )
        if not as_json:
            print(f"{level.id} {level.kind.value} ok ({len(PROBE_SEEDS)} seeds)")

    missing = check_topic_coverage(campaign)
    if missing:
        if as_json:
            print(json.dumps({"ok": False, "path": "$.levels",
                              "error": f"topics not covered: {missing}"}))
            return 1
        return _fail(f"topics not covered by any level or codex entry: {missing}")

    if as_json:
        print(json.dumps({
            "ok": True,
            "chapters": len(campaign.chapters),
            "levels": levels_report,
            "codex_entries": len(campaign.codex_entries),
            "coverage_missing": [],
        }))
    else:
        print(
            f"{len(campaign.chapters)} chapters, {len(campaign.levels)} levels,"
            " all levels solvable"
        )
        print("topic coverage complete")
    return 0


# --- gen / solve -----------------------------------------------------------


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        campaign = _resolve_campaign(args.campaign)
    except (OSError, CampaignError) as exc:
        return _fail(str(exc))
    if args.level_id not in campaign.levels_by_id:
        return _fail(f"unknown level {args.level_id!r}")
    instance = generate_instance(campaign.level(args.level_id).spec, args.seed)
    document = {
        "watermark": WATERMARK,
        "level_id": args.level_id,
        "seed": args.seed,
        "kind": instance.kind.value,
        "answer_form": instance.answer_form.value,
        "challenge": instance.challenge,
        "solution": instance.solution,
        "private": instance.private,
    }
    print(json.dumps(document, indent=2, sort_keys=True))
    return 0


def cmd_solve(args: argparse.Namespace) -> int:
    as_json = args.format == "json"
    try:
        text = sys.stdin.read() if args.instance == "-" else Path(
            args.instance
        ).read_text(encoding="utf-8")
        document = json.loads(text)
        instance = PuzzleInstance(
            spec_id=document["level_id"],
            kind=PuzzleKind(document["kind"]),
            seed=document["seed"],
            challenge=document["challenge"],
            solution=document["solution"],
            answer_form=AnswerForm(document["answer_form"]),
            private=document["private"],
        )
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        if as_json:
            print(json.dumps({"ok": False, "error": f"unreadable instance: {exc}"}))
            return 1
        return _fail(f"unreadable instance: {exc}")

    try:
        answer = reference_solve(instance, verify=True)
    except VerificationError as exc:
        if as_json:
            print(json.dumps({"ok": False, "error": str(exc)}))
            return 1
        return _fail(str(exc))

    if as_json:
        print(json.dumps({"ok": True, "answer": answer, "verified": True}))
    else:
        print(f"answer: {answer}")
        print("verified: independent derivation matches")
    return 0


# --- play ------------------------------------------------------------------


def cmd_play(args: argparse.Namespace) -> int:
    if not args.headless:
        print("error: only --headless play is available", file=sys.stderr)
        return 2

    from fastapi.testclient import TestClient

    from .bot import BotFailure, run_reference_bot
    from .service import ServiceConfig, create_app

    try:
        campaign = _resolve_campaign(args.campaign)
    except (OSError, CampaignError) as exc:
        return _fail(str(exc))

    started = time.monotonic()
    with tempfile.TemporaryDirectory(prefix="cipherquest-play-") as scratch:
        profile_dir = (
            _resolve_profile_dir(args.profile_dir, default="")
            if (args.profile_dir or os.environ.get(ENV_PROFILE_DIR))
            else Path(scratch)
        )
        config = ServiceConfig(
            campaign=campaign,
            profile_dir=profile_dir,
            deterministic=True,
            token_seed=args.seed,
        )
        client = TestClient(create_app(config))
        try:
            run_reference_bot(
                client,
                campaign,
                player_id=f"bot-{args.seed:08d}",
                rng_seed=args.seed,
            )
        except BotFailure as exc:
            return _fail(f"playthrough failed: {exc}")
    print(f"wall time {time.monotonic() - started:.2f}s", file=sys.stderr)
    return 0


# --- serve -----------------------------------------------------------------


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import ServiceConfig, create_app

    try:
        campaign = _resolve_campaign(args.campaign)
    except (OSError, CampaignError) as exc:
        return _fail(str(exc))

    profile_dir = _resolve_profile_dir(args.profile_dir)
    try:
        profile_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        return _fail(f"profile directory unusable: {exc}")

    ui_dir: Optional[Path] = Path(args.ui_dir) if args.ui_dir else None
    if ui_dir is not None and not ui_dir.is_dir():
        return _fail(f"ui directory not found: {ui_dir}")

    deterministic = args.deterministic or _env_flag(ENV_DETERMINISTIC)
    config = ServiceConfig(
        campaign=campaign,
        profile_dir=profile_dir,
        deterministic=deterministic,
        ui_dir=ui_dir,
    )
    app = create_app(config)

    port = args.port
    if port is None:
        port = int(os.environ.get(ENV_PORT, "8000"))
    try:
        sock = socket.create_server((args.host, port))
    except OSError as exc:
        return _fail(f"cannot bind {args.host}:{port}: {exc}")
    chosen = sock.getsockname()[1]

    logging.basicConfig(level=logging.INFO, stream=sys.stderr, format="%(message)s")
    print(f"serving on http://{args.host}:{chosen}", flush=True)
    server = uvicorn.Server(
        uvicorn.Config(app, log_level="warning", access_log=False)
    )
    server.run(sockets=[sock])
    return 0


# --- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cipherquest",
        description="Spy-themed cryptography trainer: validate, author, and serve campaigns.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", help="check a campaign file end to end")
    p_validate.add_argument("campaign", nargs="?", default=None,
                            help="campaign JSON file (default: shipped campaign)")
    p_validate.add_argument("--format", choices=("text", "json"), default="text")
    p_validate.set_defaults(func=cmd_validate)

    p_gen = sub.add_parser("gen", help="generate one instance (authoring; includes solution)")
    p_gen.add_argument("level_id")
    p_gen.add_argument("--seed", type=int, required=True)
    p_gen.add_argument("--campaign", default=None)
    p_gen.set_defaults(func=cmd_gen)

    p_solve = sub.add_parser("solve", help="solve a generated instance document")
    p_solve.add_argument("instance", help="path to an instance file, or - for stdin")
    p_solve.add_argument("--format", choices=("text", "json"), default="text")
    p_solve.set_defaults(func=cmd_solve)

    p_play = sub.add_parser("play", help="run a reference-bot playthrough")
    p_play.add_argument("--headless", action="store_true")
    p_play.add_argument("--bot", choices=("reference",), default="reference")
    p_play.add_argument("--seed", type=int, default=0)
    p_play.add_argument("--campaign", default=None)
    p_play.add_argument("--profile-dir", default=None)
    p_play.set_defaults(func=cmd_play)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=None,
                         help="0 picks an ephemeral port (printed on startup)")
    p_serve.add_argument("--campaign", default=None)
    p_serve.add_argument("--profile-dir", default=None)
    p_serve.add_argument("--deterministic", action="store_true")
    p_serve.add_argument("--ui-dir", default=None,
                         help="serve a built web client from this directory")
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
