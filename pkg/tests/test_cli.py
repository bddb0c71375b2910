"""Command-line contract: subcommands, exit codes, determinism, round-trips."""
import json
import subprocess
import sys

import pytest

from cipherquest.campaign import shipped_campaign, shipped_campaign_text
from cipherquest.cli import main


@pytest.fixture(scope="module")
def shipped_path(tmp_path_factory):
    path = tmp_path_factory.mktemp("campaign") / "campaign.json"
    path.write_text(shipped_campaign_text(), encoding="utf-8")
    return path


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestValidate:
    def test_shipped_campaign_passes(self, capsys, shipped_path):
        code, out, _ = run(capsys, ["validate", str(shipped_path)])
        assert code == 0
        assert "5 chapters, 12 levels, all levels solvable" in out
        assert "topic coverage complete" in out

    def test_per_level_lines(self, capsys, shipped_path):
        _, out, _ = run(capsys, ["validate", str(shipped_path)])
        assert "level-01 CAESAR ok (5 seeds)" in out
        assert "level-12 DH_EXCHANGE ok (5 seeds)" in out

    def test_json_format(self, capsys, shipped_path):
        code, out, _ = run(capsys, ["validate", str(shipped_path), "--format", "json"])
        assert code == 0
        report = json.loads(out)
        assert report["ok"] is True
        assert report["chapters"] == 5
        assert len(report["levels"]) == 12
        assert report["coverage_missing"] == []

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, ["validate", str(tmp_path / "nope.json")])
        assert code == 1
        assert "error:" in err

    def test_malformed_json_names_path(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{broken", encoding="utf-8")
        code, _, err = run(capsys, ["validate", str(bad)])
        assert code == 1
        assert "$" in err

    def test_missing_topic_coverage_names_topic(self, capsys, tmp_path):
        doc = json.loads(shipped_campaign_text())
        for level in doc["levels"]:
            level["topics"] = [t for t in level["topics"] if t != "Key Escrow"]
        for entry in doc["codex"]:
            entry["topics"] = [t for t in entry["topics"] if t != "Key Escrow"]
        stripped = tmp_path / "stripped.json"
        stripped.write_text(json.dumps(doc), encoding="utf-8")
        code, _, err = run(capsys, ["validate", str(stripped)])
        assert code == 1
        assert "Key Escrow" in err

    def test_structural_error_reported_with_path(self, capsys, tmp_path):
        doc = json.loads(shipped_campaign_text())
        doc["chapters"][0]["title"] = "Chapter One"
        broken = tmp_path / "broken.json"
        broken.write_text(json.dumps(doc), encoding="utf-8")
        code, _, err = run(capsys, ["validate", str(broken), ])
        assert code == 1
        assert "$.chapters" in err


class TestGen:
    def test_same_seed_identical_output(self, capsys):
        _, first, _ = run(capsys, ["gen", "level-01", "--seed", "42"])
        _, second, _ = run(capsys, ["gen", "level-01", "--seed", "42"])
        assert first == second

    def test_two_seeds_differ(self, capsys):
        _, first, _ = run(capsys, ["gen", "level-01", "--seed", "1"])
        _, second, _ = run(capsys, ["gen", "level-01", "--seed", "2"])
        assert json.loads(first)["challenge"] != json.loads(second)["challenge"]

    def test_watermark_present(self, capsys):
        _, out, _ = run(capsys, ["gen", "level-03", "--seed", "5"])
        document = json.loads(out)
        assert "contains solution" in document["watermark"]
        assert "solution" in document

    def test_caesar_shift_in_range(self, capsys):
        _, out, _ = run(capsys, ["gen", "level-01", "--seed", "42"])
        document = json.loads(out)
        assert document["kind"] == "CAESAR"
        assert 1 <= document["private"]["shift"] <= 25

    def test_unknown_level_exit_1(self, capsys):
        code, _, err = run(capsys, ["gen", "level-99", "--seed", "1"])
        assert code == 1
        assert "unknown level" in err

    def test_missing_seed_usage_error(self, capsys):
        code, _, _ = run(capsys, ["gen", "level-01"])
        assert code == 2

    def test_campaign_env_var_honored(self, capsys, tmp_path, monkeypatch):
        doc = json.loads(shipped_campaign_text())
        renamed = tmp_path / "alt.json"
        for level in doc["levels"]:
            level["id"] = level["id"].replace("level-", "mission-")
            level["prerequisites"] = [p.replace("level-", "mission-")
                                      for p in level["prerequisites"]]
        for chapter in doc["chapters"]:
            chapter["levels"] = [l.replace("level-", "mission-") for l in chapter["levels"]]
        for entry in doc["codex"]:
            entry["unlocked_by"] = entry["unlocked_by"].replace("level-", "mission-")
        renamed.write_text(json.dumps(doc), encoding="utf-8")
        monkeypatch.setenv("CIPHERQUEST_CAMPAIGN", str(renamed))
        code, out, _ = run(capsys, ["gen", "mission-01", "--seed", "1"])
        assert code == 0
        assert json.loads(out)["level_id"] == "mission-01"


class TestSolve:
    def test_round_trip(self, capsys, tmp_path):
        _, out, _ = run(capsys, ["gen", "level-01", "--seed", "7"])
        instance = tmp_path / "instance.json"
        instance.write_text(out, encoding="utf-8")
        code, out, _ = run(capsys, ["solve", str(instance)])
        assert code == 0
        assert "answer:" in out
        assert "verified" in out

    def test_json_format(self, capsys, tmp_path):
        _, out, _ = run(capsys, ["gen", "level-09", "--seed", "7"])
        instance = tmp_path / "instance.json"
        instance.write_text(out, encoding="utf-8")
        code, out, _ = run(capsys, ["solve", str(instance), "--format", "json"])
        assert code == 0
        report = json.loads(out)
        assert report["ok"] is True and report["verified"] is True

    def test_tampered_solution_exit_1(self, capsys, tmp_path):
        _, out, _ = run(capsys, ["gen", "level-01", "--seed", "7"])
        document = json.loads(out)
        document["solution"] = "COMPLETELY DIFFERENT SENTENCE THAN THE REAL ONE"
        instance = tmp_path / "tampered.json"
        instance.write_text(json.dumps(document), encoding="utf-8")
        code, _, err = run(capsys, ["solve", str(instance)])
        assert code == 1
        assert "error:" in err

    def test_garbage_file_exit_1(self, capsys, tmp_path):
        garbage = tmp_path / "garbage.json"
        garbage.write_text("[]", encoding="utf-8")
        code, _, _ = run(capsys, ["solve", str(garbage)])
        assert code == 1

    def test_every_level_round_trips_twenty_seeds(self, capsys, tmp_path):
        campaign = shipped_campaign()
        for level_id in campaign.levels_by_id:
            for seed in range(20):
                _, out, _ = run(capsys, ["gen", level_id, "--seed", str(seed)])
                path = tmp_path / f"{level_id}-{seed}.json"
                path.write_text(out, encoding="utf-8")
                code, out, _ = run(capsys, ["solve", str(path)])
                assert code == 0, (level_id, seed, out)


class TestPlay:
    def test_headless_playthrough_succeeds(self, capsys):
        code, out, _ = run(capsys, ["play", "--headless", "--bot", "reference"])
        assert code == 0
        assert "summary levels=12" in out
        assert "endpoints=6/6" in out
        assert "codex 21/21 unlocked" in out

    def test_transcript_shows_incorrect_then_correct(self, capsys):
        _, out, _ = run(capsys, ["play", "--headless"])
        lines = out.splitlines()
        miss = next(i for i, line in enumerate(lines) if "incorrect direction=" in line)
        hit = next(i for i, line in enumerate(lines) if " correct score=" in line)
        assert miss < hit

    def test_fixed_seed_identical_transcript(self, capsys):
        _, first, _ = run(capsys, ["play", "--headless", "--seed", "9"])
        _, second, _ = run(capsys, ["play", "--headless", "--seed", "9"])
        assert first == second

    def test_different_seeds_differ(self, capsys):
        _, first, _ = run(capsys, ["play", "--headless", "--seed", "1"])
        _, second, _ = run(capsys, ["play", "--headless", "--seed", "2"])
        assert first != second

    def test_without_headless_usage_error(self, capsys):
        code, _, _ = run(capsys, ["play"])
        assert code == 2


class TestUsage:
    def test_no_subcommand(self, capsys):
        assert run(capsys, [])[0] == 2

    def test_unknown_subcommand(self, capsys):
        assert run(capsys, ["frobnicate"])[0] == 2

    def test_module_entry_point(self, shipped_path):
        result = subprocess.run(
            [sys.executable, "-m", "cipherquest", "validate", str(shipped_path),
             "--format", "json"],
            capture_output=True, text=True, timeout=120,
        )
        assert result.returncode == 0
        assert json.loads(result.stdout)["ok"] is True
