"""End-to-end CLI checks, including the committed golden chain outputs."""

from __future__ import annotations

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from coalition_kit import are_isomorphic, parse_graph6
from coalition_kit.graphs import path

GOLDEN = Path(__file__).parent / "golden"


def run_cli(*args: str, env_extra: dict | None = None):
    env = dict(os.environ)
    env.setdefault("COALITION_KIT_JOBS", "1")
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "coalition_kit", *args],
        capture_output=True,
        text=True,
        env=env,
    )


def test_cnum_pentagon():
    result = run_cli("cnum", "--named", "C(5)")
    assert result.returncode == 0
    assert result.stdout.strip() == "5"


def test_sp_heptagon_fails_with_blocking_vertex():
    result = run_cli("sp", "--named", "C(7)")
    assert result.returncode == 1
    assert "blocking vertex 0" in result.stdout


def test_sp_json():
    result = run_cli("sp", "--named", "C(5)", "--json")
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload["is_sp"] is True
    assert payload["schema_version"] == 1
    assert payload["partner"]["0"] == 2  # antipodal-ish pair: {0,1} fails to dominate


@pytest.mark.parametrize(
    "expr,golden",
    [("C(4)", "chain_c4.txt"), ("C(5)", "chain_c5.txt"), ("P(3)", "chain_p3.txt")],
)
def test_chain_golden_outputs(expr, golden):
    result = run_cli("chain", "--named", expr)
    assert result.returncode == 0
    assert result.stdout == (GOLDEN / golden).read_text()


def test_chain_json_round_trips():
    result = run_cli("chain", "--named", "P(3)", "--json")
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload["lscc"]["kind"] == "Infinite"
    assert payload["outcome"]["period"] == 2
    # the embedded graph6 records rebuild the same chain
    start = parse_graph6(payload["chain"][0])
    assert are_isomorphic(start, path(3))
    second = parse_graph6(payload["chain"][1])
    assert second.n == 3 and second.edge_count() == 1


def test_cg_with_partition():
    result = run_cli("cg", "--named", "C(4)", "--partition", "0,2;1;3", "--json")
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    cg = parse_graph6(payload["coalition_graph6"])
    assert cg.n == 3
    result = run_cli("cg", "--named", "C(4)")
    assert result.stdout.strip() == "C~"


def test_iso_command():
    assert run_cli("iso", "named:C(4)", "named:Kbip(2,2)").returncode == 0
    result = run_cli("iso", "C~", "Cl")
    assert result.returncode == 1
    assert "not isomorphic" in result.stdout


def test_family_commands():
    result = run_cli("family", "generate", "--spec", "h1:P1=3,Q1=0,seed=0")
    assert result.returncode == 0
    g6 = result.stdout.strip()
    result = run_cli("family", "recognize", "--family", "h1", "--g6", g6, "--json")
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload["member"] is True
    result = run_cli("family", "recognize", "--family", "f2", "--named", "C(7)")
    assert result.returncode == 1


def test_verify_command():
    result = run_cli("verify", "--theorem", "thm1", "--max-order", "5", "--json")
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload["passed"] is True and payload["theorem_id"] == "thm1"
    result = run_cli("verify", "--theorem", "thm1", "--max-order", "5")
    assert "thm1: PASS" in result.stdout


def test_sweep_command(tmp_path):
    result = run_cli("sweep", "--max-order", "4", "--json")
    assert result.returncode == 0
    records = [json.loads(line) for line in result.stdout.splitlines()]
    assert len(records) == 1 + 2 + 4 + 11
    assert all(rec["schema_version"] == 1 for rec in records)

    f = tmp_path / "one.g6"
    f.write_text("C~\n")
    result = run_cli("sweep", "--file", str(f), "--json")
    rec = json.loads(result.stdout)
    assert rec["lscc"] == {"kind": "Finite", "value": 1}
    assert rec["status"] == "out-of-characterized-range"


def test_file_input_processes_every_line(tmp_path):
    f = tmp_path / "two.g6"
    f.write_text("Cl\nBg\n")
    result = run_cli("chain", "--file", str(f))
    lines = result.stdout.splitlines()
    assert len(lines) == 2 and lines[0].startswith("Cl:") and lines[1].startswith("Bg:")
    result = run_cli("sp", "--file", str(f))
    assert result.returncode == 0  # both are singleton-partition graphs


def test_usage_errors_exit_two():
    assert run_cli("sp").returncode == 2  # no input source
    assert run_cli("sp", "--named", "C(4)", "--g6", "C~").returncode == 2
    assert run_cli("sp", "--g6", "notvalid~~~").returncode == 2
    assert run_cli("cnum", "--named", "C(2)").returncode == 2
    assert run_cli("verify", "--theorem", "nope").returncode == 2
    assert run_cli("sweep").returncode == 2
    assert run_cli("nonsense").returncode == 2


def test_jobs_env_default():
    result = run_cli(
        "verify", "--theorem", "thm1", "--max-order", "4", env_extra={"COALITION_KIT_JOBS": "2"}
    )
    assert result.returncode == 0
