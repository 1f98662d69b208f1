from __future__ import annotations

import json
import subprocess
import sys

import pytest
from conftest import FIXTURES

from bexpand.cli import main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    report = json.loads(out.out) if out.out.strip().startswith("{") else None
    return code, report, out


def fx(name: str) -> str:
    return str(FIXTURES / name)


def test_augment_p_goal_reports_budget(capsys):
    code, rep, _ = run(capsys, "augment", fx("p4.txt"), "--p", 2, "--goal", "centered")
    assert code == 0
    assert rep["results"]["steps"] == 4 and rep["results"]["step_origin"] == "N(p,p)"
    assert rep["schema"] == 1 and len(rep["input"]["sha256"]) == 64


def test_augment_edgeless(capsys):
    code, rep, _ = run(capsys, "augment", fx("edgeless3.txt"), "--steps", 3)
    assert code == 0
    assert set(rep["results"]["md_sequence"]) == {0}


def test_augment_directed_path(capsys):
    code, rep, _ = run(capsys, "augment", fx("directed_path.txt"), "--steps", 2, "--directed")
    assert code == 0
    assert rep["results"]["final_arcs"] == 6 and rep["results"]["final_md"] == 3


def test_augment_needs_steps_or_p(capsys):
    code, _, out = run(capsys, "augment", fx("p4.txt"))
    assert code == 2 and "error" in out.err


def test_color_p4_both(capsys, tmp_path):
    target = tmp_path / "col.json"
    code, rep, _ = run(capsys, "color", fx("p4.txt"), "--p", 2, "--verify", "both", "--out", target)
    res = rep["results"]
    assert code == 0
    assert res["palette"] <= res["palette_bound"] == 2 * res["final_md"] + 1
    assert res["verdicts"]["centered"]["ok"] and res["verdicts"]["lowtd"]["ok"]
    assert json.loads(target.read_text())["colors"] == res["colors"]


def test_color_k5_p1(capsys):
    code, rep, _ = run(capsys, "color", fx("k5.txt"), "--p", 1)
    assert code == 0 and rep["results"]["palette"] >= 5


def test_color_c4_centered(capsys):
    code, rep, _ = run(capsys, "color", fx("c4.txt"), "--p", 3, "--verify", "centered")
    assert code == 0
    assert rep["results"]["steps"] == 9
    assert rep["results"]["verdicts"]["centered"]["ok"]


def test_color_guard_exit_code(capsys):
    code, _, out = run(capsys, "color", fx("p7.txt"), "--p", 2, "--verify", "centered",
                       "--exhaustive-limit", 5)
    assert code == 2 and "limit 5" in out.err


@pytest.mark.parametrize("name,value", [("p7.txt", 3), ("k4.txt", 4), ("k3_plus_p2.txt", 3)])
def test_treedepth_command(capsys, name, value):
    code, rep, _ = run(capsys, "treedepth", fx(name))
    assert code == 0 and rep["results"]["treedepth"] == value


def test_treedepth_guard(capsys):
    code, _, out = run(capsys, "treedepth", fx("p7.txt"), "--limit", 3)
    assert code == 2 and "guard" in out.err


def test_grad_examples(capsys):
    code, rep, _ = run(capsys, "grad", fx("c4.txt"), "--rank", 1, "--mode", "exact")
    assert code == 0 and rep["results"]["value"] == "1/1"
    code, rep, _ = run(capsys, "grad", fx("k4.txt"), "--rank", 0)
    assert rep["results"]["value"] == "3/2"
    code, rep, _ = run(capsys, "grad", fx("subdivided_k4.txt"), "--rank", 1,
                       "--mode", "heuristic", "--seed", 0)
    num, den = map(int, rep["results"]["value"].split("/"))
    assert rep["results"]["kind"] == "lower-bound" and 2 * num <= 3 * den


def test_grad_profile_and_complexity(capsys):
    code, rep, _ = run(capsys, "grad", fx("c4.txt"), "--rank", 2, "--mode", "profile")
    assert code == 0
    assert rep["results"]["profile"]["2"] == {"value": "1/1", "kind": "exact"}
    code, rep, _ = run(capsys, "grad", fx("c4.txt"), "--rank", 0, "--complexity", 2)
    assert code == 0 and rep["results"]["value"] == "5/2"


def test_verify_examples(capsys):
    code, rep, _ = run(capsys, "verify", fx("c4.txt"), "--coloring", fx("c4_two_coloring.json"),
                       "--p", 3, "--kind", "centered")
    assert code == 1
    assert rep["results"]["ok"] is False and rep["results"]["witness"] == [0, 1, 2, 3]
    for kind in ("centered", "lowtd"):
        for p in (1, 2, 4):
            code, rep, _ = run(capsys, "verify", fx("p4.txt"), "--coloring", fx("rainbow4.json"),
                               "--p", p, "--kind", kind)
            assert code == 0 and rep["results"]["ok"] is True
    code, rep, _ = run(capsys, "verify", fx("p4.txt"), "--coloring", fx("p4_alternating.json"),
                       "--p", 2, "--kind", "lowtd")
    assert code == 1 and rep["results"]["witness"]["treedepth"] == 3


def test_verify_domain_mismatch(capsys):
    code, _, out = run(capsys, "verify", fx("k5.txt"), "--coloring", fx("rainbow4.json"),
                       "--p", 2, "--kind", "centered")
    assert code == 2 and "error" in out.err


def test_dimacs_input(capsys):
    code, rep, _ = run(capsys, "grad", fx("petersen.col"), "--rank", 0)
    assert code == 0 and rep["results"]["value"] == "3/2"


def test_text_format(capsys):
    code, _, out = run(capsys, "treedepth", fx("k4.txt"), "--format", "text")
    assert code == 0
    assert "command: treedepth" in out.out and "results.treedepth: 4" in out.out


def test_missing_file_and_parse_error(capsys, tmp_path):
    code, _, _ = run(capsys, "treedepth", tmp_path / "nope.txt")
    assert code == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1\n2 2\n")
    code, _, out = run(capsys, "treedepth", bad)
    assert code == 2 and "line 2" in out.err


def test_usage_error_exits_two(capsys):
    with pytest.raises(SystemExit) as info:
        main(["color", fx("p4.txt")])
    assert info.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "bexpand", "treedepth", fx("k4.txt")],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["treedepth"] == 4
