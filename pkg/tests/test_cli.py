from __future__ import annotations

import json
import subprocess
import sys

import pytest

from conftest import CORPUS
from euclid.script.cli import main

I1 = CORPUS / "golden" / "euclid_i1.euc"


@pytest.fixture
def write(tmp_path):
    def write(text: str, name: str = "s.euc"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


def test_run_prints_steps(capsys):
    assert main(["run", str(I1)]) == 0
    out = capsys.readouterr().out
    assert "equilateral(" in out and out.rstrip().endswith("asserts")


def test_run_writes_trace_and_svg(tmp_path):
    trace, svg = tmp_path / "t.json", tmp_path / "t.svg"
    assert main(["run", str(I1), "--trace", str(trace), "--svg", str(svg)]) == 0
    assert trace.read_text() == I1.with_suffix(".trace.json").read_text()
    assert svg.read_text() == I1.with_suffix(".svg").read_text()


def test_seed_changes_free_choices(write, tmp_path):
    src = write("let A = point()\nlet B = point()\n")
    outs = []
    for seed in ("0", "0", "9"):
        out = tmp_path / f"{len(outs)}.json"
        assert main(["run", src, "--seed", seed, "--trace", str(out)]) == 0
        outs.append(json.loads(out.read_text()))
    assert outs[0] == outs[1] and outs[0]["steps"] != outs[2]["steps"]


def test_failed_assert_exits_1_with_partial_trace(write, tmp_path, capsys):
    out = tmp_path / "partial.json"
    src = write("let A = (0, 0)\nlet B = (1, 0)\nassert between(A, B, A)\nlet C = (2, 2)\n")
    assert main(["run", src, "--trace", str(out)]) == 1
    assert "between" in capsys.readouterr().err
    assert len(json.loads(out.read_text())["steps"]) == 2


def test_precondition_failure_exits_1(write):
    assert main(["run", write("let A = (0, 0)\nlet l = join(A, A)\n")]) == 1


def test_max_depth(write):
    src = str(I1)
    assert main(["run", src, "--max-depth", "0"]) == 1
    assert main(["run", src, "--max-depth", "1"]) == 0


def test_parse_error_exits_2(write, capsys):
    assert main(["run", write("let A point()\n")]) == 2
    assert ":1:7:" in capsys.readouterr().err
    assert main(["check", write("let l = join(A)\n")]) == 2
    assert main(["fmt", write("let l = join(A)\n")]) == 2


def test_missing_file_exits_2(tmp_path):
    assert main(["run", str(tmp_path / "absent.euc")]) == 2


def test_check(write, capsys):
    assert main(["check", str(I1)]) == 0
    assert main(["check", write("let A = (1, 1)\nlet l = join(A, A)\n")]) == 1
    assert "cannot hold" in capsys.readouterr().err


def test_fmt(write, capsys):
    assert main(["fmt", write("let   A=( 2/4,0)\n")]) == 0
    assert capsys.readouterr().out == "let A = (1/2, 0)\n"


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "euclid.script.cli", "fmt", str(I1)],
                       capture_output=True, text=True, check=False)
    assert r.returncode == 0 and r.stdout == I1.read_text()
