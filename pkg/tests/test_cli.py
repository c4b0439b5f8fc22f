import subprocess
import sys

import pytest

from hypercolor.cli import CSV_HEADER, run
from hypercolor.core import parse_coloring, write_instance
from hypercolor.instance_gen import fano


@pytest.fixture
def fano_file(tmp_path):
    path = tmp_path / "fano.h"
    path.write_bytes(write_instance(fano()))
    return path


def test_color_fano(fano_file, tmp_path, capsys):
    out = tmp_path / "fano.col"
    assert run(["color", str(fano_file), "-o", str(out)]) == 0
    assert capsys.readouterr().out.strip() == "colors=3 bound=3"
    assert parse_coloring(out.read_bytes()).palette == 3
    assert run(["verify", str(fano_file), str(out), "--kind", "hyper"]) == 0


def test_color_to_stdout_keeps_summary_on_stderr(fano_file, capsys):
    assert run(["color", str(fano_file)]) == 0
    captured = capsys.readouterr()
    assert parse_coloring(captured.out).palette == 3
    assert captured.err.strip() == "colors=3 bound=3"


def test_mode_k_refuses_fano(fano_file, capsys):
    assert run(["color", str(fano_file), "--mode", "k"]) == 2
    assert "k >= 3" in capsys.readouterr().err


def test_verify_detects_monochromatic_triple(fano_file, tmp_path, capsys):
    bad = tmp_path / "bad.col"
    bad.write_bytes(b"c 0 0\nc 1 0\nc 2 0\nc 3 1\nc 4 1\nc 5 1\nc 6 1\npalette 2\n")
    assert run(["verify", str(fano_file), str(bad), "--kind", "hyper"]) == 1
    assert "monochromatic_hyperedge 0" in capsys.readouterr().out


def test_gen_examples(capsys):
    assert run(["gen", "hyper", "n=5", "m=0", "--seed", "1"]) == 0
    assert capsys.readouterr().out == "h 5\n"
    assert run(["gen", "graph", "n=6", "p=1/2", "--seed", "7"]) == 0
    assert capsys.readouterr().out.startswith("g 6\na 0 2\n")
    assert run(["gen", "hyper", "n=5", "m=3", "lo=3", "hi=3", "cap=3", "--seed", "42"]) == 0
    assert capsys.readouterr().out == "h 5\ne 1 2 3\ne 0 2 4\ne 0 3 4\n"


def test_dynamic_roundtrip(tmp_path, capsys):
    g = tmp_path / "c5.g"
    g.write_bytes(b"g 5\na 0 1\na 1 2\na 2 3\na 3 4\na 4 0\n")
    col = tmp_path / "c5.col"
    assert run(["dynamic", str(g), "-o", str(col)]) == 0
    assert capsys.readouterr().out.strip() == "colors=3 bound=3"
    assert run(["verify", str(g), str(col), "--kind", "dynamic"]) == 0


@pytest.mark.parametrize("argv", [
    ["color", "does-not-exist.h"],
    ["gen", "hyper", "n=5"],
    ["gen", "hyper", "n=5", "m=1", "bogus=1"],
    ["bench", "--n", "9:3"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(argv):
    assert run(argv) == 2


def test_parse_error_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.h"
    bad.write_bytes(b"h 3\ne 0\n")
    assert run(["color", str(bad)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_internal_violation_exit_3(fano_file, monkeypatch):
    from hypercolor import cli
    from hypercolor.core import InvariantViolation

    def broken(*a, **kw):
        raise InvariantViolation("boom")

    monkeypatch.setattr(cli, "color_k_plus_1", broken)
    assert run(["color", str(fano_file)]) == 3


def test_bench_csv_and_figure(tmp_path, capsys):
    fig = tmp_path / "bench.png"
    assert run(["bench", "--count", "20", "--seed", "3", "--figure", str(fig)]) == 0
    first = capsys.readouterr().out
    lines = first.splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert len(lines) == 21
    assert all(line.endswith(",true") for line in lines[1:])
    assert fig.stat().st_size > 0
    assert run(["bench", "--count", "20", "--seed", "3"]) == 0
    assert capsys.readouterr().out == first


def test_module_entry_point(fano_file):
    proc = subprocess.run([sys.executable, "-m", "hypercolor", "color", str(fano_file)],
                          capture_output=True)
    assert proc.returncode == 0
    assert proc.stderr.strip() == b"colors=3 bound=3"
