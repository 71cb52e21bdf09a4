import io
import os
import subprocess
import sys
from pathlib import Path

import pandas as pd
import pytest

from core.cli import main
from core.formats import encode_graph6, parse_matrix, read_orbit_dump
from tests.conftest import HAMMING_PIVOTED_ROWS, HAMMING_ROWS


@pytest.fixture
def hamming_file(tmp_path):
    path = tmp_path / "hamming.txt"
    path.write_text("\n".join(HAMMING_ROWS) + "\n", encoding="utf-8")
    return str(path)


@pytest.fixture
def hamming_graph_file(tmp_path, hamming_graph):
    path = tmp_path / "hamming.g6"
    path.write_text(encode_graph6(hamming_graph) + "\n", encoding="utf-8")
    return str(path)


def test_pivot_without_swap_gives_equivalent_generator(hamming_graph_file, capsys):
    assert main(["pivot", hamming_graph_file, "2", "7", "--no-swap", "--to", "matrix"]) == 0
    assert capsys.readouterr().out.split() == HAMMING_PIVOTED_ROWS


def test_pivot_on_k2_is_identity(capsys):
    assert main(["pivot", "A_", "1", "2"]) == 0
    assert capsys.readouterr().out == "A_\n"


def test_pivot_methods_agree(hamming_graph_file, capsys):
    outputs = []
    for method in ("lc-compose", "classes", "bipartite"):
        assert main(["pivot", hamming_graph_file, "2", "7", "--def", method]) == 0
        outputs.append(capsys.readouterr().out)
    assert len(set(outputs)) == 1


def test_pivot_on_non_edge_fails_with_one_line(hamming_graph_file, capsys):
    assert main(["pivot", hamming_graph_file, "1", "2"]) == 2
    err = capsys.readouterr().err.strip()
    assert err == "error: not-an-edge: {1,2} is not an edge"


def test_orbit_commands(hamming_graph_file, capsys):
    assert main(["orbit", "Cr"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# orbit=ELC size=2")
    assert len(read_orbit_dump(out)) == 2

    assert main(["orbit", hamming_graph_file, "--labeled"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# orbit=ELC labeled=28")

    assert main(["orbit", hamming_graph_file, "--stats"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("size=") and "delta_left=2" in out

    assert main(["orbit", "Cr", "--lc"]) == 0
    assert capsys.readouterr().out.startswith("# orbit=LC size=4")


def test_orbit_on_disconnected_graph_fails(capsys):
    assert main(["orbit", "C`"]) == 2
    assert capsys.readouterr().err.startswith("error: disconnected:")


def test_code_commands(hamming_file, tmp_path, capsys):
    assert main(["code", hamming_file, "mindist"]) == 0
    assert capsys.readouterr().out == "3\n"
    assert main(["code", hamming_file, "mindist", "--via-orbit"]) == 0
    assert capsys.readouterr().out == "3\n"
    assert main(["code", hamming_file, "infosets", "--via-orbit"]) == 0
    assert capsys.readouterr().out == "28\n"

    other = tmp_path / "pivoted.txt"
    other.write_text("\n".join(HAMMING_PIVOTED_ROWS) + "\n", encoding="utf-8")
    assert main(["code", hamming_file, "equiv", str(other)]) == 0
    assert capsys.readouterr().out == "equivalent\n"

    assert main(["code", hamming_file, "dual"]) == 0
    assert parse_matrix(capsys.readouterr().out).k == 3

    single = tmp_path / "rep.txt"
    single.write_text("11\n", encoding="utf-8")
    assert main(["code", str(single), "summary"]) == 0
    assert capsys.readouterr().out == "[2,1,2] indecomposable self-dual isodual\n"


def test_code_rank_deficient_matrix(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("110\n110\n", encoding="utf-8")
    assert main(["code", str(path), "mindist"]) == 2
    assert capsys.readouterr().err.startswith("error: rank-deficient:")


def test_census_bipartite_with_codes(tmp_path, capsys):
    out_dir = tmp_path / "reps"
    assert main(["census", "bipartite", "6", "--codes", "--threads", "1", "--out-dir", str(out_dir)]) == 0
    df = pd.read_csv(io.StringIO(capsys.readouterr().out), sep="\t")
    row = df[df["n"] == 6].iloc[0]
    assert (row["i"], row["t"], row["i_codes"], row["i_isodual"]) == (8, 22, 13, 3)
    assert (out_dir / "bipartite-6.txt").read_text(encoding="utf-8").startswith("# n=6 orbits=8")


def test_census_stream(tmp_path, capsys):
    from infra.atlas_stream import write_stream
    path = tmp_path / "graphs5.g6"
    write_stream(5, str(path))
    assert main(["census", "stream", str(path), "--threads", "1"]) == 0
    df = pd.read_csv(io.StringIO(capsys.readouterr().out), sep="\t")
    assert df["i"].tolist() == [10]


def test_census_guard(capsys):
    assert main(["census", "bipartite", "20"]) == 2
    assert capsys.readouterr().err.startswith("error: guard-exceeded:")


@pytest.mark.parametrize("argv", [
    ["census", "stream", "graphs.g6", "--codes"],
    ["census", "stream", "graphs.g6", "--db", "census.db"],
    ["census", "stream", "graphs.g6", "--refine"],
    ["census", "bipartite", "3", "--lc"],
    ["census", "bipartite", "3", "--refine"],
])
def test_census_rejects_flags_of_the_other_mode(argv, capsys):
    assert main(argv) == 2
    err = capsys.readouterr().err
    assert err.startswith("error: bad-format:")
    assert err.count("\n") == 1


def test_bad_environment_fails_with_one_line(tmp_path):
    root = Path(__file__).resolve().parent.parent
    env = dict(os.environ, ELC_THREADS="zero", ELC_LOG_DIR=str(tmp_path))
    proc = subprocess.run([sys.executable, "-m", "core.cli", "census", "bipartite", "2"],
                          cwd=root, env=env, capture_output=True, text=True, timeout=120)
    assert proc.returncode == 2
    assert proc.stderr.startswith("error: bad-config:")
    assert "ELC_THREADS" in proc.stderr
    assert proc.stderr.count("\n") == 1
    assert "Traceback" not in proc.stderr


def test_convert(tmp_path, hamming_file, capsys):
    assert main(["convert", "Cr", "--to", "edges"]) == 0
    assert capsys.readouterr().out == "# n=4\n1 2\n1 3\n2 4\n3 4\n"
    assert main(["convert", hamming_file, "--from", "matrix", "--to", "dot"]) == 0
    assert capsys.readouterr().out.count("[shape=box]") == 3
