import csv
import io
import json
import random
import subprocess
import sys

import pytest

from authorship.bigraph import author_degrees, build_pag
from authorship.cli import main
from authorship.coauthor import build_cag
from authorship.corpus import parse_corpus
from authorship.mixing import assortativity
from authorship.synth import synth_jsonl

from conftest import FIG1_JSONL, FIXTURES

BUNDLE = {
    "summary.json", "authors_per_paper.csv", "papers_per_author.csv", "coauthors_per_author.csv",
    "mixing_papers.csv", "mixing_coauthors.csv", "trend.csv",
    "cag.graphml", "cag.dot", "pag.graphml", "pag.dot",
}


def test_worked_example_bundle(tmp_path):
    src = tmp_path / "fig1.jsonl"
    src.write_bytes(FIG1_JSONL)
    out = tmp_path / "out"
    assert main(["analyze", str(src), "--out", str(out)]) == 2  # too small to fit power laws
    assert {p.name for p in out.iterdir()} == BUNDLE
    summary = json.loads((out / "summary.json").read_text())
    assert summary["authors_per_paper"]["avg"] == 2.5
    assert summary["papers_per_author"]["avg"] == 1.25
    assert summary["coauthors_per_author"]["avg"] == 2.0
    assert summary["assortativity"]["coauthors"]["n_edges"] == 8
    assert summary["authors_per_paper"]["fit"] is None
    assert summary["problems"]


def test_empty_file_exit_1_no_outputs(tmp_path, capsys):
    src = tmp_path / "empty.jsonl"
    src.write_bytes(b"")
    out = tmp_path / "out"
    assert main(["analyze", str(src), "--out", str(out)]) == 1
    assert not out.exists()
    assert "no paper records" in capsys.readouterr().err


def test_malformed_exit_1(tmp_path):
    src = tmp_path / "bad.csv"
    src.write_text("id,year,authors\nP1,notayear,A\n")
    assert main(["analyze", str(src), "--out", str(tmp_path / "o")]) == 1
    assert main(["analyze", str(tmp_path / "missing.jsonl"), "--out", str(tmp_path / "o")]) == 1


def test_csv_input_and_export_selection(tmp_path):
    src = tmp_path / "c.csv"
    src.write_text('id,year,authors\nP1,2000,"A1;A2"\nP2,2001,"A2;A3;A4"\n')
    out = tmp_path / "out"
    main(["analyze", str(src), "--out", str(out), "--export", "dot"])
    names = {p.name for p in out.iterdir()}
    assert "pag.dot" in names and "pag.graphml" not in names
    with pytest.raises(SystemExit):
        main(["analyze", str(src), "--export", "png"])


def test_golden_summary_pinned(tmp_path):
    out = tmp_path / "out"
    assert main(["analyze", str(FIXTURES / "golden.jsonl"), "--out", str(out)]) == 0
    assert (out / "summary.json").read_text() == (FIXTURES / "golden_summary.json").read_text()


def test_summary_equals_library_values(tmp_path):
    out = tmp_path / "out"
    main(["analyze", str(FIXTURES / "golden.jsonl"), "--out", str(out)])
    summary = json.loads((out / "summary.json").read_text())
    corpus = parse_corpus((FIXTURES / "golden.jsonl").read_bytes())
    g = build_pag(corpus)
    cg = build_cag(g)
    assert summary["papers_per_author"]["max"] == max(author_degrees(g))
    r = assortativity(cg, "papers").r
    assert summary["assortativity"]["papers"]["r"] == float(f"{r:.6g}")
    rows = list(csv.DictReader(io.StringIO((out / "trend.csv").read_text())))
    assert [r["is_extrapolated"] for r in rows].count("true") == 5
    assert rows[-1]["year"] == "2015"


def test_parameters_flow_through(tmp_path):
    out = tmp_path / "out"
    main(["analyze", str(FIXTURES / "golden.jsonl"), "--out", str(out), "--top-k", "2", "--alpha", "0.05", "--horizon", "3"])
    summary = json.loads((out / "summary.json").read_text())
    assert len(summary["top_authors"]["by_papers"]) == 2
    assert summary["papers_per_author"]["fit"]["alpha"] == 0.05
    assert len(summary["trend"]["papers"]["extrapolation"]) == 3
    assert main(["analyze", str(FIXTURES / "golden.jsonl"), "--top-k", "0"]) == 1


def test_synth_single(capsys):
    assert main(["synth", "--seed", "1", "--papers", "1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 1
    assert len(json.loads(lines[0])["authors"]) == 1


def test_synth_deterministic(capsys):
    main(["synth", "--seed", "9", "--papers", "300"])
    first = capsys.readouterr().out
    main(["synth", "--seed", "9", "--papers", "300"])
    assert capsys.readouterr().out == first
    main(["synth", "--seed", "10", "--papers", "300"])
    assert capsys.readouterr().out != first


@pytest.mark.parametrize("args", [["--papers", "0"], ["--phi", "-0.5"], ["--phi", "-1"]])
def test_synth_invalid(args):
    assert main(["synth", *args]) == 1


def test_synth_corpus_shape():
    rng = random.Random(0)
    for _ in range(5):
        n = rng.randint(2, 400)
        corpus = parse_corpus(synth_jsonl(rng.randint(0, 99), n, -2.0).encode())
        assert corpus.n_papers == n
        assert all(p.authors for p in corpus.papers)
        assert corpus.raw_name_count == corpus.total_incidences


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "authorship", "synth", "--papers", "3", "--seed", "2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert len(proc.stdout.splitlines()) == 3
