import json
import os

import pytest

from rgbtiling import corpus, export
from rgbtiling.cli import dispatch
from rgbtiling.embedding import format_graph, parse_graph
from rgbtiling.enumeration import enumerate_tilings
from rgbtiling.tiling import G, MODE_RGB, single_mode


def test_graph_file_roundtrip():
    for name in corpus.CORPUS:
        e = corpus.get(name)
        again = parse_graph(format_graph(e))
        assert again.rotation == e.rotation
        assert again.outer_facets == e.outer_facets


def test_tiling_file_roundtrip():
    e = corpus.icosahedron()
    t = next(enumerate_tilings(e, MODE_RGB))
    again = export.parse_tiling(export.format_tiling(t), e)
    assert again.mode == t.mode
    assert dict(again.colors) == dict(t.colors)


def test_tiling_file_single_mode_names():
    e = corpus.k4()
    t = next(enumerate_tilings(e, single_mode(G)))
    text = export.format_tiling(t)
    assert "mode=single:green" in text
    assert export.parse_tiling(text, e).mode == "single:g"


def test_json_deterministic():
    e = corpus.octahedron()
    t = next(enumerate_tilings(e, MODE_RGB))
    a = export.dumps(export.tiling_json(t))
    b = export.dumps(export.tiling_json(t))
    assert a == b
    assert json.loads(a)


def test_dot_outputs():
    e = corpus.k4()
    t = next(enumerate_tilings(e, MODE_RGB))
    dot = export.tiling_dot(t)
    assert dot.startswith("graph")
    assert "--" in dot
    from rgbtiling.dual import extract_canal_system

    system = extract_canal_system(e, t, "r")
    cdot = export.canal_system_dot(t, system)
    assert "dashed" in cdot


def test_abandoned_edges_render_doubled():
    e = corpus.k4()
    t = next(enumerate_tilings(e, MODE_RGB)).with_colors({(0, 1): "y"}, mode="partial")
    dot = export.tiling_dot(t)
    assert "orange:orange" in dot


def run_cli(*argv):
    return dispatch(list(argv))


def test_cli_validate_corpus_and_file(tmp_path):
    assert run_cli("validate", "corpus:k4") == 0
    p = tmp_path / "k4.graph"
    p.write_text(format_graph(corpus.k4()))
    assert run_cli("validate", str(p)) == 0


def test_cli_bad_file(tmp_path):
    p = tmp_path / "bad.graph"
    p.write_text("not a graph\n")
    assert run_cli("validate", str(p)) == 2
    assert run_cli("validate", str(tmp_path / "missing.graph")) == 2


def test_cli_tile_count(capsys):
    assert run_cli("tile", "corpus:icosahedron", "--mode", "rgb", "--count") == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["count"] == 60


def test_cli_color_and_induce(capsys):
    assert run_cli("color", "corpus:k4", "--induce") == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["count"] == 24
    assert "induced_tiling" in payload


def test_cli_odd_cycle_exit_codes(tmp_path):
    assert run_cli("odd-cycle", "corpus:k4") == 1  # none exists
    seed = corpus.seeded_tiling("seven-semi")
    p = tmp_path / "seed.tiling"
    p.write_text(export.format_tiling(seed))
    assert run_cli(
        "odd-cycle", "corpus:seven-semi", "--tiling", str(p), "--color", "g"
    ) == 0


def test_cli_grand_complete(capsys):
    assert run_cli("grand", "corpus:k4", "--mode", "single:g") == 0
    capsys.readouterr()
    assert run_cli("complete", "corpus:k4", "--mode", "single:g") == 0


def test_cli_complete_odd_conflict(capsys):
    assert run_cli("complete", "corpus:ico5", "--mode", "single:g") == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["completed"] is False
    assert len(payload["odd_conflict_cycle"]) == 5


def test_cli_canals_routes_orient(capsys):
    assert run_cli("canals", "corpus:icosahedron", "--color", "r") == 0
    capsys.readouterr()
    assert run_cli(
        "routes", "corpus:icosahedron", "--mode", "single:g",
        "--from-edge", "0,1", "--apex", "2", "--to", "ring",
    ) in (0, 1)
    capsys.readouterr()
    assert run_cli(
        "orient", "corpus:icosahedron", "--mode", "single:g",
        "--from-edge", "0,1", "--apex", "2",
    ) == 0


def test_cli_atlas_unique_yyy(capsys):
    assert run_cli("atlas", "--n", "6", "--sym", "klein4") == 0
    payload = json.loads(capsys.readouterr().out)
    yyy = [c for c in payload["classes"] if c["signature"] == ["Y", "Y", "Y"]]
    assert len(yyy) == 1


def test_cli_surgery(capsys):
    assert run_cli(
        "surgery", "corpus:td55", "--remove", "0,1", "--merge", "4,6",
        "--add", "3,7",
    ) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["validation"]["vertex_count"] == 7


def test_cli_unknown_suite():
    assert run_cli("check", "nope") == 2


def test_cli_check_atlas_with_report(tmp_path, capsys):
    out = tmp_path / "report"
    assert run_cli("check", "atlas", "--out", str(out)) == 0
    assert (out / "results.csv").exists()
    assert (out / "results.json").exists()
    pngs = list(out.glob("*.png"))
    assert len(pngs) == len(corpus.CORPUS)


def test_cli_draw(tmp_path):
    target = tmp_path / "k4.png"
    assert run_cli("draw", "corpus:k4", "--out", str(target)) == 0
    assert target.exists()
    assert target.stat().st_size > 0


def test_cli_diamond_type(tmp_path, capsys):
    e = corpus.icosahedron()
    t = next(enumerate_tilings(e, "partial", abandoned=((0, 1),)))
    p = tmp_path / "p.tiling"
    p.write_text(export.format_tiling(t))
    assert run_cli(
        "diamond-type", "corpus:icosahedron", "--tiling", str(p), "--edge", "0,1"
    ) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["kind"] in ("A", "B2", "B3", "C")


def test_cli_rotate_and_explore(tmp_path, capsys):
    e = corpus.icosahedron()
    t = next(enumerate_tilings(e, "partial", abandoned=((0, 1),)))
    p = tmp_path / "p.tiling"
    p.write_text(export.format_tiling(t))
    assert run_cli(
        "rotate", "corpus:icosahedron", "--tiling", str(p), "--td", "0",
        "--schedule", "auto,auto",
    ) in (0, 1)
    capsys.readouterr()
    assert run_cli(
        "explore", "corpus:icosahedron", "--tiling", str(p), "--td", "0",
        "--max-states", "40", "--format", "dot",
    ) == 0
    out = capsys.readouterr().out
    assert out.startswith("digraph")
