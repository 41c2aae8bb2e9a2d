from __future__ import annotations

from pathlib import Path

import pytest

from coronacolor import (
    complete_graph,
    cycle_graph,
    format_graph,
    parse_coloring,
    parse_graph,
    path_graph,
    simple_corona,
    star_graph,
)
from coronacolor.cli import main


def write_graph(tmp_path: Path, name: str, g) -> str:
    path = tmp_path / f"{name}.graph"
    path.write_text(format_graph(g), encoding="utf-8")
    return str(path)


@pytest.fixture
def files(tmp_path):
    return {
        "k2": write_graph(tmp_path, "k2", complete_graph(2)),
        "k3": write_graph(tmp_path, "k3", complete_graph(3)),
        "k4": write_graph(tmp_path, "k4", complete_graph(4)),
        "c4": write_graph(tmp_path, "c4", cycle_graph(4)),
        "p3": write_graph(tmp_path, "p3", path_graph(3)),
        "k13": write_graph(tmp_path, "k13", star_graph(3)),
        "dir": tmp_path,
    }


def test_exact_k3_avd(files, capsys):
    assert main(["exact", "--graph", files["k3"], "--mode", "avd"]) == 0
    assert capsys.readouterr().out.strip() == "5"


def test_exact_modes(files, capsys):
    assert main(["exact", "--graph", files["c4"], "--mode", "total"]) == 0
    assert capsys.readouterr().out.strip() == "4"
    assert main(["exact", "--graph", files["c4"], "--mode", "chromatic"]) == 0
    assert capsys.readouterr().out.strip() == "2"
    assert main(["exact", "--graph", files["c4"], "--mode", "index"]) == 0
    assert capsys.readouterr().out.strip() == "2"


def test_build_round_trip(files, tmp_path):
    out = str(tmp_path / "corona.graph")
    assert main(["build", "--center", files["k2"], "--outer", files["k2"], "-o", out]) == 0
    built = parse_graph(Path(out).read_text(encoding="utf-8"))
    expected, _ = simple_corona(complete_graph(2), complete_graph(2))
    assert built == expected
    prov_text = Path(out + ".prov").read_text(encoding="utf-8")
    assert "vertex 0 origin center 0" in prov_text
    assert "edge 0 2 class fan 0" in prov_text


def test_build_l_corona(files, tmp_path):
    out = str(tmp_path / "l2.graph")
    assert main(["build", "--center", files["k2"], "--outer", files["k2"], "--l", "2", "-o", out]) == 0
    built = parse_graph(Path(out).read_text(encoding="utf-8"))
    assert built.n == 18


def test_color_then_verify_pipeline(files, tmp_path):
    corona_path = str(tmp_path / "corona.graph")
    col_path = str(tmp_path / "corona.col")
    trace_path = str(tmp_path / "corona.trace")
    assert main(["build", "--center", files["k2"], "--outer", files["k4"], "-o", corona_path]) == 0
    assert (
        main(
            ["color", "--center", files["k2"], "--outer", files["k4"],
             "-o", col_path, "--trace", trace_path]
        )
        == 0
    )
    assert (
        main(["verify", "--graph", corona_path, "--coloring", col_path, "--avd"]) == 0
    )
    assert Path(trace_path).read_text(encoding="utf-8").startswith("step")
    # palette cap: bound for this pair is 8
    assert (
        main(["verify", "--graph", corona_path, "--coloring", col_path,
              "--avd", "--max-colors", "8"])
        == 0
    )


def test_color_explicit_theorem(files, tmp_path):
    col_path = str(tmp_path / "out.col")
    assert (
        main(["color", "--center", files["k2"], "--outer", files["k4"],
              "--theorem", "complete", "-o", col_path])
        == 0
    )
    parsed = parse_coloring(Path(col_path).read_text(encoding="utf-8"))
    assert parsed.k == 8


def test_color_outers_generalized(files, tmp_path):
    col_path = str(tmp_path / "gen.col")
    outers = ",".join([files["k2"], files["p3"], files["p3"], files["k2"]])
    assert (
        main(["color", "--center", files["c4"], "--outers", outers, "-o", col_path]) == 0
    )


def test_color_hypothesis_error_exit_2(files, tmp_path):
    col_path = str(tmp_path / "x.col")
    code = main(["color", "--center", files["k2"], "--outer", files["k3"],
                 "--theorem", "complete", "-o", col_path])
    assert code == 2


def test_verify_failure_exit_1(files, tmp_path, capsys):
    bad = tmp_path / "bad.col"
    bad.write_text("colors 3\nvcolor 0 1\nvcolor 1 1\necolor 0 1 2\n", encoding="utf-8")
    code = main(["verify", "--graph", files["k2"], "--coloring", str(bad)])
    assert code == 1
    assert "vertex-vertex" in capsys.readouterr().out


def test_audit_output(files, capsys):
    assert main(["audit", "--center", files["k2"], "--outer", files["k4"]]) == 0
    out = capsys.readouterr().out
    assert "complete: applicable" in out
    assert "diff1: not applicable" in out


def test_budget_exit_3(files):
    code = main(["exact", "--graph", files["k4"], "--mode", "avd", "--max-nodes", "1"])
    assert code == 3


def test_usage_error_exit_2(files, tmp_path):
    with pytest.raises(SystemExit) as err:
        main(["build", "--center", files["k2"], "-o", str(tmp_path / "x.graph")])
    assert err.value.code == 2


def test_corpus_report(files, tmp_path, capsys):
    corpus_dir = tmp_path / "corpus"
    corpus_dir.mkdir()
    for name, g in (
        ("k2", complete_graph(2)),
        ("c4", cycle_graph(4)),
        ("k5", complete_graph(5)),
    ):
        (corpus_dir / f"{name}.graph").write_text(format_graph(g), encoding="utf-8")
    report = str(tmp_path / "report.tsv")
    assert main(["corpus", "--dir", str(corpus_dir), "--report", report]) == 0
    lines = Path(report).read_text(encoding="utf-8").strip().splitlines()
    assert lines[0].split("\t") == [
        "center", "outer", "theorem", "delta", "colors_used", "bound", "status",
    ]
    assert len(lines) == 10  # header + 9 ordered pairs
    rows = {tuple(line.split("\t")) for line in lines[1:]}
    statuses = {row[-1] for row in rows}
    assert statuses == {"certified", "no-theorem"}
    # K5 outer on K2: degree gap 3 but complete, so nothing applies
    assert any(r[0] == "k2" and r[1] == "k5" and r[-1] == "no-theorem" for r in rows)
    assert any(r[0] == "k2" and r[1] == "c4" and r[2] == "diff1" for r in rows)


def test_export_dot(files, tmp_path):
    col_path = str(tmp_path / "c4.col")
    dot_path = str(tmp_path / "c4.dot")
    corona_path = str(tmp_path / "cor.graph")
    assert main(["build", "--center", files["k2"], "--outer", files["k2"], "-o", corona_path]) == 0
    assert main(["color", "--center", files["k2"], "--outer", files["k2"], "-o", col_path]) == 0
    assert main(["export-dot", "--graph", corona_path, "--coloring", col_path, "-o", dot_path]) == 0
    text = Path(dot_path).read_text(encoding="utf-8")
    assert text.startswith("graph g {")
    assert "--" in text and "label=" in text


def test_deterministic_outputs(files, tmp_path):
    a, b = str(tmp_path / "a.col"), str(tmp_path / "b.col")
    for out in (a, b):
        assert main(["color", "--center", files["k2"], "--outer", files["k4"], "-o", out]) == 0
    assert Path(a).read_bytes() == Path(b).read_bytes()
