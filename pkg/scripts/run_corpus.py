#!/usr/bin/env python3
"""Materialize the desk corpus as graph files and auto-color every pair.

Writes the graphs into --workdir, runs the corpus pipeline, and prints the
resulting TSV.  Pairs outside every construction's hypotheses are reported
as no-theorem rows, not failures.

Usage:
    python scripts/run_corpus.py [--workdir corpus_run]
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from coronacolor import (
    build_graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    format_graph,
    path_graph,
    star_graph,
)
from coronacolor.cli import main as cli_main


def default_corpus():
    return {
        "k2": complete_graph(2),
        "k3": complete_graph(3),
        "k4": complete_graph(4),
        "p3": path_graph(3),
        "p4": path_graph(4),
        "c3": cycle_graph(3),
        "c4": cycle_graph(4),
        "k1_3": star_graph(3),
        "k2_4": complete_bipartite_graph(2, 4),
        "k4_minus_e": build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
    }


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--workdir", default="corpus_run")
    args = parser.parse_args()

    workdir = Path(args.workdir)
    graphs_dir = workdir / "graphs"
    graphs_dir.mkdir(parents=True, exist_ok=True)
    for name, g in default_corpus().items():
        (graphs_dir / f"{name}.graph").write_text(format_graph(g), encoding="utf-8")

    report = workdir / "report.tsv"
    code = cli_main(["corpus", "--dir", str(graphs_dir), "--report", str(report)])
    print(report.read_text(encoding="utf-8"))
    return code


if __name__ == "__main__":
    sys.exit(main())
