#!/usr/bin/env python3
"""End-to-end demo on one generalized corona.

Builds C4 with outer graphs (C3, P3, P4, P2), colors it, verifies the
certificate, and writes graph, coloring, trace and DOT files.

Usage:
    python scripts/color_example.py [--outdir example_run]
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from coronacolor import (
    color_corona_auto,
    cycle_graph,
    format_coloring,
    format_graph,
    format_trace,
    path_graph,
    used_colors,
    verify_avd,
)
from coronacolor.cli import to_dot


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", default="example_run")
    args = parser.parse_args()
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    center = cycle_graph(4)
    outers = [cycle_graph(3), path_graph(3), path_graph(4), path_graph(2)]
    result = color_corona_auto(center, outers)

    (outdir / "corona.graph").write_text(format_graph(result.graph), encoding="utf-8")
    (outdir / "corona.col").write_text(
        format_coloring(result.coloring, result.graph), encoding="utf-8"
    )
    (outdir / "corona.trace").write_text(format_trace(result.trace), encoding="utf-8")
    (outdir / "corona.dot").write_text(
        to_dot(result.graph, result.coloring), encoding="utf-8"
    )

    recheck = verify_avd(result.graph, result.coloring)
    count, _ = used_colors(result.coloring)
    print(f"corona: {result.graph.n} vertices, max degree {result.graph.max_degree}")
    print(f"colors used: {count} (bound {result.palette_bound})")
    print(f"verification: {recheck}")
    print(f"outputs in {outdir}/")
    return 0 if recheck.ok else 1


if __name__ == "__main__":
    sys.exit(main())
