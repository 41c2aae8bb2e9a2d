"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 hypothesis or usage error,
3 search budget exhausted.  All commands are deterministic: identical inputs
produce byte-identical outputs.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .bipartite import NotBipartiteError
from .colorings import (
    IncompleteColoringError,
    TotalColoring,
    format_coloring,
    parse_coloring,
    used_colors,
    verify_avd,
    verify_proper_total,
)
from .constructions import (
    CertificationError,
    ConstructionResult,
    HypothesisViolatedError,
    NoApplicableTheoremError,
    UnrealizableError,
    applicable_theorems,
    base_avd_coloring,
    color_corona_auto,
    color_corona_bip3,
    color_corona_complete,
    color_corona_diff1,
    color_corona_diff2,
    color_corona_diffk,
    color_generalized_corona,
    format_trace,
)
from .graphs import (
    Center,
    CenterEdge,
    CopyEdge,
    CoronaProvenance,
    FanEdge,
    Graph,
    GraphFormatError,
    Outer,
    format_graph,
    generalized_corona,
    l_corona,
    parse_graph,
    simple_corona,
)
from .solver import (
    BudgetExceededError,
    SearchBudget,
    exact_avd_chromatic,
    exact_chromatic_index,
    exact_chromatic_number,
    exact_total_chromatic,
)


def _load_graph(path: str) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def _load_coloring(path: str) -> TotalColoring:
    return parse_coloring(Path(path).read_text(encoding="utf-8"))


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def format_provenance(prov: CoronaProvenance) -> str:
    lines = []
    for v in sorted(prov.vertex_origin):
        origin = prov.vertex_origin[v]
        if isinstance(origin, Center):
            lines.append(f"vertex {v} origin center {origin.vertex}")
        else:
            assert isinstance(origin, Outer)
            lines.append(f"vertex {v} origin outer {origin.copy} {origin.vertex}")
    for u, v in sorted(prov.edge_class):
        cls = prov.edge_class[(u, v)]
        if isinstance(cls, CenterEdge):
            lines.append(f"edge {u} {v} class center")
        elif isinstance(cls, CopyEdge):
            lines.append(f"edge {u} {v} class copy {cls.copy}")
        else:
            assert isinstance(cls, FanEdge)
            lines.append(f"edge {u} {v} class fan {cls.copy}")
    return "\n".join(lines) + "\n"


def to_dot(g: Graph, coloring: Optional[TotalColoring] = None) -> str:
    lines = ["graph g {"]
    for v in range(g.n):
        if coloring is not None and v in coloring.vertex_colors:
            lines.append(f'  {v} [label="{v}:{coloring.vertex_colors[v]}"];')
        else:
            lines.append(f'  {v} [label="{v}"];')
    for u, v in g.sorted_edges():
        if coloring is not None and (u, v) in coloring.edge_colors:
            lines.append(f'  {u} -- {v} [label="{coloring.edge_colors[(u, v)]}"];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _build_outer(args: argparse.Namespace, g: Graph) -> tuple[Graph, CoronaProvenance]:
    if args.outers:
        hs = [_load_graph(p) for p in args.outers.split(",")]
        return generalized_corona(g, hs)
    h = _load_graph(args.outer)
    if args.l > 1:
        return l_corona(g, h, args.l)
    return simple_corona(g, h)


def _cmd_build(args: argparse.Namespace) -> int:
    g = _load_graph(args.center)
    corona, prov = _build_outer(args, g)
    _write(args.output, format_graph(corona))
    _write(args.output + ".prov", format_provenance(prov))
    print(f"wrote {args.output} ({corona.n} vertices, {corona.edge_count} edges)")
    return 0


def _run_theorem(args: argparse.Namespace, g: Graph) -> ConstructionResult:
    if args.outers:
        hs = [_load_graph(p) for p in args.outers.split(",")]
        outer: Graph | list[Graph] = hs
    else:
        outer = _load_graph(args.outer)
    if args.theorem == "auto":
        return color_corona_auto(g, outer)
    f_g, t_exact = base_avd_coloring(g)
    if args.theorem == "gen":
        hs = outer if isinstance(outer, list) else [outer] * g.n
        return color_generalized_corona(g, f_g, hs, max(2, t_exact))
    if isinstance(outer, list):
        raise HypothesisViolatedError(
            "identical-outer-graphs", f"--theorem {args.theorem} needs a single outer graph"
        )
    if args.theorem == "diff1":
        return color_corona_diff1(g, f_g, outer)
    if args.theorem == "complete":
        return color_corona_complete(g, f_g, outer)
    if args.theorem == "diff2":
        return color_corona_diff2(g, f_g, outer)
    if args.theorem == "bip3":
        return color_corona_bip3(g, f_g, outer)
    assert args.theorem == "diffk"
    k = args.k if args.k is not None else outer.max_degree - g.max_degree
    return color_corona_diffk(g, f_g, outer, k)


def _cmd_color(args: argparse.Namespace) -> int:
    g = _load_graph(args.center)
    result = _run_theorem(args, g)
    _write(args.output, format_coloring(result.coloring, result.graph))
    if args.trace:
        _write(args.trace, format_trace(result.trace))
    print(
        f"certified: {result.colors_used} colors used, bound {result.palette_bound}, "
        f"max degree {result.graph.max_degree}"
    )
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    f = _load_coloring(args.coloring)
    report = verify_avd(g, f) if args.avd else verify_proper_total(g, f)
    count, _ = used_colors(f)
    print(report)
    if args.max_colors is not None and count > args.max_colors:
        print(f"palette check failed: {count} colors used > {args.max_colors}")
        return 1
    return 0 if report.ok else 1


def _cmd_exact(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    budget = SearchBudget(args.max_nodes) if args.max_nodes else None
    fn = {
        "avd": exact_avd_chromatic,
        "total": exact_total_chromatic,
        "chromatic": exact_chromatic_number,
        "index": exact_chromatic_index,
    }[args.mode]
    print(fn(g, budget))
    return 0


def _cmd_audit(args: argparse.Namespace) -> int:
    g = _load_graph(args.center)
    h = _load_graph(args.outer)
    for audit in applicable_theorems(g, h):
        print(audit)
    return 0


def _corpus_row(center: str, outer: str, g: Graph, h: Graph) -> tuple[str, ...]:
    corona, _ = simple_corona(g, h)
    delta = corona.max_degree
    try:
        result = color_corona_auto(g, h)
        return (
            center,
            outer,
            result.theorem.value,
            str(delta),
            str(result.colors_used),
            str(result.palette_bound),
            "certified",
        )
    except NoApplicableTheoremError:
        return (center, outer, "-", str(delta), "-", "-", "no-theorem")
    except HypothesisViolatedError as exc:
        return (center, outer, "-", str(delta), "-", "-", f"hypothesis:{exc.hypothesis}")
    except (UnrealizableError, BudgetExceededError) as exc:
        return (center, outer, "-", str(delta), "-", "-", f"failed:{exc.__class__.__name__}")


def _cmd_corpus(args: argparse.Namespace) -> int:
    directory = Path(args.dir)
    files = sorted(p for p in directory.iterdir() if p.suffix == ".graph")
    rows = []
    failures = 0
    for center_path in files:
        g = _load_graph(str(center_path))
        for outer_path in files:
            h = _load_graph(str(outer_path))
            try:
                row = _corpus_row(center_path.stem, outer_path.stem, g, h)
            except CertificationError:
                failures += 1
                row = (center_path.stem, outer_path.stem, "-", "-", "-", "-", "uncertified")
            rows.append(row)
    rows.sort()
    header = ("center", "outer", "theorem", "delta", "colors_used", "bound", "status")
    text = "\n".join("\t".join(r) for r in [header] + rows) + "\n"
    _write(args.report, text)
    print(f"wrote {args.report} ({len(rows)} pairs)")
    return 1 if failures else 0


def _cmd_export_dot(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    coloring = _load_coloring(args.coloring) if args.coloring else None
    _write(args.output, to_dot(g, coloring))
    print(f"wrote {args.output}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coronacolor",
        description="Corona products and certified distinguishing total colorings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a corona and its provenance sidecar")
    p.add_argument("--center", required=True)
    p.add_argument("--outer")
    p.add_argument("--outers", help="comma-separated outer graph files, one per center vertex")
    p.add_argument("--l", type=int, default=1, help="iterate the corona this many times")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(fn=_cmd_build)

    p = sub.add_parser("color", help="run a corona coloring construction")
    p.add_argument("--center", required=True)
    p.add_argument("--outer")
    p.add_argument("--outers")
    p.add_argument(
        "--theorem",
        choices=["auto", "gen", "diff1", "complete", "diff2", "bip3", "diffk"],
        default="auto",
    )
    p.add_argument("--k", type=int, help="degree gap for --theorem diffk")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--trace")
    p.set_defaults(fn=_cmd_color)

    p = sub.add_parser("verify", help="verify a coloring file against a graph file")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring", required=True)
    p.add_argument("--avd", action="store_true", help="also check adjacent color sets")
    p.add_argument("--max-colors", type=int)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("exact", help="exact chromatic values by exhaustive search")
    p.add_argument("--graph", required=True)
    p.add_argument("--mode", choices=["avd", "total", "chromatic", "index"], required=True)
    p.add_argument("--max-nodes", type=int)
    p.set_defaults(fn=_cmd_exact)

    p = sub.add_parser("audit", help="which constructions apply to a pair")
    p.add_argument("--center", required=True)
    p.add_argument("--outer", required=True)
    p.set_defaults(fn=_cmd_audit)

    p = sub.add_parser("corpus", help="auto-color every pair of graphs in a directory")
    p.add_argument("--dir", required=True)
    p.add_argument("--report", required=True)
    p.set_defaults(fn=_cmd_corpus)

    p = sub.add_parser("export-dot", help="Graphviz export with color labels")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(fn=_cmd_export_dot)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in ("build", "color") and not (args.outer or args.outers):
        parser.error("one of --outer or --outers is required")
    try:
        return args.fn(args)
    except CertificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (
        HypothesisViolatedError,
        NoApplicableTheoremError,
        UnrealizableError,
        NotBipartiteError,
        IncompleteColoringError,
        GraphFormatError,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
