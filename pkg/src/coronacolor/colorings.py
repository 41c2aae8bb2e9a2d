"""Total colorings, color sets, and verification of the distinguishing property.

A coloring maps vertices and edges to colors ``1..k``.  Maps may be partial
while a coloring is being built; the verifiers insist on totality.  Reports
enumerate every violation so constructions can be debugged against them.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping, Optional

from .graphs import Edge, Graph, normalize_edge


class IncompleteColoringError(ValueError):
    """A verifier was handed a coloring missing some vertex or edge."""


@dataclass(frozen=True)
class TotalColoring:
    """Assignment of palette colors ``1..k`` to vertices and edges.

    Entries may be absent (a partial coloring) while a construction is in
    flight; ``is_total_on`` reports completeness for a given graph.  Colors
    outside the palette are representable so that verification can report
    them rather than the constructor crashing.
    """

    k: int
    vertex_colors: Mapping[int, int]
    edge_colors: Mapping[Edge, int]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"palette size must be >= 1, got {self.k}")
        object.__setattr__(self, "vertex_colors", dict(self.vertex_colors))
        object.__setattr__(
            self,
            "edge_colors",
            {normalize_edge(u, v): c for (u, v), c in self.edge_colors.items()},
        )

    def vertex_color(self, v: int) -> Optional[int]:
        return self.vertex_colors.get(v)

    def edge_color(self, u: int, v: int) -> Optional[int]:
        return self.edge_colors.get(normalize_edge(u, v))

    def is_total_on(self, g: Graph) -> bool:
        return all(v in self.vertex_colors for v in range(g.n)) and all(
            e in self.edge_colors for e in g.edges
        )


class ViolationKind(enum.Enum):
    VERTEX_VERTEX = "vertex-vertex"
    VERTEX_EDGE = "vertex-edge"
    EDGE_EDGE = "edge-edge"
    AVD_PAIR = "avd-pair"
    PALETTE_OVERFLOW = "palette-overflow"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    elements: tuple
    colors: tuple[int, ...]

    def __str__(self) -> str:
        elems = " ".join(str(e) for e in self.elements)
        cols = ",".join(str(c) for c in self.colors)
        return f"{self.kind.value} {elems} colors={cols}"


@dataclass(frozen=True)
class VerificationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.ok:
            return "certified: no violations"
        return "\n".join(str(v) for v in self.violations)


def _require_total(g: Graph, f: TotalColoring) -> None:
    missing_v = [v for v in range(g.n) if v not in f.vertex_colors]
    missing_e = [e for e in g.sorted_edges() if e not in f.edge_colors]
    if missing_v or missing_e:
        raise IncompleteColoringError(
            f"coloring is not total: {len(missing_v)} vertices and "
            f"{len(missing_e)} edges unassigned"
        )


def color_set(g: Graph, f: TotalColoring, v: int) -> frozenset[int]:
    """Color of ``v`` together with the colors of its incident edges."""
    g.check_vertex(v)
    if v not in f.vertex_colors:
        raise IncompleteColoringError(f"vertex {v} is unassigned")
    colors = {f.vertex_colors[v]}
    for e in g.incident_edges(v):
        if e not in f.edge_colors:
            raise IncompleteColoringError(f"edge {e} is unassigned")
        colors.add(f.edge_colors[e])
    return frozenset(colors)


def missing_colors(g: Graph, f: TotalColoring, v: int) -> frozenset[int]:
    """Palette colors absent from the color set of ``v``."""
    return frozenset(range(1, f.k + 1)) - color_set(g, f, v)


def verify_proper_total(g: Graph, f: TotalColoring) -> VerificationReport:
    """List every properness violation; an empty report certifies properness."""
    _require_total(g, f)
    violations: list[Violation] = []

    for v in range(g.n):
        c = f.vertex_colors[v]
        if not 1 <= c <= f.k:
            violations.append(Violation(ViolationKind.PALETTE_OVERFLOW, (v,), (c,)))
    for e in g.sorted_edges():
        c = f.edge_colors[e]
        if not 1 <= c <= f.k:
            violations.append(Violation(ViolationKind.PALETTE_OVERFLOW, (e,), (c,)))

    for u, v in g.sorted_edges():
        if f.vertex_colors[u] == f.vertex_colors[v]:
            violations.append(
                Violation(ViolationKind.VERTEX_VERTEX, (u, v), (f.vertex_colors[u],))
            )
        ec = f.edge_colors[(u, v)]
        for w in (u, v):
            if f.vertex_colors[w] == ec:
                violations.append(
                    Violation(ViolationKind.VERTEX_EDGE, (w, (u, v)), (ec,))
                )

    for v in range(g.n):
        incident = g.incident_edges(v)
        for e1, e2 in ((a, b) for i, a in enumerate(incident) for b in incident[i + 1 :]):
            if f.edge_colors[e1] == f.edge_colors[e2]:
                violations.append(
                    Violation(ViolationKind.EDGE_EDGE, (e1, e2), (f.edge_colors[e1],))
                )

    return VerificationReport(tuple(violations))


def verify_avd(g: Graph, f: TotalColoring) -> VerificationReport:
    """Properness violations plus a violation per adjacent pair with equal sets."""
    report = verify_proper_total(g, f)
    violations = list(report.violations)
    for u, v in g.sorted_edges():
        cu = color_set(g, f, u)
        if cu == color_set(g, f, v):
            violations.append(
                Violation(ViolationKind.AVD_PAIR, (u, v), tuple(sorted(cu)))
            )
    return VerificationReport(tuple(violations))


def swap_color_classes(f: TotalColoring, a: int, b: int) -> TotalColoring:
    """Exchange colors ``a`` and ``b`` everywhere; a palette permutation."""
    for c in (a, b):
        if not 1 <= c <= f.k:
            raise ValueError(f"color {c} outside palette 1..{f.k}")
    if a == b:
        return f

    def sw(c: int) -> int:
        if c == a:
            return b
        if c == b:
            return a
        return c

    return TotalColoring(
        f.k,
        {v: sw(c) for v, c in f.vertex_colors.items()},
        {e: sw(c) for e, c in f.edge_colors.items()},
    )


def used_colors(f: TotalColoring) -> tuple[int, frozenset[int]]:
    used = frozenset(f.vertex_colors.values()) | frozenset(f.edge_colors.values())
    return len(used), used


# Text format: 'colors K', then 'vcolor V C' and 'ecolor I J C' lines sorted
# by ids.  Color 0 marks an unassigned element.

def parse_coloring(text: str) -> TotalColoring:
    k: Optional[int] = None
    vcolors: dict[int, int] = {}
    ecolors: dict[Edge, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if k is None:
                if parts[0] != "colors" or len(parts) != 2:
                    raise ValueError("expected 'colors K' header")
                k = int(parts[1])
            elif parts[0] == "vcolor" and len(parts) == 3:
                v, c = int(parts[1]), int(parts[2])
                if c != 0:
                    vcolors[v] = c
            elif parts[0] == "ecolor" and len(parts) == 4:
                u, v, c = int(parts[1]), int(parts[2]), int(parts[3])
                if c != 0:
                    ecolors[normalize_edge(u, v)] = c
            else:
                raise ValueError("expected 'vcolor V C' or 'ecolor I J C'")
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if k is None:
        raise ValueError("missing 'colors K' header")
    return TotalColoring(k, vcolors, ecolors)


def format_coloring(f: TotalColoring, g: Graph) -> str:
    lines = [f"colors {f.k}"]
    for v in range(g.n):
        lines.append(f"vcolor {v} {f.vertex_colors.get(v, 0)}")
    for u, v in g.sorted_edges():
        lines.append(f"ecolor {u} {v} {f.edge_colors.get((u, v), 0)}")
    return "\n".join(lines) + "\n"
