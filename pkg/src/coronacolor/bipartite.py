"""Constructive edge coloring of bipartite graphs with max-degree many colors,
and the two-vertex-color distinguishing total coloring built on top of it."""

from __future__ import annotations

from typing import Optional, Sequence

from .colorings import TotalColoring
from .graphs import BipartitionCertificate, Edge, Graph, bipartition


class NotBipartiteError(ValueError):
    """The operation needs a bipartition but got an odd-cycle witness."""


def konig_edge_coloring(
    h: Graph, cert: BipartitionCertificate, palette: Sequence[int]
) -> dict[Edge, int]:
    """Proper edge coloring of a bipartite graph using exactly the palette.

    Edges are inserted in normalized order.  Each edge takes the first
    palette color free at both endpoints; when none exists, an alternating
    two-color path from one endpoint is flipped to free a color.  The flip
    cannot reach the other endpoint in a bipartite graph, which is what makes
    max-degree many colors suffice.
    """
    if cert.parts is None:
        raise NotBipartiteError("edge coloring with max-degree colors needs a bipartition")
    palette = list(palette)
    if len(palette) != h.max_degree or len(set(palette)) != len(palette):
        raise ValueError(
            f"palette must be {h.max_degree} distinct colors, got {palette}"
        )

    # color -> edge maps per vertex; a color is free at v iff absent here.
    color_at: list[dict[int, Edge]] = [dict() for _ in range(h.n)]
    out: dict[Edge, int] = {}

    def flip(start: int, a: int, b: int) -> None:
        # Collect the maximal a/b-alternating path from `start`, then swap.
        path: list[tuple[Edge, int]] = []
        cur, want = start, a
        while want in color_at[cur]:
            e = color_at[cur][want]
            path.append((e, want))
            x, y = e
            cur = y if x == cur else x
            want = b if want == a else a
        for e, old in path:
            for w in e:
                del color_at[w][old]
        for e, old in path:
            new = b if old == a else a
            out[e] = new
            for w in e:
                color_at[w][new] = e

    for e in h.sorted_edges():
        u, v = e
        c = next(
            (c for c in palette if c not in color_at[u] and c not in color_at[v]), None
        )
        if c is None:
            a = next(c for c in palette if c not in color_at[u])
            b = next(c for c in palette if c not in color_at[v])
            flip(v, a, b)
            if a in color_at[u] or a in color_at[v]:
                raise AssertionError("alternating path flip failed; graph not bipartite?")
            c = a
        out[e] = c
        color_at[u][c] = e
        color_at[v][c] = e
    return out


def bipartite_avd_coloring(
    h: Graph,
    k: int,
    required_edge_color: Optional[int] = None,
    edge_palette: Optional[Sequence[int]] = None,
    vertex_colors: Optional[tuple[int, int]] = None,
) -> TotalColoring:
    """Distinguishing total coloring of a connected bipartite graph.

    Edges take exactly max-degree many colors (including
    ``required_edge_color`` when given); one spare color goes on every vertex
    of the first part and another on the second part.  Adjacent vertices lie
    in different parts, so their color sets differ at their own color.

    Callers may pin the edge palette and the two vertex colors; defaults are
    the smallest usable edge colors, then the least and greatest spare colors.
    """
    cert = bipartition(h)
    if cert.parts is None:
        raise NotBipartiteError("graph has an odd cycle")
    if h.n < 2:
        raise ValueError("need at least 2 vertices")
    delta = h.max_degree
    if k < delta + 2:
        raise ValueError(f"palette too small: need at least {delta + 2}, got {k}")
    if required_edge_color is not None and not 1 <= required_edge_color <= k:
        raise ValueError(f"required edge color {required_edge_color} outside 1..{k}")

    if edge_palette is None:
        if required_edge_color is None or required_edge_color <= delta:
            edge_palette = list(range(1, delta + 1))
        else:
            edge_palette = list(range(1, delta)) + [required_edge_color]
    edge_palette = list(edge_palette)
    if any(not 1 <= c <= k for c in edge_palette):
        raise ValueError("edge palette outside the total palette")
    if required_edge_color is not None and required_edge_color not in edge_palette:
        raise ValueError("edge palette must contain the required edge color")

    edge_coloring = konig_edge_coloring(h, cert, edge_palette)

    spare = [c for c in range(1, k + 1) if c not in set(edge_palette)]
    if vertex_colors is None:
        vertex_colors = (spare[0], spare[-1])
    v1c, v2c = vertex_colors
    if v1c == v2c or any(c in set(edge_palette) for c in (v1c, v2c)):
        raise ValueError(f"vertex colors {vertex_colors} must be distinct and off the edge palette")
    if any(not 1 <= c <= k for c in (v1c, v2c)):
        raise ValueError(f"vertex colors {vertex_colors} outside 1..{k}")

    v1, _v2 = cert.parts
    vcolors = {v: (v1c if v in v1 else v2c) for v in range(h.n)}
    return TotalColoring(k, vcolors, edge_coloring)
