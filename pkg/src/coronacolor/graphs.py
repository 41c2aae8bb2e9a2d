"""Immutable simple graphs, corona products, and structural queries.

Vertices are the integers ``0..n-1``; edges are unordered pairs stored as
``(i, j)`` tuples with ``i < j``.  Everything here is a pure function of
immutable values, so results are safe to cache and share between threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import NamedTuple, Optional, Sequence

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Raised when a graph text file cannot be parsed."""


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    n: int
    edges: frozenset[Edge]

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        neigh: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            neigh[u].append(v)
            neigh[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in neigh)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(ns) for ns in self.adjacency)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    @property
    def min_degree(self) -> int:
        return min(self.degrees)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for graph on {self.n} vertices")

    def neighbors(self, v: int) -> tuple[int, ...]:
        self.check_vertex(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return self.degrees[v]

    def adjacent(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def incident_edges(self, v: int) -> list[Edge]:
        self.check_vertex(v)
        return [normalize_edge(v, u) for u in self.adjacency[v]]


def build_graph(n: int, edge_list: Sequence[tuple[int, int]]) -> Graph:
    """Build a graph, deduplicating and normalising the edge list.

    Raises ValueError for endpoints out of ``0..n-1`` or loop edges.
    """
    if n < 1:
        raise ValueError(f"vertex count must be >= 1, got {n}")
    edges = set()
    for u, v in edge_list:
        if u == v:
            raise ValueError(f"loop edge ({u}, {v}) not allowed")
        for w in (u, v):
            if not 0 <= w < n:
                raise ValueError(f"edge endpoint {w} out of range 0..{n - 1}")
        edges.add(normalize_edge(u, v))
    return Graph(n, frozenset(edges))


# Named families used throughout the test corpus.

def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, list(combinations(range(n), 2)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}: vertex 0 joined to ``leaves`` pendant vertices."""
    return complete_bipartite_graph(1, leaves)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return build_graph(10, outer + inner + spokes)


class DegreeStats(NamedTuple):
    max_degree: int
    min_degree: int
    degrees: tuple[int, ...]


def degree_stats(g: Graph) -> DegreeStats:
    return DegreeStats(g.max_degree, g.min_degree, g.degrees)


def is_connected(g: Graph) -> bool:
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                queue.append(v)
    return count == g.n


@dataclass(frozen=True)
class BipartitionCertificate:
    """Either a two-part split of the vertices or an odd closed walk.

    Exactly one of ``parts`` and ``odd_cycle`` is present.  The cycle is a
    vertex sequence of odd length whose consecutive entries (cyclically) are
    adjacent.
    """

    parts: Optional[tuple[frozenset[int], frozenset[int]]]
    odd_cycle: Optional[tuple[int, ...]]

    @property
    def is_bipartite(self) -> bool:
        return self.parts is not None


def bipartition(g: Graph) -> BipartitionCertificate:
    """Two-color ``g`` by BFS from vertex 0 (even layers first part).

    Requires a connected graph; returns an odd-cycle witness when no
    bipartition exists.
    """
    if not is_connected(g):
        raise ValueError("bipartition requires a connected graph")
    side = [-1] * g.n
    parent = [-1] * g.n
    side[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if side[v] == -1:
                side[v] = side[u] ^ 1
                parent[v] = u
                queue.append(v)
            elif side[v] == side[u]:
                return BipartitionCertificate(None, _odd_cycle(parent, u, v))
    v1 = frozenset(v for v in range(g.n) if side[v] == 0)
    v2 = frozenset(v for v in range(g.n) if side[v] == 1)
    return BipartitionCertificate((v1, v2), None)


def _odd_cycle(parent: list[int], u: int, v: int) -> tuple[int, ...]:
    # Walk both BFS-tree paths to the root and splice at the meeting point.
    path_u = [u]
    while parent[path_u[-1]] != -1:
        path_u.append(parent[path_u[-1]])
    index_u = {x: i for i, x in enumerate(path_u)}
    path_v = [v]
    while path_v[-1] not in index_u:
        path_v.append(parent[path_v[-1]])
    meet = path_v[-1]
    cycle = list(reversed(path_u[: index_u[meet] + 1])) + path_v[:-1]
    return tuple(cycle)


def find_independent_set(g: Graph, size: int) -> Optional[tuple[int, ...]]:
    """Lexicographically smallest independent set of ``size`` vertices.

    Exhaustive search with pruning; intended for small graphs.  Returns None
    when no such set exists.
    """
    if size < 1:
        raise ValueError("independent set size must be >= 1")

    def extend(partial: tuple[int, ...], start: int) -> Optional[tuple[int, ...]]:
        if len(partial) == size:
            return partial
        for v in range(start, g.n):
            if g.n - v < size - len(partial):
                break
            if all(not g.adjacent(v, u) for u in partial):
                found = extend(partial + (v,), v + 1)
                if found is not None:
                    return found
        return None

    return extend((), 0)


# Corona products.  Vertex numbering is deterministic: the center graph keeps
# ids 0..n_G-1, copy i occupies the next n_{H_i} ids in order.

@dataclass(frozen=True)
class Center:
    vertex: int


@dataclass(frozen=True)
class Outer:
    copy: int
    vertex: int


@dataclass(frozen=True)
class CenterEdge:
    pass


@dataclass(frozen=True)
class CopyEdge:
    copy: int


@dataclass(frozen=True)
class FanEdge:
    copy: int


CENTER_EDGE = CenterEdge()


@dataclass(frozen=True)
class CoronaProvenance:
    """Maps every corona vertex and edge back to its origin."""

    n_centers: int
    copy_sizes: tuple[int, ...]
    vertex_origin: dict[int, Center | Outer]
    edge_class: dict[Edge, CenterEdge | CopyEdge | FanEdge]

    @cached_property
    def copy_offsets(self) -> tuple[int, ...]:
        offsets = []
        at = self.n_centers
        for size in self.copy_sizes:
            offsets.append(at)
            at += size
        return tuple(offsets)

    def check_copy(self, copy: int) -> None:
        if not 0 <= copy < self.n_centers:
            raise ValueError(f"copy index {copy} out of range 0..{self.n_centers - 1}")

    def outer_vertex(self, copy: int, j: int) -> int:
        self.check_copy(copy)
        if not 0 <= j < self.copy_sizes[copy]:
            raise ValueError(f"outer vertex {j} out of range for copy {copy}")
        return self.copy_offsets[copy] + j


def generalized_corona(g: Graph, hs: Sequence[Graph]) -> tuple[Graph, CoronaProvenance]:
    """Join vertex i of ``g`` to every vertex of its private copy of hs[i]."""
    if len(hs) != g.n:
        raise ValueError(f"need one outer graph per center vertex: {len(hs)} != {g.n}")
    sizes = tuple(h.n for h in hs)
    vertex_origin: dict[int, Center | Outer] = {i: Center(i) for i in range(g.n)}
    edge_class: dict[Edge, CenterEdge | CopyEdge | FanEdge] = {
        e: CENTER_EDGE for e in g.edges
    }
    edges: list[Edge] = list(g.edges)
    at = g.n
    for i, h in enumerate(hs):
        for j in range(h.n):
            vertex_origin[at + j] = Outer(i, j)
        for a, b in h.edges:
            e = (at + a, at + b)
            edges.append(e)
            edge_class[e] = CopyEdge(i)
        for j in range(h.n):
            e = normalize_edge(i, at + j)
            edges.append(e)
            edge_class[e] = FanEdge(i)
        at += h.n
    corona = build_graph(at, edges)
    return corona, CoronaProvenance(g.n, sizes, vertex_origin, edge_class)


def simple_corona(g: Graph, h: Graph) -> tuple[Graph, CoronaProvenance]:
    return generalized_corona(g, [h] * g.n)


def l_corona(g: Graph, h: Graph, l: int) -> tuple[Graph, CoronaProvenance]:
    """Iterated corona; the provenance describes only the last iteration."""
    if l < 1:
        raise ValueError("iteration count must be >= 1")
    corona, prov = simple_corona(g, h)
    for _ in range(l - 1):
        corona, prov = simple_corona(corona, h)
    return corona, prov


def fan_edges(prov: CoronaProvenance, copy: int) -> list[Edge]:
    """The edges joining center vertex ``copy`` to its copy, by outer id."""
    prov.check_copy(copy)
    offset = prov.copy_offsets[copy]
    return [normalize_edge(copy, offset + j) for j in range(prov.copy_sizes[copy])]


# Line-based text format: optional '#' comments, a 'vertices N' header, then
# 'edge I J' lines.  Writers emit edges sorted with I < J.

def parse_graph(text: str) -> Graph:
    n: Optional[int] = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if n is None:
                if parts[0] != "vertices" or len(parts) != 2:
                    raise ValueError("expected 'vertices N' header")
                n = int(parts[1])
            else:
                if parts[0] != "edge" or len(parts) != 3:
                    raise ValueError("expected 'edge I J'")
                edges.append((int(parts[1]), int(parts[2])))
        except ValueError as exc:
            raise GraphFormatError(f"line {lineno}: {exc}") from None
    if n is None:
        raise GraphFormatError("missing 'vertices N' header")
    try:
        return build_graph(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def format_graph(g: Graph) -> str:
    lines = [f"vertices {g.n}"]
    lines.extend(f"edge {u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"
