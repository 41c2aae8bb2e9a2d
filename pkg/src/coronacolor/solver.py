"""Exhaustive backtracking oracles for total and distinguishing colorings.

The search is deterministic: elements are ordered vertices-by-id then edges
lexicographically, colors are tried in ascending order, and the first
solution in that order is returned.  Intended for desk-scale graphs
(roughly ``|V| + |E| <= 16`` for the chromatic-number loops).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping, Optional, Union

from .colorings import TotalColoring
from .graphs import Edge, Graph, is_connected, normalize_edge


class ContradictoryConstraintsError(ValueError):
    """Fixed assignments clash with forbidden or required-missing sets."""


class BudgetExceededError(RuntimeError):
    """An exact chromatic computation ran out of search nodes."""


class Exhausted:
    """Sentinel outcome: the node budget was hit before the space was settled."""

    _instance: Optional["Exhausted"] = None

    def __new__(cls) -> "Exhausted":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "EXHAUSTED"


EXHAUSTED = Exhausted()

SearchResult = Union[TotalColoring, None, Exhausted]


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 50_000_000

    def __post_init__(self) -> None:
        if self.max_nodes <= 0:
            raise ValueError("max_nodes must be positive")


DEFAULT_BUDGET = SearchBudget()


@dataclass(frozen=True)
class ColoringConstraints:
    """The language in which constructions talk to the solver.

    ``forbidden_vertex_colors[v]`` are colors ``f(v)`` must avoid;
    ``required_missing[v]`` are colors that must be absent from the whole
    color set of ``v``; fixed assignments are honored verbatim.
    """

    forbidden_vertex_colors: Mapping[int, frozenset[int]] = field(default_factory=dict)
    required_missing: Mapping[int, frozenset[int]] = field(default_factory=dict)
    fixed_vertices: Mapping[int, int] = field(default_factory=dict)
    fixed_edges: Mapping[Edge, int] = field(default_factory=dict)

    def is_empty(self) -> bool:
        return not (
            self.forbidden_vertex_colors
            or self.required_missing
            or self.fixed_vertices
            or self.fixed_edges
        )


NO_CONSTRAINTS = ColoringConstraints()


class _BudgetHit(Exception):
    pass


def avd_lower_bound(g: Graph) -> int:
    """Max degree plus two when two adjacent max-degree vertices exist, else plus one."""
    if g.n < 2:
        raise ValueError("lower bound needs at least 2 vertices")
    delta = g.max_degree
    for u, v in g.edges:
        if g.degrees[u] == delta and g.degrees[v] == delta:
            return delta + 2
    return delta + 1


def _prepare(
    g: Graph, k: int, cons: ColoringConstraints
) -> Optional[tuple[list[list[int]], list[list[int]], list[list[tuple[int, int]]], list[list[int]]]]:
    """Fold constraints into per-element candidate lists and conflict lists.

    Returns None when some element has no candidate color left (plainly
    unsatisfiable).  Raises on contradictory fixed assignments.
    """
    edges = g.sorted_edges()
    n, m = g.n, len(edges)
    epos = {e: n + i for i, e in enumerate(edges)}

    banned: list[set[int]] = [set() for _ in range(n + m)]
    for v, cols in cons.forbidden_vertex_colors.items():
        g.check_vertex(v)
        banned[v] |= set(cols)
    for v, cols in cons.required_missing.items():
        g.check_vertex(v)
        cols = set(cols)
        if any(c < 1 or c > k for c in cols):
            raise ContradictoryConstraintsError(
                f"required-missing colors {sorted(cols)} at vertex {v} not all in 1..{k}"
            )
        banned[v] |= cols
        for e in g.incident_edges(v):
            banned[epos[e]] |= cols

    allowed: list[list[int]] = [
        [c for c in range(1, k + 1) if c not in banned[p]] for p in range(n + m)
    ]

    for v, c in cons.fixed_vertices.items():
        g.check_vertex(v)
        if c not in allowed[v]:
            raise ContradictoryConstraintsError(
                f"fixed color {c} at vertex {v} contradicts its constraints"
            )
        allowed[v] = [c]
    for (u, v), c in cons.fixed_edges.items():
        e = normalize_edge(u, v)
        if e not in epos:
            raise ContradictoryConstraintsError(f"fixed edge {e} not in graph")
        if c not in allowed[epos[e]]:
            raise ContradictoryConstraintsError(
                f"fixed color {c} at edge {e} contradicts its constraints"
            )
        allowed[epos[e]] = [c]

    if any(not cand for cand in allowed):
        return None

    # Conflicts against earlier positions only (the search is order-static).
    pre: list[list[int]] = [[] for _ in range(n + m)]
    for u, v in edges:
        pre[max(u, v)].append(min(u, v))
    for e in edges:
        u, v = e
        pre[epos[e]].extend((u, v))
    for v in range(n):
        inc = sorted(epos[e] for e in g.incident_edges(v))
        for i, p in enumerate(inc):
            for q in inc[i + 1 :]:
                pre[q].append(p)

    # Distinguishing checks fire once both endpoints' stars are fully colored.
    star: list[list[int]] = [[v] + [epos[e] for e in g.incident_edges(v)] for v in range(n)]
    last = [max(s) for s in star]
    avd_at: list[list[tuple[int, int]]] = [[] for _ in range(n + m)]
    for u, v in edges:
        avd_at[max(last[u], last[v])].append((u, v))

    return allowed, pre, avd_at, star


def _solve(
    g: Graph,
    k: int,
    constraints: Optional[ColoringConstraints],
    budget: Optional[SearchBudget],
    require_avd: bool,
) -> SearchResult:
    if k < 1:
        raise ValueError("palette size must be >= 1")
    cons = constraints or NO_CONSTRAINTS
    budget = budget or DEFAULT_BUDGET
    prepared = _prepare(g, k, cons)
    if prepared is None:
        return None
    allowed, pre, avd_at, star = prepared

    edges = g.sorted_edges()
    total = g.n + len(edges)
    assignment = [0] * total
    # Canonical color introduction is a palette symmetry and is only sound
    # when no constraint pins specific colors.
    canonical = cons.is_empty()
    max_nodes = budget.max_nodes
    nodes = 0

    def sets_differ(u: int, v: int) -> bool:
        su = {assignment[p] for p in star[u]}
        sv = {assignment[p] for p in star[v]}
        return su != sv

    def backtrack(pos: int, used_max: int) -> bool:
        nonlocal nodes
        if pos == total:
            return True
        cap = used_max + 1 if canonical else k
        for c in allowed[pos]:
            if c > cap:
                break
            nodes += 1
            if nodes > max_nodes:
                raise _BudgetHit
            if any(assignment[q] == c for q in pre[pos]):
                continue
            assignment[pos] = c
            if not require_avd or all(sets_differ(u, v) for u, v in avd_at[pos]):
                if backtrack(pos + 1, c if c > used_max else used_max):
                    return True
        assignment[pos] = 0
        return False

    try:
        found = backtrack(0, 0)
    except _BudgetHit:
        return EXHAUSTED
    if not found:
        return None
    return TotalColoring(
        k,
        {v: assignment[v] for v in range(g.n)},
        {e: assignment[g.n + i] for i, e in enumerate(edges)},
    )


def find_constrained_avd_coloring(
    g: Graph,
    k: int,
    constraints: Optional[ColoringConstraints] = None,
    budget: Optional[SearchBudget] = None,
) -> SearchResult:
    """First distinguishing total k-coloring honoring the constraints.

    Returns None when the space is exhausted without a solution, and the
    EXHAUSTED sentinel when the node budget ran out first.
    """
    return _solve(g, k, constraints, budget, require_avd=True)


def find_constrained_total_coloring(
    g: Graph,
    k: int,
    constraints: Optional[ColoringConstraints] = None,
    budget: Optional[SearchBudget] = None,
) -> SearchResult:
    """Like find_constrained_avd_coloring but for plain proper total colorings."""
    return _solve(g, k, constraints, budget, require_avd=False)


def _require_connected_pair(g: Graph) -> None:
    if g.n < 2:
        raise ValueError("need at least 2 vertices")
    if not is_connected(g):
        raise ValueError("graph must be connected")


def _run_exact(g: Graph, start: int, budget: Optional[SearchBudget], avd: bool) -> int:
    k = start
    while True:
        result = _solve(g, k, None, budget, require_avd=avd)
        if result is EXHAUSTED:
            raise BudgetExceededError(f"search budget hit at palette size {k}")
        if result is not None:
            return k
        k += 1


@lru_cache(maxsize=None)
def _exact_avd_cached(g: Graph) -> int:
    return _run_exact(g, avd_lower_bound(g), DEFAULT_BUDGET, avd=True)


@lru_cache(maxsize=None)
def _exact_total_cached(g: Graph) -> int:
    return _run_exact(g, g.max_degree + 1, DEFAULT_BUDGET, avd=False)


def exact_avd_chromatic(g: Graph, budget: Optional[SearchBudget] = None) -> int:
    """Smallest palette admitting a distinguishing total coloring."""
    _require_connected_pair(g)
    if budget is None:
        return _exact_avd_cached(g)
    return _run_exact(g, avd_lower_bound(g), budget, avd=True)


def exact_total_chromatic(g: Graph, budget: Optional[SearchBudget] = None) -> int:
    """Smallest palette admitting a proper total coloring."""
    _require_connected_pair(g)
    if budget is None:
        return _exact_total_cached(g)
    return _run_exact(g, g.max_degree + 1, budget, avd=False)


def _color_elements(
    count: int, pre: list[list[int]], k: int, budget: SearchBudget
) -> Union[bool, Exhausted]:
    """Existence of a proper coloring of an abstract conflict structure."""
    assignment = [0] * count
    nodes = 0

    def backtrack(pos: int, used_max: int) -> bool:
        nonlocal nodes
        if pos == count:
            return True
        for c in range(1, min(k, used_max + 1) + 1):
            nodes += 1
            if nodes > budget.max_nodes:
                raise _BudgetHit
            if any(assignment[q] == c for q in pre[pos]):
                continue
            assignment[pos] = c
            if backtrack(pos + 1, max(used_max, c)):
                return True
        assignment[pos] = 0
        return False

    try:
        return backtrack(0, 0)
    except _BudgetHit:
        return EXHAUSTED


def exact_chromatic_number(g: Graph, budget: Optional[SearchBudget] = None) -> int:
    """Vertex chromatic number by exhaustive search."""
    budget = budget or DEFAULT_BUDGET
    if not g.edges:
        return 1
    pre: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.sorted_edges():
        pre[max(u, v)].append(min(u, v))
    k = 1
    while True:
        outcome = _color_elements(g.n, pre, k, budget)
        if outcome is EXHAUSTED:
            raise BudgetExceededError(f"search budget hit at palette size {k}")
        if outcome:
            return k
        k += 1


def exact_chromatic_index(g: Graph, budget: Optional[SearchBudget] = None) -> int:
    """Edge chromatic number by exhaustive search."""
    budget = budget or DEFAULT_BUDGET
    edges = g.sorted_edges()
    if not edges:
        return 0
    pre: list[list[int]] = [[] for _ in range(len(edges))]
    for i, (u, v) in enumerate(edges):
        for j in range(i):
            a, b = edges[j]
            if len({u, v, a, b}) < 4:
                pre[i].append(j)
    k = g.max_degree
    while True:
        outcome = _color_elements(len(edges), pre, k, budget)
        if outcome is EXHAUSTED:
            raise BudgetExceededError(f"search budget hit at palette size {k}")
        if outcome:
            return k
        k += 1
