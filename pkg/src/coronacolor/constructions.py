"""Certified distinguishing total colorings of coronas.

Each ``color_corona_*`` routine extends a distinguishing coloring of the
center graph over one corona, copy by copy, and returns a
:class:`ConstructionResult` whose verification report is empty and whose
colors stay within the claimed palette bound.  Every "choose any" step is
resolved to the lexicographically least valid option and logged in the
trace, so identical inputs give byte-identical outputs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, islice, permutations
from typing import Iterable, Optional, Sequence, Union

from .bipartite import bipartite_avd_coloring
from .colorings import (
    TotalColoring,
    VerificationReport,
    color_set,
    missing_colors,
    swap_color_classes,
    used_colors,
    verify_avd,
)
from .graphs import (
    CoronaProvenance,
    Graph,
    bipartition,
    find_independent_set,
    generalized_corona,
    is_connected,
    normalize_edge,
)
from .solver import (
    ColoringConstraints,
    SearchBudget,
    exact_avd_chromatic,
    exact_total_chromatic,
    find_constrained_avd_coloring,
    find_constrained_total_coloring,
)

# Budget for the optional first attempt in the equal-degree fallback case.
_ATTEMPT_BUDGET = SearchBudget(1_000_000)


class HypothesisViolatedError(ValueError):
    """An input fails a stated hypothesis; carries the hypothesis name."""

    def __init__(self, hypothesis: str, detail: str = "") -> None:
        self.hypothesis = hypothesis
        super().__init__(f"{hypothesis}: {detail}" if detail else hypothesis)


class BaseColoringInvalidError(ValueError):
    """The supplied center coloring is not a valid starting point."""


class UnrealizableError(RuntimeError):
    """A required auxiliary coloring could not be realized by search."""


class NoDisjointPairError(RuntimeError):
    """No two vertices with disjoint missing pairs exist; signals a bug."""


class CertificationError(RuntimeError):
    """A finished construction failed its own verification."""

    def __init__(self, report: VerificationReport) -> None:
        self.report = report
        super().__init__(f"construction failed verification:\n{report}")


class NoApplicableTheoremError(ValueError):
    """No construction covers the given pair; carries the full audit."""

    def __init__(self, audits: tuple["TheoremAudit", ...]) -> None:
        self.audits = audits
        lines = "\n".join(str(a) for a in audits)
        super().__init__(f"no applicable construction:\n{lines}")


class TheoremTag(enum.Enum):
    GEN_CORONA = "gen"
    DIFF1 = "diff1"
    COMPLETE_H = "complete"
    DIFF2 = "diff2"
    BIP3 = "bip3"
    DIFF_K = "diffk"


@dataclass(frozen=True)
class HypothesisCheck:
    name: str
    passed: bool
    detail: str = ""

    def __str__(self) -> str:
        mark = "ok" if self.passed else "FAIL"
        return f"{self.name}: {mark}" + (f" ({self.detail})" if self.detail else "")


@dataclass(frozen=True)
class TheoremAudit:
    tag: TheoremTag
    k: Optional[int]
    checks: tuple[HypothesisCheck, ...]

    @property
    def applicable(self) -> bool:
        return all(c.passed for c in self.checks)

    def __str__(self) -> str:
        name = self.tag.value if self.k is None else f"{self.tag.value}(k={self.k})"
        status = "applicable" if self.applicable else "not applicable"
        body = "; ".join(str(c) for c in self.checks if not c.passed) or "all hypotheses hold"
        return f"{name}: {status} [{body}]"


@dataclass(frozen=True)
class TraceStep:
    copy: int
    case: str
    action: str
    elements: tuple[str, ...] = ()
    colors: tuple[int, ...] = ()

    def __str__(self) -> str:
        elems = ",".join(self.elements) or "-"
        cols = ",".join(str(c) for c in self.colors) or "-"
        return f"step {self.copy} {self.case} {self.action} {elems} {cols}"


def format_trace(steps: Iterable[TraceStep]) -> str:
    return "\n".join(str(s) for s in steps) + "\n"


@dataclass(frozen=True)
class ConstructionResult:
    theorem: TheoremTag
    graph: Graph
    provenance: CoronaProvenance
    coloring: TotalColoring
    palette_bound: int
    report: VerificationReport
    trace: tuple[TraceStep, ...]

    @property
    def colors_used(self) -> int:
        return used_colors(self.coloring)[0]


# Cached solver front ends.  Default budgets only, so results are stable.

@lru_cache(maxsize=None)
def _cached_avd_coloring(h: Graph, k: int) -> TotalColoring:
    result = find_constrained_avd_coloring(h, k)
    if not isinstance(result, TotalColoring):
        raise UnrealizableError(f"no distinguishing total {k}-coloring found")
    return result


@lru_cache(maxsize=None)
def _cached_total_coloring(h: Graph) -> TotalColoring:
    k = exact_total_chromatic(h)
    result = find_constrained_total_coloring(h, k)
    assert isinstance(result, TotalColoring)
    return result


@lru_cache(maxsize=None)
def _cached_constrained_avd(
    h: Graph, k: int, target_vertices: tuple[int, ...], banned: frozenset[int]
):
    cons = ColoringConstraints(
        forbidden_vertex_colors={v: banned for v in target_vertices}
    )
    return find_constrained_avd_coloring(h, k, cons)


def base_avd_coloring(g: Graph) -> tuple[TotalColoring, int]:
    """Distinguishing coloring of the center at its exact palette size.

    Returns the coloring and the palette excess over the max degree.
    """
    k = exact_avd_chromatic(g)
    t = k - g.max_degree
    if t > 3:
        raise HypothesisViolatedError(
            "center-distinguishing-bound",
            f"center needs {k} colors, more than max degree + 3",
        )
    return _cached_avd_coloring(g, k), t


def realize_missing_colors(
    h: Graph,
    targets: Sequence[tuple[int, int]],
    forbidden_color: int,
    k: int,
    budget: Optional[SearchBudget] = None,
) -> TotalColoring:
    """Distinguishing total k-coloring with prescribed missing colors.

    Every ``(vertex, color)`` target ends with that color absent from the
    vertex's color set, and no target vertex is colored ``forbidden_color``.
    Strategy: start from a solver coloring whose target vertices avoid the
    forbidden and reserved colors, then exchange color classes one target at
    a time, auditing all conditions after each exchange; if no exchange
    schedule works, fall back to encoding the conditions directly.
    """
    targets = list(targets)
    if not targets:
        raise ValueError("need at least one target")
    vertices = [u for u, _ in targets]
    if len(set(vertices)) != len(vertices):
        raise ValueError("target vertices must be distinct")
    for u, d in targets:
        h.check_vertex(u)
        if not 1 <= d <= k:
            raise ValueError(f"required-missing color {d} outside 1..{k}")
    for a, b in combinations(vertices, 2):
        if h.adjacent(a, b):
            raise HypothesisViolatedError(
                "targets-independent", f"target vertices {a} and {b} are adjacent"
            )

    reserved = frozenset({forbidden_color} | {d for _, d in targets})
    start = _cached_constrained_avd(h, k, tuple(sorted(vertices)), reserved)
    f = start if isinstance(start, TotalColoring) else None

    if f is not None:
        arranged: list[tuple[int, int]] = []
        for u, d in targets:
            if d in missing_colors(h, f, u):
                arranged.append((u, d))
                continue
            for a in sorted(missing_colors(h, f, u)):
                candidate = swap_color_classes(f, a, d)
                if _conditions_hold(h, candidate, arranged + [(u, d)], vertices, forbidden_color):
                    f = candidate
                    arranged.append((u, d))
                    break
            else:
                f = None
                break
        if f is not None and _conditions_hold(h, f, targets, vertices, forbidden_color):
            return f

    cons = ColoringConstraints(
        forbidden_vertex_colors={u: frozenset({forbidden_color}) for u in vertices},
        required_missing={u: frozenset({d}) for u, d in targets},
    )
    solution = find_constrained_avd_coloring(h, k, cons, budget)
    if isinstance(solution, TotalColoring):
        return solution
    raise UnrealizableError(
        f"cannot realize missing colors {targets} avoiding {forbidden_color} within {k} colors"
    )


def _conditions_hold(
    h: Graph,
    f: TotalColoring,
    arranged: Sequence[tuple[int, int]],
    all_vertices: Sequence[int],
    forbidden_color: int,
) -> bool:
    return all(d in missing_colors(h, f, u) for u, d in arranged) and all(
        f.vertex_colors[u] != forbidden_color for u in all_vertices
    )


def find_disjoint_missing_pair(h: Graph, f: TotalColoring) -> tuple[int, int]:
    """Lexicographically least vertex pair whose missing sets are disjoint."""
    miss = [missing_colors(h, f, v) for v in range(h.n)]
    for u in range(h.n):
        for w in range(u + 1, h.n):
            if not miss[u] & miss[w]:
                return u, w
    raise NoDisjointPairError("all missing-color pairs intersect")


# Assembly of a corona coloring from a base coloring plus per-copy pieces.

class _Build:
    def __init__(self, g: Graph, hs: Sequence[Graph], f_g: TotalColoring) -> None:
        self.g = g
        self.hs = list(hs)
        self.corona, self.prov = generalized_corona(g, self.hs)
        self.vcolors: dict[int, int] = {v: f_g.vertex_colors[v] for v in range(g.n)}
        self.ecolors: dict[tuple[int, int], int] = {
            e: f_g.edge_colors[e] for e in g.edges
        }
        self.trace: list[TraceStep] = [
            TraceStep(-1, "base", "center-coloring", (), tuple(sorted(used_colors(f_g)[1])))
        ]

    def step(self, copy: int, case: str, action: str, elements=(), colors=()) -> None:
        self.trace.append(TraceStep(copy, case, action, tuple(elements), tuple(colors)))

    def paint_copy(self, i: int, h: Graph, h_col: TotalColoring) -> None:
        off = self.prov.copy_offsets[i]
        for j in range(h.n):
            self.vcolors[off + j] = h_col.vertex_colors[j]
        for a, b in h.edges:
            self.ecolors[(off + a, off + b)] = h_col.edge_colors[(a, b)]

    def paint_fan(self, i: int, fan: dict[int, int]) -> None:
        off = self.prov.copy_offsets[i]
        for j in sorted(fan):
            self.ecolors[normalize_edge(i, off + j)] = fan[j]

    def finish(self, theorem: TheoremTag, bound: int) -> ConstructionResult:
        coloring = TotalColoring(bound, self.vcolors, self.ecolors)
        report = verify_avd(self.corona, coloring)
        if not report.ok:
            raise CertificationError(report)
        return ConstructionResult(
            theorem, self.corona, self.prov, coloring, bound, report, tuple(self.trace)
        )


def _fan_map(special: dict[int, int], fresh_start: int, n_h: int) -> dict[int, int]:
    fan = dict(special)
    color = fresh_start
    for j in range(n_h):
        if j not in fan:
            fan[j] = color
            color += 1
    return fan


def _check(condition: bool, hypothesis: str, detail: str = "") -> None:
    if not condition:
        raise HypothesisViolatedError(hypothesis, detail)


def _validate_base(g: Graph, f_g: TotalColoring, max_color: int) -> None:
    if not f_g.is_total_on(g):
        raise BaseColoringInvalidError("center coloring is not total")
    if not verify_avd(g, f_g).ok:
        raise BaseColoringInvalidError("center coloring is not a distinguishing total coloring")
    _, used = used_colors(f_g)
    if any(c > max_color or c < 1 for c in used):
        raise BaseColoringInvalidError(
            f"center coloring uses colors outside 1..{max_color}"
        )


def _check_pair(g: Graph, h: Graph) -> None:
    _check(g.n >= 2 and is_connected(g), "center-connected", "need a connected center on >= 2 vertices")
    _check(h.n >= 2 and is_connected(h), "outer-connected", "need a connected outer graph on >= 2 vertices")


# The generalized construction: outer max degrees do not exceed the center's.

def color_generalized_corona(
    g: Graph, f_g: TotalColoring, hs: Sequence[Graph], t: int
) -> ConstructionResult:
    """Extend a distinguishing (max_degree+t)-coloring of the center over the
    generalized corona, using at most max_degree(corona)+t colors.

    Per copy the outer graph receives a proper total coloring that avoids the
    center vertex's color (falling back to recoloring that class to a fresh
    color and routing it through one fan edge), and the fan takes colors
    above the base palette.  When the corona's max degree sits below the
    center max degree plus the copy size, the fan additionally borrows low
    colors unused at the center vertex; every borrowed choice is audited.
    """
    _check(t >= 2, "palette-excess", f"need t >= 2, got {t}")
    _check(g.n >= 2 and is_connected(g), "center-connected", "need a connected center on >= 2 vertices")
    _check(len(hs) == g.n, "outer-count", f"{len(hs)} outer graphs for {g.n} centers")
    for i, h in enumerate(hs):
        _check(h.n >= 2 and is_connected(h), "outer-connected", f"copy {i}")
        _check(
            h.max_degree <= g.max_degree,
            "outer-max-degree",
            f"copy {i} has max degree {h.max_degree} > {g.max_degree}",
        )
    base_top = g.max_degree + t
    _validate_base(g, f_g, base_top)

    build = _Build(g, hs, f_g)
    bound = build.corona.max_degree + t
    pool = list(range(base_top + 1, bound + 1))
    center_sets: dict[int, frozenset[int]] = {}

    for i, h in enumerate(hs):
        c = f_g.vertex_colors[i]
        t_i = exact_total_chromatic(h) - h.max_degree
        _check(
            t_i <= t,
            "outer-total-palette",
            f"copy {i} needs max degree + {t_i} colors for a proper total coloring",
        )
        if h.max_degree < g.max_degree or t_i < t:
            h_col = _case1_h_coloring(h, c, t_i)
            special: dict[int, int] = {}
            case = "case1"
        else:
            h_col, reroute = _case2_h_coloring(h, c, t)
            special = {} if reroute is None else {reroute: pool[0]}
            case = "case2a" if reroute is None else "case2b"
        h_col, fan = _plan_fan(
            g, f_g, build.prov, i, h, c, h_col, special, pool, base_top, center_sets
        )
        build.paint_copy(i, h, h_col)
        build.paint_fan(i, fan)
        center_sets[i] = frozenset(color_set(g, f_g, i)) | frozenset(fan.values())
        build.step(i, case, "outer-coloring", (), tuple(sorted(used_colors(h_col)[1])))
        if special:
            build.step(
                i,
                case,
                "fan-route",
                tuple(f"e{i}-{build.prov.outer_vertex(i, j)}" for j in sorted(special)),
                tuple(special[j] for j in sorted(special)),
            )
        low = sorted(col for col in fan.values() if col <= base_top)
        if low:
            build.step(i, case, "fan-borrow-low", (), tuple(low))
    return build.finish(TheoremTag.GEN_CORONA, bound)


@lru_cache(maxsize=None)
def _case1_h_coloring(h: Graph, c: int, t_i: int) -> TotalColoring:
    """Proper total coloring of the copy avoiding color c entirely."""
    base = _cached_total_coloring(h)
    top = h.max_degree + t_i + 1
    allowed = [x for x in range(1, top + 1) if x != c][: h.max_degree + t_i]
    mapping = {j + 1: allowed[j] for j in range(len(allowed))}
    return TotalColoring(
        allowed[-1],
        {v: mapping[col] for v, col in base.vertex_colors.items()},
        {e: mapping[col] for e, col in base.edge_colors.items()},
    )


@lru_cache(maxsize=None)
def _case2_h_coloring(h: Graph, c: int, t: int) -> tuple[TotalColoring, Optional[int]]:
    """Equal-degree copy: try to keep c off the vertices; else recolor.

    Returns the copy coloring and, when the fallback recoloring ran, the
    vertex whose fan edge must carry the fresh recolor color.
    """
    k2 = h.max_degree + t
    attempt = find_constrained_total_coloring(
        h,
        k2,
        ColoringConstraints(
            forbidden_vertex_colors={v: frozenset({c}) for v in range(h.n)}
        ),
        _ATTEMPT_BUDGET,
    )
    if isinstance(attempt, TotalColoring):
        return attempt, None
    base = _cached_total_coloring(h)
    recolored = sorted(v for v, col in base.vertex_colors.items() if col == c)
    if not recolored:
        return base, None
    fresh = k2 + 1
    recol = TotalColoring(
        fresh,
        {v: (fresh if v in recolored else col) for v, col in base.vertex_colors.items()},
        base.edge_colors,
    )
    u_prime = min(v for v in range(h.n) if recol.vertex_colors[v] != fresh)
    return recol, u_prime


def _plan_fan(
    g: Graph,
    f_g: TotalColoring,
    prov: CoronaProvenance,
    i: int,
    h: Graph,
    c: int,
    h_col: TotalColoring,
    special: dict[int, int],
    pool: list[int],
    base_top: int,
    center_sets: dict[int, frozenset[int]],
) -> tuple[TotalColoring, dict[int, int]]:
    """Fan colors for copy i; may replace the copy coloring when borrowing.

    Returns the (possibly re-solved) copy coloring and the fan map."""
    h_sets = [color_set(h, h_col, j) for j in range(h.n)]
    base_center = color_set(g, f_g, i)
    supply = [p for p in pool if p not in special.values()]
    need = h.n - len(special)

    if need <= len(supply):
        fan = dict(special)
        it = iter(supply)
        for j in range(h.n):
            if j not in fan:
                fan[j] = next(it)
        if _fan_audit(h, h_sets, fan, base_center):
            return h_col, fan
        raise UnrealizableError(f"standard fan palette fails its audit for copy {i}")

    # The corona's max degree sits below the center max degree plus this copy
    # size, so the fresh range cannot cover the fan: borrow low colors that
    # are unused at the center vertex, one target each.  Borrowing more than
    # the bare shortfall is allowed; a shorter fresh prefix also breaks
    # center-set collisions with full-pool neighbors.
    shortfall = need - len(supply)
    low_candidates = [x for x in range(1, base_top + 1) if x not in base_center]

    for borrow in range(shortfall, min(h.n, len(low_candidates)) + 1):
        # First try to place borrowed colors on the copy coloring as built.
        for combo in combinations(low_candidates, borrow):
            fan = dict(special)
            placed = True
            for x in combo:
                target = next(
                    (j for j in range(h.n) if j not in fan and x not in h_sets[j]),
                    None,
                )
                if target is None:
                    placed = False
                    break
                fan[target] = x
            if not placed:
                continue
            it = iter(supply)
            for j in range(h.n):
                if j not in fan:
                    fan[j] = next(it)
            if not _fan_audit(h, h_sets, fan, base_center):
                continue
            my_set = frozenset(base_center) | frozenset(fan.values())
            if _center_collision(g, f_g, prov, i, my_set, pool, center_sets):
                continue
            return h_col, fan

        # The fixed copy coloring cannot host the borrowed colors (no vertex
        # misses them, or the pairing audits fail).  Re-solve the copy
        # coloring over the full corona palette, handing the solver one
        # required-missing placement per fan edge.
        for combo in combinations(low_candidates, borrow):
            for low_targets in islice(permutations(range(h.n), borrow), 2000):
                fan = dict(zip(low_targets, combo))
                it = iter(pool)
                for j in range(h.n):
                    if j not in fan:
                        fan[j] = next(it)
                solved = _shortfall_h_coloring(
                    h, c, pool[-1], tuple(sorted(fan.items()))
                )
                if solved is None:
                    continue
                solved_sets = [color_set(h, solved, j) for j in range(h.n)]
                if not _fan_audit(h, solved_sets, fan, base_center):
                    continue
                my_set = frozenset(base_center) | frozenset(fan.values())
                if _center_collision(g, f_g, prov, i, my_set, pool, center_sets):
                    continue
                return solved, fan
    raise UnrealizableError(f"no fan palette for copy {i} fits the claimed bound")


@lru_cache(maxsize=None)
def _shortfall_h_coloring(
    h: Graph, c: int, k: int, placements: tuple[tuple[int, int], ...]
) -> Optional[TotalColoring]:
    """Copy coloring keeping c off the vertices with prescribed missing colors."""
    cons = ColoringConstraints(
        forbidden_vertex_colors={v: frozenset({c}) for v in range(h.n)},
        required_missing={u: frozenset({x}) for u, x in placements},
    )
    result = find_constrained_total_coloring(h, k, cons, _ATTEMPT_BUDGET)
    return result if isinstance(result, TotalColoring) else None


def _fan_audit(
    h: Graph, h_sets: list[frozenset[int]], fan: dict[int, int], base_center: frozenset[int]
) -> bool:
    if any(fan[j] in h_sets[j] for j in range(h.n)):
        return False
    if any(fan[j] in base_center for j in range(h.n)):
        return False
    for a, b in h.edges:
        if h_sets[a] | {fan[a]} == h_sets[b] | {fan[b]}:
            return False
    return True


def _center_collision(
    g: Graph,
    f_g: TotalColoring,
    prov: CoronaProvenance,
    i: int,
    my_set: frozenset[int],
    pool: list[int],
    center_sets: dict[int, frozenset[int]],
) -> bool:
    for nb in g.adjacency[i]:
        if nb in center_sets:
            other = center_sets[nb]
        elif prov.copy_sizes[nb] <= len(pool):
            other = frozenset(color_set(g, f_g, nb)) | frozenset(
                pool[: prov.copy_sizes[nb]]
            )
        else:
            continue  # that copy borrows too and will check against us
        if other == my_set:
            return True
    return False


# Outer max degree exceeds the center's by one.

def color_corona_diff1(g: Graph, f_g: TotalColoring, h: Graph) -> ConstructionResult:
    """Simple corona where the outer max degree is the center's plus one.

    Bipartite outer graphs reduce to the two-spare-color coloring with fully
    fresh fans.  Otherwise each copy gets a distinguishing coloring with the
    top color missing at a chosen vertex whose fan edge then carries it; any
    vertices sharing the center's color are recolored to the next fresh
    color, which is routed through a second fan edge.
    """
    _check_pair(g, h)
    _check(
        h.max_degree == g.max_degree + 1,
        "max-degree-gap",
        f"need outer max degree {g.max_degree + 1}, got {h.max_degree}",
    )
    _validate_base(g, f_g, g.max_degree + 3)
    dg = g.max_degree
    build = _Build(g, [h] * g.n, f_g)
    bound = build.corona.max_degree + 3
    bipartite_outer = bipartition(h).is_bipartite

    for i in range(g.n):
        c = f_g.vertex_colors[i]
        if bipartite_outer:
            h_col = _two_spare_coloring_avoiding(h, c)
            fan = _fan_map({}, dg + 4, h.n)
            build.paint_copy(i, h, h_col)
            build.paint_fan(i, fan)
            build.step(i, "bipartite", "outer-coloring", (), tuple(sorted(used_colors(h_col)[1])))
            continue
        h_col, u, w = _diff1_copy_coloring(h, c, dg)
        if w is None:
            special = {u: dg + 4}
            fresh_start = dg + 5
        else:
            special = {u: dg + 4, w: dg + 5}
            fresh_start = dg + 6
        fan = _fan_map(special, fresh_start, h.n)
        build.paint_copy(i, h, h_col)
        build.paint_fan(i, fan)
        build.step(
            i,
            "nonbipartite",
            "fan-route",
            tuple(f"e{i}-{build.prov.outer_vertex(i, j)}" for j in sorted(special)),
            tuple(special[j] for j in sorted(special)),
        )
    return build.finish(TheoremTag.DIFF1, bound)


@lru_cache(maxsize=None)
def _two_spare_coloring_avoiding(h: Graph, c: int) -> TotalColoring:
    """Bipartite copy coloring whose two vertex colors dodge c."""
    k_h = h.max_degree + 2
    vertex_candidates = [x for x in range(1, k_h + 1) if x != c]
    v1c, v2c = vertex_candidates[-2], vertex_candidates[-1]
    palette = [x for x in range(1, k_h + 1) if x not in (v1c, v2c)]
    return bipartite_avd_coloring(h, k_h, edge_palette=palette, vertex_colors=(v1c, v2c))


@lru_cache(maxsize=None)
def _diff1_copy_coloring(
    h: Graph, c: int, dg: int
) -> tuple[TotalColoring, int, Optional[int]]:
    k_h = h.max_degree + 3  # = dg + 4
    for u in range(h.n):
        try:
            f = realize_missing_colors(h, [(u, k_h)], c, k_h)
        except UnrealizableError:
            continue
        recolored = sorted(v for v, col in f.vertex_colors.items() if col == c)
        if not recolored:
            return f, u, None
        fixed = TotalColoring(
            dg + 5,
            {v: (dg + 5 if v in recolored else col) for v, col in f.vertex_colors.items()},
            f.edge_colors,
        )
        w = min(
            v for v in range(h.n) if v != u and fixed.vertex_colors[v] != dg + 5
        )
        return fixed, u, w
    raise UnrealizableError(
        f"no vertex of the outer graph admits the required missing color with {k_h} colors"
    )


# Outer graph is the complete graph on max_degree(center)+3 vertices.

def color_corona_complete(g: Graph, f_g: TotalColoring, h: Graph) -> ConstructionResult:
    """Simple corona with a complete outer graph of order max_degree+3.

    The copy coloring keeps the center's color and the top color off all
    vertices; two vertices with disjoint missing pairs are then steered, by
    audited color-class exchanges, to miss the two reserved fan colors.
    """
    _check_pair(g, h)
    m = g.max_degree + 3
    _check(
        h.n == m and h.edge_count == m * (m - 1) // 2,
        "outer-complete-order",
        f"need the complete graph on {m} vertices",
    )
    _validate_base(g, f_g, g.max_degree + 3)
    dg = g.max_degree
    build = _Build(g, [h] * g.n, f_g)
    bound = build.corona.max_degree + 3

    for i in range(g.n):
        c = f_g.vertex_colors[i]
        h_col, u, w = _complete_copy_coloring(h, c)
        special = {u: dg + 4, w: dg + 5}
        fan = _fan_map(special, dg + 6, h.n)
        build.paint_copy(i, h, h_col)
        build.paint_fan(i, fan)
        build.step(
            i,
            "complete",
            "fan-route",
            tuple(f"e{i}-{build.prov.outer_vertex(i, j)}" for j in sorted(special)),
            tuple(special[j] for j in sorted(special)),
        )
    return build.finish(TheoremTag.COMPLETE_H, bound)


def _vertex_spare_colors(f: TotalColoring, n: int) -> list[int]:
    present = {f.vertex_colors[v] for v in range(n)}
    return [x for x in range(1, f.k + 1) if x not in present]


@lru_cache(maxsize=None)
def _complete_copy_coloring(h: Graph, c: int) -> tuple[TotalColoring, int, int]:
    dg = h.n - 3
    k_h = h.max_degree + 3  # = dg + 5
    top = k_h
    f = _cached_avd_coloring(h, k_h)

    # Arrange the two colors unused on vertices to be exactly {c, top}.
    spare = _vertex_spare_colors(f, h.n)
    if c not in spare:
        f = swap_color_classes(f, c, spare[0])
        spare = _vertex_spare_colors(f, h.n)
    if top not in spare:
        other = next(x for x in spare if x != c)
        f = swap_color_classes(f, top, other)
    assert set(_vertex_spare_colors(f, h.n)) == {c, top}

    miss = [missing_colors(h, f, v) for v in range(h.n)]
    disjoint = [
        (u, w)
        for u in range(h.n)
        for w in range(u + 1, h.n)
        if not miss[u] & miss[w]
    ]
    for u, w in disjoint:
        for first, second in ((u, w), (w, u)):
            arranged = _steer_missing(h, f, first, dg + 4, second, top, c)
            if arranged is not None:
                return arranged, first, second

    # Last resort: encode the conditions directly, then audit the leftovers.
    for u in range(h.n):
        for w in range(h.n):
            if w == u:
                continue
            cons = ColoringConstraints(
                forbidden_vertex_colors={
                    v: frozenset({c, top}) for v in range(h.n)
                },
                required_missing={u: frozenset({dg + 4}), w: frozenset({top})},
            )
            sol = find_constrained_avd_coloring(h, k_h, cons)
            if isinstance(sol, TotalColoring):
                left_u = missing_colors(h, sol, u) - {dg + 4}
                left_w = missing_colors(h, sol, w) - {top}
                if left_u != left_w:
                    return sol, u, w
    raise NoDisjointPairError(
        "no pair of vertices with disjoint missing pairs could be arranged"
    )


def _steer_missing(
    h: Graph, f: TotalColoring, u: int, du: int, w: int, dw: int, c: int
) -> Optional[TotalColoring]:
    """Exchange color classes until du misses at u and dw at w, keeping the
    vertex colors off {c, dw}; every exchange is audited before commit."""
    top = dw
    current = f
    for target, d in ((u, du), (w, dw)):
        if d in missing_colors(h, current, target):
            continue
        chosen = None
        for a in sorted(missing_colors(h, current, target)):
            candidate = swap_color_classes(current, a, d)
            if set(_vertex_spare_colors(candidate, h.n)) != {c, top}:
                continue
            if du not in missing_colors(h, candidate, u):
                continue
            chosen = candidate
            break
        if chosen is None:
            return None
        current = chosen
    if dw not in missing_colors(h, current, w):
        return None
    left_u = missing_colors(h, current, u) - {du}
    left_w = missing_colors(h, current, w) - {dw}
    if left_u == left_w:
        return None
    return current


# Outer max degree exceeds the center's by two.

def color_corona_diff2(g: Graph, f_g: TotalColoring, h: Graph) -> ConstructionResult:
    """Simple corona with outer max degree two above the center's.

    Bipartite outer graphs take max-degree edge colors including the center
    color, a leftover color on one part, and the first fan color on the
    other part.  Otherwise two independent vertices have the two reserved
    fan colors arranged missing, the center color class is recolored fresh
    when present, and that fresh color is routed through a third fan edge.
    """
    _check_pair(g, h)
    _check(
        h.max_degree == g.max_degree + 2,
        "max-degree-gap",
        f"need outer max degree {g.max_degree + 2}, got {h.max_degree}",
    )
    bipartite_outer = bipartition(h).is_bipartite
    if not bipartite_outer:
        _check(
            find_independent_set(h, 2) is not None,
            "independent-pair",
            "outer graph has no two non-adjacent vertices",
        )
    _validate_base(g, f_g, g.max_degree + 3)
    dg = g.max_degree
    build = _Build(g, [h] * g.n, f_g)
    bound = build.corona.max_degree + 3

    for i in range(g.n):
        c = f_g.vertex_colors[i]
        if bipartite_outer:
            h_col, x = _diff2_bip_coloring(h, c, dg)
            special = {x: dg + 4}
            fresh_start = dg + 5
            case = "bipartite"
        else:
            h_col, u1, u2, x = _diff2_nonbip_coloring(h, c, dg)
            special = {u1: dg + 4, u2: dg + 5, x: dg + 6}
            fresh_start = dg + 7
            case = "nonbipartite"
        fan = _fan_map(special, fresh_start, h.n)
        build.paint_copy(i, h, h_col)
        build.paint_fan(i, fan)
        build.step(
            i,
            case,
            "fan-route",
            tuple(f"e{i}-{build.prov.outer_vertex(i, j)}" for j in sorted(special)),
            tuple(special[j] for j in sorted(special)),
        )
    return build.finish(TheoremTag.DIFF2, bound)


@lru_cache(maxsize=None)
def _diff2_bip_coloring(h: Graph, c: int, dg: int) -> tuple[TotalColoring, int]:
    d_h = h.max_degree  # = dg + 2
    others = [x for x in range(1, d_h + 2) if x != c][: d_h - 1]
    palette = sorted([c] + others)
    leftover = next(x for x in range(1, d_h + 2) if x not in palette)
    f = bipartite_avd_coloring(
        h, dg + 4, required_edge_color=c, edge_palette=palette,
        vertex_colors=(leftover, dg + 4),
    )
    x = min(bipartition(h).parts[0])
    return f, x


@lru_cache(maxsize=None)
def _diff2_nonbip_coloring(
    h: Graph, c: int, dg: int
) -> tuple[TotalColoring, int, int, int]:
    k_h = h.max_degree + 3  # = dg + 5
    u1, u2 = find_independent_set(h, 2)
    f = realize_missing_colors(h, [(u1, dg + 4), (u2, dg + 5)], c, k_h)
    recolored = sorted(v for v, col in f.vertex_colors.items() if col == c)
    if recolored:
        f = TotalColoring(
            dg + 6,
            {v: (dg + 6 if v in recolored else col) for v, col in f.vertex_colors.items()},
            f.edge_colors,
        )
    candidates = [
        v
        for v in range(h.n)
        if v not in (u1, u2) and f.vertex_colors[v] != dg + 6
    ]
    if not candidates:
        raise UnrealizableError("no third fan target exists; outer graph too small")
    return f, u1, u2, min(candidates)


# Bipartite outer graph with max degree three above the center's.

def color_corona_bip3(g: Graph, f_g: TotalColoring, h: Graph) -> ConstructionResult:
    """Simple corona with a bipartite outer graph whose max degree is the
    center's plus three.

    Edges take exactly max-degree colors; the parts take the first two fan
    colors, one chosen vertex per part gets the other part's color on its
    fan edge, and a collision between those two is broken by recoloring one
    of them to the next fresh color and routing that color to its part."""
    _check_pair(g, h)
    cert = bipartition(h)
    _check(cert.is_bipartite, "outer-bipartite", "outer graph has an odd cycle")
    _check(
        h.max_degree == g.max_degree + 3,
        "max-degree-gap",
        f"need outer max degree {g.max_degree + 3}, got {h.max_degree}",
    )
    _validate_base(g, f_g, g.max_degree + 3)
    dg = g.max_degree
    h_col, special, fresh_start = _bip3_copy_coloring(h, dg)
    build = _Build(g, [h] * g.n, f_g)
    bound = build.corona.max_degree + 3
    for i in range(g.n):
        fan = _fan_map(special, fresh_start, h.n)
        build.paint_copy(i, h, h_col)
        build.paint_fan(i, fan)
        build.step(
            i,
            "bip3",
            "fan-route",
            tuple(f"e{i}-{build.prov.outer_vertex(i, j)}" for j in sorted(special)),
            tuple(special[j] for j in sorted(special)),
        )
    return build.finish(TheoremTag.BIP3, bound)


@lru_cache(maxsize=None)
def _bip3_copy_coloring(h: Graph, dg: int) -> tuple[TotalColoring, dict[int, int], int]:
    d_h = h.max_degree  # = dg + 3
    f = bipartite_avd_coloring(
        h, dg + 5, edge_palette=list(range(1, d_h + 1)), vertex_colors=(dg + 4, dg + 5)
    )
    part1, part2 = bipartition(h).parts

    def pair_class(x1: int, x2: int) -> int:
        if not h.adjacent(x1, x2):
            return 0
        if h.degree(x1) != h.degree(x2):
            return 1
        return 2

    x1, x2 = min(
        ((a, b) for a in sorted(part1) for b in sorted(part2)),
        key=lambda p: (pair_class(*p), p),
    )
    e1 = frozenset(f.edge_colors[e] for e in h.incident_edges(x1))
    e2 = frozenset(f.edge_colors[e] for e in h.incident_edges(x2))
    if e1 != e2:
        return f, {x1: dg + 5, x2: dg + 4}, dg + 6

    # The two chosen color sets would coincide: move x2 to the next fresh
    # color and route that color to another vertex of the same part.
    rest = sorted(v for v in part2 if v != x2)
    if not rest:
        raise UnrealizableError("no second vertex available in the recolored part")
    f = TotalColoring(
        dg + 6,
        {v: (dg + 6 if v == x2 else col) for v, col in f.vertex_colors.items()},
        f.edge_colors,
    )
    x3 = rest[0]
    return f, {x1: dg + 5, x2: dg + 4, x3: dg + 6}, dg + 7


# Outer max degree exceeds the center's by k >= 3.

def color_corona_diffk(g: Graph, f_g: TotalColoring, h: Graph, k: int) -> ConstructionResult:
    """Simple corona with outer max degree k >= 3 above the center's, given
    k independent outer vertices meeting the degree caps.

    The k reserved fan colors are arranged missing at the k chosen vertices
    and routed to them; the center color class is recolored to the next
    fresh color, which is routed through one more fan edge."""
    _check_pair(g, h)
    _check(k >= 3, "gap-at-least-three", f"got k={k}")
    _check(
        h.max_degree == g.max_degree + k,
        "max-degree-gap",
        f"need outer max degree {g.max_degree + k}, got {h.max_degree}",
    )
    _check(
        h.max_degree >= k + 1,
        "outer-degree-floor",
        f"need outer max degree >= {k + 1}",
    )
    witness = _diffk_witness(h, k)
    _check(
        witness is not None,
        "independent-set-with-degree-caps",
        f"no {k} independent vertices meet the degree conditions",
    )
    _validate_base(g, f_g, g.max_degree + 3)
    dg = g.max_degree
    build = _Build(g, [h] * g.n, f_g)
    bound = build.corona.max_degree + 3

    for i in range(g.n):
        c = f_g.vertex_colors[i]
        h_col, special = _diffk_copy_coloring(h, c, dg, k, witness)
        fan = _fan_map(special, dg + k + 5, h.n)
        build.paint_copy(i, h, h_col)
        build.paint_fan(i, fan)
        build.step(
            i,
            "diffk",
            "fan-route",
            tuple(f"e{i}-{build.prov.outer_vertex(i, j)}" for j in sorted(special)),
            tuple(special[j] for j in sorted(special)),
        )
    return build.finish(TheoremTag.DIFF_K, bound)


def _independent_sets(g: Graph, size: int):
    """All independent sets of the given size, in lexicographic order."""

    def extend(partial: tuple[int, ...], start: int):
        if len(partial) == size:
            yield partial
            return
        for v in range(start, g.n):
            if g.n - v < size - len(partial):
                break
            if all(not g.adjacent(v, u) for u in partial):
                yield from extend(partial + (v,), v + 1)

    yield from extend((), 0)


@lru_cache(maxsize=None)
def _diffk_witness(h: Graph, k: int) -> Optional[tuple[int, ...]]:
    """First independent k-set assignable to the slot degree caps.

    Slots 3..k-2 cap the degree at max_degree - slot + 2; slots 1, 2, k-1
    and k are uncapped.  Within a set, the smallest degrees fill the
    tightest caps; leftovers fill the uncapped slots by vertex id.
    """
    capped = {i: h.max_degree - i + 2 for i in range(3, k - 1)}
    for candidate in _independent_sets(h, k):
        by_degree = sorted(candidate, key=lambda v: (h.degree(v), v))
        slots: dict[int, int] = {}
        feasible = True
        remaining = list(by_degree)
        for slot in sorted(capped, key=lambda s: capped[s]):
            if not remaining or h.degree(remaining[0]) > capped[slot]:
                feasible = False
                break
            slots[slot] = remaining.pop(0)
        if not feasible:
            continue
        rest = sorted(remaining)
        for slot in range(1, k + 1):
            if slot not in slots:
                slots[slot] = rest.pop(0)
        return tuple(slots[i] for i in range(1, k + 1))
    return None


@lru_cache(maxsize=None)
def _diffk_copy_coloring(
    h: Graph, c: int, dg: int, k: int, witness: tuple[int, ...]
) -> tuple[TotalColoring, dict[int, int]]:
    k_h = h.max_degree + 3
    targets = [(witness[i - 1], dg + 3 + i) for i in range(1, k + 1)]
    f = realize_missing_colors(h, targets, c, k_h)
    recolored = sorted(v for v, col in f.vertex_colors.items() if col == c)
    if recolored:
        f = TotalColoring(
            dg + k + 4,
            {
                v: (dg + k + 4 if v in recolored else col)
                for v, col in f.vertex_colors.items()
            },
            f.edge_colors,
        )
    candidates = [
        v
        for v in range(h.n)
        if v not in witness and f.vertex_colors[v] != dg + k + 4
    ]
    if not candidates:
        raise UnrealizableError("no fan target for the recolor color exists")
    special = {u: d for (u, d) in targets}
    special[min(candidates)] = dg + k + 4
    return f, special


# Dispatch: audit all hypotheses, then run the first applicable construction.

def _as_outer_list(g: Graph, outer: Union[Graph, Sequence[Graph]]) -> tuple[list[Graph], Optional[Graph]]:
    if isinstance(outer, Graph):
        return [outer] * g.n, outer
    hs = list(outer)
    if hs and all(h == hs[0] for h in hs):
        return hs, hs[0]
    return hs, None


def applicable_theorems(
    g: Graph, outer: Union[Graph, Sequence[Graph]]
) -> tuple[TheoremAudit, ...]:
    """Audit every construction's hypotheses for the given pair."""
    hs, h = _as_outer_list(g, outer)
    audits = [_audit_gen(g, hs)]
    if h is None:
        heterogeneous = HypothesisCheck(
            "identical-outer-graphs", False, "outer graphs differ between copies"
        )
        for tag in (TheoremTag.DIFF1, TheoremTag.COMPLETE_H, TheoremTag.DIFF2,
                    TheoremTag.BIP3, TheoremTag.DIFF_K):
            audits.append(TheoremAudit(tag, None, (heterogeneous,)))
        return tuple(audits)
    audits.extend(
        [
            _audit_diff1(g, h),
            _audit_complete(g, h),
            _audit_diff2(g, h),
            _audit_bip3(g, h),
            _audit_diffk(g, h),
        ]
    )
    return tuple(audits)


def _pair_checks(g: Graph, h: Graph) -> list[HypothesisCheck]:
    return [
        HypothesisCheck(
            "center-connected", g.n >= 2 and is_connected(g),
            f"{g.n} vertices",
        ),
        HypothesisCheck(
            "outer-connected", h.n >= 2 and is_connected(h),
            f"{h.n} vertices",
        ),
    ]


def _audit_gen(g: Graph, hs: Sequence[Graph]) -> TheoremAudit:
    checks = [
        HypothesisCheck("center-connected", g.n >= 2 and is_connected(g), f"{g.n} vertices"),
        HypothesisCheck("outer-count", len(hs) == g.n, f"{len(hs)} graphs for {g.n} centers"),
    ]
    if len(hs) == g.n:
        checks.append(
            HypothesisCheck(
                "every-outer-connected",
                all(h.n >= 2 and is_connected(h) for h in hs),
            )
        )
        checks.append(
            HypothesisCheck(
                "outer-max-degrees",
                all(h.max_degree <= g.max_degree for h in hs),
                f"center max degree {g.max_degree}",
            )
        )
    return TheoremAudit(TheoremTag.GEN_CORONA, None, tuple(checks))


def _audit_diff1(g: Graph, h: Graph) -> TheoremAudit:
    checks = _pair_checks(g, h)
    checks.append(
        HypothesisCheck(
            "max-degree-gap",
            h.max_degree == g.max_degree + 1,
            f"{h.max_degree} vs {g.max_degree}+1",
        )
    )
    return TheoremAudit(TheoremTag.DIFF1, None, tuple(checks))


def _audit_complete(g: Graph, h: Graph) -> TheoremAudit:
    m = g.max_degree + 3
    checks = _pair_checks(g, h)
    checks.append(
        HypothesisCheck(
            "outer-complete-order",
            h.n == m and h.edge_count == m * (m - 1) // 2,
            f"need the complete graph on {m} vertices",
        )
    )
    return TheoremAudit(TheoremTag.COMPLETE_H, None, tuple(checks))


def _audit_diff2(g: Graph, h: Graph) -> TheoremAudit:
    checks = _pair_checks(g, h)
    checks.append(
        HypothesisCheck(
            "max-degree-gap",
            h.max_degree == g.max_degree + 2,
            f"{h.max_degree} vs {g.max_degree}+2",
        )
    )
    if is_connected(h):
        bip = bipartition(h).is_bipartite
        checks.append(
            HypothesisCheck(
                "bipartite-or-independent-pair",
                bip or find_independent_set(h, 2) is not None,
                "need a bipartition or two non-adjacent vertices",
            )
        )
    return TheoremAudit(TheoremTag.DIFF2, None, tuple(checks))


def _audit_bip3(g: Graph, h: Graph) -> TheoremAudit:
    checks = _pair_checks(g, h)
    checks.append(
        HypothesisCheck(
            "outer-bipartite",
            is_connected(h) and bipartition(h).is_bipartite,
        )
    )
    checks.append(
        HypothesisCheck(
            "max-degree-gap",
            h.max_degree == g.max_degree + 3,
            f"{h.max_degree} vs {g.max_degree}+3",
        )
    )
    return TheoremAudit(TheoremTag.BIP3, None, tuple(checks))


def _audit_diffk(g: Graph, h: Graph) -> TheoremAudit:
    gap = h.max_degree - g.max_degree
    checks = _pair_checks(g, h)
    checks.append(
        HypothesisCheck("gap-at-least-three", gap >= 3, f"gap is {gap}")
    )
    if gap >= 3:
        checks.append(
            HypothesisCheck(
                "outer-degree-floor",
                h.max_degree >= gap + 1,
                f"max degree {h.max_degree} vs {gap + 1}",
            )
        )
        checks.append(
            HypothesisCheck(
                "independent-set-with-degree-caps",
                _diffk_witness(h, gap) is not None,
                f"need {gap} independent vertices meeting the degree caps",
            )
        )
    return TheoremAudit(TheoremTag.DIFF_K, gap if gap >= 3 else None, tuple(checks))


def color_corona_auto(
    g: Graph, outer: Union[Graph, Sequence[Graph]]
) -> ConstructionResult:
    """Color a corona with the first applicable construction.

    The center coloring comes from the exact solver at its smallest palette.
    Raises NoApplicableTheoremError, carrying the full audit, when no
    construction's hypotheses hold."""
    audits = applicable_theorems(g, outer)
    hs, h = _as_outer_list(g, outer)
    f_g, t_exact = base_avd_coloring(g)
    for audit in audits:
        if not audit.applicable:
            continue
        if audit.tag is TheoremTag.GEN_CORONA:
            return color_generalized_corona(g, f_g, hs, max(2, t_exact))
        assert h is not None
        if audit.tag is TheoremTag.DIFF1:
            return color_corona_diff1(g, f_g, h)
        if audit.tag is TheoremTag.COMPLETE_H:
            return color_corona_complete(g, f_g, h)
        if audit.tag is TheoremTag.DIFF2:
            return color_corona_diff2(g, f_g, h)
        if audit.tag is TheoremTag.BIP3:
            return color_corona_bip3(g, f_g, h)
        if audit.tag is TheoremTag.DIFF_K:
            assert audit.k is not None
            return color_corona_diffk(g, f_g, h, audit.k)
    raise NoApplicableTheoremError(audits)
