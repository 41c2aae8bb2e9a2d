from __future__ import annotations

from itertools import product

import pytest

from coronacolor import (
    EXHAUSTED,
    BudgetExceededError,
    ColoringConstraints,
    ContradictoryConstraintsError,
    SearchBudget,
    TotalColoring,
    avd_lower_bound,
    build_graph,
    complete_graph,
    cycle_graph,
    exact_avd_chromatic,
    exact_chromatic_index,
    exact_chromatic_number,
    exact_total_chromatic,
    find_constrained_avd_coloring,
    find_constrained_total_coloring,
    missing_colors,
    path_graph,
    star_graph,
    used_colors,
    verify_avd,
    verify_proper_total,
)
from bruteforce import (
    brute_avd_chromatic,
    brute_chromatic_index,
    brute_chromatic_number,
    brute_total_chromatic,
    is_avd,
)


def test_avd_lower_bound():
    assert avd_lower_bound(complete_graph(2)) == 3
    assert avd_lower_bound(path_graph(3)) == 3
    assert avd_lower_bound(cycle_graph(4)) == 4
    with pytest.raises(ValueError):
        avd_lower_bound(build_graph(1, []))


def test_first_solution_matches_stated_order():
    # Enumerate assignments in the documented order and freeze the first hit.
    g = complete_graph(2)
    first = None
    for v0, v1, e in product(range(1, 4), repeat=3):
        if is_avd(g, 3, (v0, v1), (e,)):
            first = ({0: v0, 1: v1}, {(0, 1): e})
            break
    f = find_constrained_avd_coloring(g, 3)
    assert (f.vertex_colors, f.edge_colors) == first
    assert f.vertex_colors == {0: 1, 1: 2}
    assert f.edge_colors == {(0, 1): 3}


def test_unsatisfiable_palette():
    assert find_constrained_avd_coloring(complete_graph(2), 2) is None


def test_constrained_search_honors_conditions():
    g = cycle_graph(4)
    cons = ColoringConstraints(
        forbidden_vertex_colors={0: frozenset({1})},
        required_missing={0: frozenset({5})},
    )
    f = find_constrained_avd_coloring(g, 5, cons)
    assert isinstance(f, TotalColoring)
    assert verify_avd(g, f).ok
    assert f.vertex_colors[0] != 1
    assert 5 in missing_colors(g, f, 0)


def test_fixed_assignments():
    g = path_graph(3)
    cons = ColoringConstraints(fixed_vertices={0: 2}, fixed_edges={(0, 1): 3})
    f = find_constrained_avd_coloring(g, 3, cons)
    assert f.vertex_colors[0] == 2 and f.edge_colors[(0, 1)] == 3


def test_contradictory_constraints():
    g = path_graph(3)
    with pytest.raises(ContradictoryConstraintsError):
        find_constrained_avd_coloring(
            g,
            3,
            ColoringConstraints(
                forbidden_vertex_colors={0: frozenset({2})}, fixed_vertices={0: 2}
            ),
        )
    with pytest.raises(ContradictoryConstraintsError):
        find_constrained_avd_coloring(
            g, 3, ColoringConstraints(required_missing={0: frozenset({9})})
        )
    with pytest.raises(ContradictoryConstraintsError):
        find_constrained_avd_coloring(
            g, 3, ColoringConstraints(fixed_edges={(0, 2): 1})
        )


def test_budget_exhaustion_is_distinct():
    g = complete_graph(4)
    out = find_constrained_avd_coloring(g, 6, budget=SearchBudget(1))
    assert out is EXHAUSTED
    with pytest.raises(BudgetExceededError):
        exact_avd_chromatic(g, SearchBudget(1))


def test_exact_avd_chromatic_odd_complete_graphs():
    # K_{2l+1} needs 2l+3 colors; confirmed independently by brute force for K3.
    assert exact_avd_chromatic(complete_graph(3)) == 5
    assert brute_avd_chromatic(complete_graph(3)) == 5
    assert exact_avd_chromatic(complete_graph(5)) == 7


def test_exact_avd_chromatic_small_cases_match_brute_force():
    for g in (path_graph(3), cycle_graph(4), complete_graph(3), star_graph(3)):
        assert exact_avd_chromatic(g) == brute_avd_chromatic(g)


def test_exact_total_chromatic():
    assert exact_total_chromatic(complete_graph(2)) == 3
    assert exact_total_chromatic(cycle_graph(3)) == brute_total_chromatic(cycle_graph(3)) == 3
    # Lower bound max degree + 1 plus an explicit 3-coloring settle C6.
    c6 = cycle_graph(6)
    f = find_constrained_total_coloring(c6, 3)
    assert isinstance(f, TotalColoring) and verify_proper_total(c6, f).ok
    assert exact_total_chromatic(c6) == 3


def test_exact_vertex_and_edge_chromatic():
    c4 = cycle_graph(4)
    assert exact_chromatic_number(c4) == 2
    assert exact_chromatic_index(c4) == 2
    k3 = complete_graph(3)
    assert exact_chromatic_number(k3) == 3
    assert exact_chromatic_index(k3) == 3
    for g in (path_graph(4), star_graph(3), complete_graph(4)):
        assert exact_chromatic_number(g) == brute_chromatic_number(g)
        assert exact_chromatic_index(g) == brute_chromatic_index(g)


def test_sum_bound_on_oracle_values():
    c4 = cycle_graph(4)
    assert exact_avd_chromatic(c4) <= exact_chromatic_number(c4) + exact_chromatic_index(c4)


def test_oracle_inequality_chain(corpus):
    for name, g in corpus.items():
        avd = exact_avd_chromatic(g)
        total = exact_total_chromatic(g)
        assert avd >= total >= g.max_degree + 1, name
        assert avd >= avd_lower_bound(g), name


def test_solver_output_is_self_certifying():
    for g in (path_graph(4), cycle_graph(5), star_graph(4)):
        k = exact_avd_chromatic(g)
        f = find_constrained_avd_coloring(g, k)
        assert verify_avd(g, f).ok
        assert used_colors(f)[0] <= k


def test_monotone_in_palette():
    g = cycle_graph(5)
    k = exact_avd_chromatic(g)
    assert isinstance(find_constrained_avd_coloring(g, k + 1), TotalColoring)


def test_preconditions():
    with pytest.raises(ValueError):
        exact_avd_chromatic(build_graph(1, []))
    with pytest.raises(ValueError):
        exact_avd_chromatic(build_graph(4, [(0, 1), (2, 3)]))
