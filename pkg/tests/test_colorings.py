from __future__ import annotations

import pytest

from coronacolor import (
    IncompleteColoringError,
    TotalColoring,
    ViolationKind,
    build_graph,
    color_set,
    complete_graph,
    cycle_graph,
    find_constrained_avd_coloring,
    format_coloring,
    missing_colors,
    parse_coloring,
    path_graph,
    swap_color_classes,
    used_colors,
    verify_avd,
    verify_proper_total,
)


def k2_coloring():
    return TotalColoring(3, {0: 1, 1: 2}, {(0, 1): 3})


def test_color_set():
    g = complete_graph(2)
    assert color_set(g, k2_coloring(), 0) == {1, 3}

    isolated = build_graph(1, [])
    f = TotalColoring(3, {0: 2}, {})
    assert color_set(isolated, f, 0) == {2}


def test_color_set_size_under_properness():
    g = cycle_graph(4)
    f = TotalColoring(4, {0: 3, 1: 4, 2: 3, 3: 4}, {(0, 1): 1, (1, 2): 2, (2, 3): 1, (0, 3): 2})
    assert verify_proper_total(g, f).ok
    for v in range(4):
        assert len(color_set(g, f, v)) == g.degree(v) + 1


def test_missing_colors():
    g = complete_graph(2)
    assert missing_colors(g, k2_coloring(), 0) == {2}

    deg_full = path_graph(2)
    f = TotalColoring(3, {0: 1, 1: 2}, {(0, 1): 3})
    # A vertex seeing all palette colors has nothing missing.
    assert missing_colors(deg_full, TotalColoring(2, {0: 1, 1: 2}, {(0, 1): 2}), 0) == frozenset()


def test_missing_colors_complete_graph_two_spare():
    # With max degree + 3 colors every vertex of a complete graph misses two.
    k4 = complete_graph(4)
    f = find_constrained_avd_coloring(k4, 6)
    for v in range(4):
        assert len(missing_colors(k4, f, v)) == 2


def test_verify_proper_total():
    g = complete_graph(2)
    assert verify_proper_total(g, k2_coloring()).ok

    clash = TotalColoring(3, {0: 1, 1: 1}, {(0, 1): 2})
    report = verify_proper_total(g, clash)
    assert [v.kind for v in report.violations] == [ViolationKind.VERTEX_VERTEX]

    c3 = cycle_graph(3)
    f = TotalColoring(3, {0: 1, 1: 2, 2: 3}, {(0, 1): 3, (1, 2): 1, (0, 2): 2})
    assert verify_proper_total(c3, f).ok


def test_verify_reports_all_violation_kinds():
    g = path_graph(3)
    f = TotalColoring(2, {0: 1, 1: 1, 2: 9}, {(0, 1): 1, (1, 2): 1})
    kinds = {v.kind for v in verify_proper_total(g, f).violations}
    assert ViolationKind.VERTEX_VERTEX in kinds
    assert ViolationKind.VERTEX_EDGE in kinds
    assert ViolationKind.EDGE_EDGE in kinds
    assert ViolationKind.PALETTE_OVERFLOW in kinds


def test_verify_avd():
    g = complete_graph(2)
    assert verify_avd(g, k2_coloring()).ok

    p3 = path_graph(3)
    f = TotalColoring(3, {0: 2, 1: 3, 2: 1}, {(0, 1): 1, (1, 2): 2})
    assert verify_avd(p3, f).ok
    # adjacent sets differ in size: deg+1 forces it
    assert len(color_set(p3, f, 0)) != len(color_set(p3, f, 1))

    c4 = cycle_graph(4)
    f = TotalColoring(4, {0: 3, 1: 4, 2: 3, 3: 4}, {(0, 1): 1, (1, 2): 2, (2, 3): 1, (0, 3): 2})
    assert verify_avd(c4, f).ok


def test_verify_avd_flags_equal_sets():
    g = complete_graph(2)
    f = TotalColoring(3, {0: 1, 1: 1, 2: 1}, {(0, 1): 2})
    # improper and identically colored: avd pair flagged alongside.
    report = verify_avd(g, TotalColoring(3, {0: 1, 1: 1}, {(0, 1): 2}))
    assert any(v.kind is ViolationKind.AVD_PAIR for v in report.violations)
    assert any(v.kind is ViolationKind.VERTEX_VERTEX for v in report.violations)


def test_avd_subsumes_proper():
    g = cycle_graph(4)
    f = TotalColoring(4, {0: 3, 1: 4, 2: 3, 3: 4}, {(0, 1): 1, (1, 2): 2, (2, 3): 1, (0, 3): 2})
    assert verify_avd(g, f).ok
    assert verify_proper_total(g, f).ok


def test_incomplete_coloring_raises():
    g = cycle_graph(4)
    with pytest.raises(IncompleteColoringError):
        verify_proper_total(g, TotalColoring(4, {0: 1}, {}))
    with pytest.raises(IncompleteColoringError):
        color_set(g, TotalColoring(4, {0: 1}, {}), 0)


def test_swap_color_classes():
    f = k2_coloring()
    assert swap_color_classes(f, 1, 1) == f
    swapped = swap_color_classes(f, 1, 2)
    assert swapped.vertex_colors == {0: 2, 1: 1}
    assert swapped.edge_colors == {(0, 1): 3}
    with pytest.raises(ValueError, match="outside palette"):
        swap_color_classes(f, 0, 1)
    with pytest.raises(ValueError, match="outside palette"):
        swap_color_classes(f, 1, 4)


def test_swap_preserves_avd():
    g = cycle_graph(4)
    f = find_constrained_avd_coloring(g, 4)
    for a in range(1, 5):
        for b in range(1, 5):
            assert verify_avd(g, swap_color_classes(f, a, b)).ok


def test_used_colors():
    count, used = used_colors(k2_coloring())
    assert count == 3 and used == {1, 2, 3}
    wasteful = TotalColoring(10, {0: 1, 1: 2}, {(0, 1): 3})
    assert used_colors(wasteful)[0] == 3


def test_palette_growth_preserves_verdict():
    g = cycle_graph(4)
    f = find_constrained_avd_coloring(g, 4)
    grown = TotalColoring(5, f.vertex_colors, f.edge_colors)
    assert verify_avd(g, grown).ok


def test_coloring_format_round_trip():
    g = cycle_graph(4)
    f = find_constrained_avd_coloring(g, 4)
    assert parse_coloring(format_coloring(f, g)) == f


def test_coloring_format_partial():
    g = path_graph(2)
    partial = TotalColoring(3, {0: 1}, {})
    text = format_coloring(partial, g)
    assert "vcolor 1 0" in text and "ecolor 0 1 0" in text
    parsed = parse_coloring(text)
    assert not parsed.is_total_on(g)
    assert parsed.vertex_colors == {0: 1}


def test_coloring_format_errors():
    with pytest.raises(ValueError):
        parse_coloring("vcolor 0 1\n")
    with pytest.raises(ValueError):
        parse_coloring("colors 3\nvcolor x 1\n")
