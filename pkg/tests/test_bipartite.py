from __future__ import annotations

from collections import Counter

import pytest

from coronacolor import (
    NotBipartiteError,
    bipartite_avd_coloring,
    bipartition,
    complete_bipartite_graph,
    cycle_graph,
    konig_edge_coloring,
    path_graph,
    star_graph,
    used_colors,
    verify_avd,
)


def assert_proper_edge_coloring(g, coloring):
    for v in range(g.n):
        incident = [coloring[e] for e in g.incident_edges(v)]
        assert len(incident) == len(set(incident)), f"clash at vertex {v}"


def test_konig_even_cycle_alternates():
    c6 = cycle_graph(6)
    coloring = konig_edge_coloring(c6, bipartition(c6), (1, 2))
    assert set(coloring.values()) == {1, 2}
    # walk the cycle: colors alternate
    walk = [coloring[(0, 1)], coloring[(1, 2)], coloring[(2, 3)],
            coloring[(3, 4)], coloring[(4, 5)], coloring[(0, 5)]]
    assert walk == [1, 2, 1, 2, 1, 2]


def test_konig_path_alternates():
    p4 = path_graph(4)
    coloring = konig_edge_coloring(p4, bipartition(p4), (1, 2))
    assert [coloring[(0, 1)], coloring[(1, 2)], coloring[(2, 3)]] == [1, 2, 1]


def test_konig_k33_perfect_matchings():
    k33 = complete_bipartite_graph(3, 3)
    coloring = konig_edge_coloring(k33, bipartition(k33), (1, 2, 3))
    assert_proper_edge_coloring(k33, coloring)
    classes = Counter(coloring.values())
    assert classes == {1: 3, 2: 3, 3: 3}


def test_konig_uses_exactly_max_degree_colors(bip_corpus):
    for name, g in bip_corpus.items():
        palette = tuple(range(1, g.max_degree + 1))
        coloring = konig_edge_coloring(g, bipartition(g), palette)
        assert_proper_edge_coloring(g, coloring)
        assert set(coloring.values()) == set(palette), name


def test_konig_respects_palette_order():
    # Palette order decides which color is "least": reversed palette flips it.
    p3 = path_graph(3)
    coloring = konig_edge_coloring(p3, bipartition(p3), (7, 4))
    assert coloring[(0, 1)] == 7 and coloring[(1, 2)] == 4


def test_konig_rejects_bad_inputs():
    c3 = cycle_graph(3)
    with pytest.raises(NotBipartiteError):
        konig_edge_coloring(c3, bipartition(c3), (1, 2))
    c4 = cycle_graph(4)
    with pytest.raises(ValueError, match="palette"):
        konig_edge_coloring(c4, bipartition(c4), (1, 2, 3))


def test_bipartite_avd_star():
    k13 = star_graph(3)
    f = bipartite_avd_coloring(k13, 5)
    assert verify_avd(k13, f).ok
    _, used = used_colors(f)
    edge_used = set(f.edge_colors.values())
    assert len(edge_used) == 3
    assert len(used - edge_used) == 2


def test_bipartite_avd_c4_with_required_color():
    c4 = cycle_graph(4)
    f = bipartite_avd_coloring(c4, 4, required_edge_color=1)
    assert verify_avd(c4, f).ok
    assert set(f.edge_colors.values()) == {1, 2}
    assert {f.vertex_colors[0], f.vertex_colors[2]} == {3}
    assert {f.vertex_colors[1], f.vertex_colors[3]} == {4}


def test_bipartite_avd_k2():
    k2 = path_graph(2)
    f = bipartite_avd_coloring(k2, 3)
    assert verify_avd(k2, f).ok
    assert len(set(f.edge_colors.values())) == 1
    assert len(set(f.vertex_colors.values())) == 2


def test_bipartite_avd_required_color_keeps_count(bip_corpus):
    for name, g in bip_corpus.items():
        base = bipartite_avd_coloring(g, g.max_degree + 2)
        forced = bipartite_avd_coloring(g, g.max_degree + 2, required_edge_color=1)
        assert len(set(base.edge_colors.values())) == len(set(forced.edge_colors.values())), name
        assert 1 in set(forced.edge_colors.values())


def test_bipartite_avd_certificates(bip_corpus):
    for name, g in bip_corpus.items():
        f = bipartite_avd_coloring(g, g.max_degree + 2)
        assert verify_avd(g, f).ok, name
        # vertex colors split exactly along the bipartition
        v1, v2 = bipartition(g).parts
        assert len({f.vertex_colors[v] for v in v1}) == 1
        assert len({f.vertex_colors[v] for v in v2}) == 1


def test_bipartite_avd_rejects():
    with pytest.raises(NotBipartiteError):
        bipartite_avd_coloring(cycle_graph(3), 5)
    with pytest.raises(ValueError, match="too small"):
        bipartite_avd_coloring(cycle_graph(4), 3)
    with pytest.raises(ValueError):
        bipartite_avd_coloring(cycle_graph(4), 4, required_edge_color=9)
