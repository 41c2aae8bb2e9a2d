from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from coronacolor import (
    build_graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
)


def k4_minus_edge():
    return build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


# Connected graphs small enough for the exact oracles (|V|+|E| <= 16).
def oracle_corpus():
    return {
        "K2": complete_graph(2),
        "K3": complete_graph(3),
        "K4": complete_graph(4),
        "P3": path_graph(3),
        "P4": path_graph(4),
        "P5": path_graph(5),
        "C3": cycle_graph(3),
        "C4": cycle_graph(4),
        "C5": cycle_graph(5),
        "C6": cycle_graph(6),
        "K1_2": star_graph(2),
        "K1_3": star_graph(3),
        "K1_4": star_graph(4),
        "K2_3": complete_bipartite_graph(2, 3),
        "K4-e": k4_minus_edge(),
    }


def bipartite_corpus():
    return {
        "P2": path_graph(2),
        "P3": path_graph(3),
        "P4": path_graph(4),
        "P5": path_graph(5),
        "C4": cycle_graph(4),
        "C6": cycle_graph(6),
        "K1_2": star_graph(2),
        "K1_3": star_graph(3),
        "K1_4": star_graph(4),
        "K2_3": complete_bipartite_graph(2, 3),
    }


@pytest.fixture(scope="session")
def corpus():
    return oracle_corpus()


@pytest.fixture(scope="session")
def bip_corpus():
    return bipartite_corpus()
