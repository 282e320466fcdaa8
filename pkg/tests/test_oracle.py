"""
Tests of the exact subset dynamic program.
"""

import itertools
import pytest
from shared import custom_exception
from dipw_engine.digraph import digraph as dg
from dipw_engine.digraph import generators
from dipw_engine.oracle import vertex_separation_dp
from tests.conftest import KNOWN_PATHWIDTHS, spider_counterexample


@pytest.mark.parametrize("name, graph, expected", KNOWN_PATHWIDTHS, ids=[row[0] for row in KNOWN_PATHWIDTHS])
def test_known_pathwidths(name, graph, expected) -> None:  # pylint: disable=unused-argument
    assert vertex_separation_dp.oracle_pathwidth(graph) == expected


def test_dynamic_program_matches_brute_force_on_all_three_vertex_digraphs() -> None:
    for graph in generators.all_digraphs(3):
        assert vertex_separation_dp.oracle_pathwidth(graph) == vertex_separation_dp.brute_force_pathwidth(graph)


def test_dynamic_program_matches_brute_force_on_random_digraphs() -> None:
    for seed in range(30):
        graph = generators.random_digraph(3 + seed % 4, 0.45, seed)
        assert vertex_separation_dp.oracle_pathwidth(graph) == vertex_separation_dp.brute_force_pathwidth(graph)


def test_oracle_ordering_attains_pathwidth() -> None:
    for seed in range(20):
        graph = generators.random_h_semicomplete(8, seed % 3, seed)
        ordering = vertex_separation_dp.oracle_ordering(graph)
        assert sorted(ordering) == list(range(graph.n))
        assert vertex_separation_dp.ordering_width(graph, ordering) == vertex_separation_dp.oracle_pathwidth(graph)


def test_out_section_table() -> None:
    graph = dg.directed_path(3)
    table = vertex_separation_dp.out_section_table(graph)
    assert list(table) == [graph.d_plus(subset) for subset in range(8)]
    assert list(table) == [0, 1, 1, 1, 0, 1, 0, 0]


def test_ordering_width() -> None:
    graph = spider_counterexample()
    assert vertex_separation_dp.ordering_width(graph, list(range(7))) == 1
    assert vertex_separation_dp.ordering_width(graph, list(range(6, -1, -1))) == 6
    with pytest.raises(custom_exception.DipwInputError):
        vertex_separation_dp.ordering_width(graph, [0, 1])


def test_cap_is_enforced() -> None:
    graph = dg.edgeless(5)
    with pytest.raises(custom_exception.OracleCapError) as error_info:
        vertex_separation_dp.oracle_pathwidth(graph, cap=4)
    assert "5" in str(error_info.value) and "4" in str(error_info.value)
    with pytest.raises(custom_exception.OracleCapError):
        vertex_separation_dp.brute_force_pathwidth(dg.edgeless(9))
    assert vertex_separation_dp.oracle_pathwidth(graph, cap=5) == 0


def test_every_ordering_width_is_an_upper_bound() -> None:
    graph = dg.directed_cycle(4)
    for ordering in itertools.permutations(range(4)):
        assert vertex_separation_dp.ordering_width(graph, ordering) >= 1


def test_cap_above_subset_width_is_refused() -> None:
    assert vertex_separation_dp.oracle_pathwidth(dg.edgeless(3), cap=vertex_separation_dp.MAX_ORACLE_CAP) == 0
    with pytest.raises(ValueError, match="<cap>"):
        vertex_separation_dp.oracle_pathwidth(dg.edgeless(3), cap=vertex_separation_dp.MAX_ORACLE_CAP + 1)
    with pytest.raises(ValueError, match="<cap>"):
        vertex_separation_dp.brute_force_pathwidth(dg.edgeless(3), cap=40)
