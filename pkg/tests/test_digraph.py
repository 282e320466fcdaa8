"""
Tests of vertex sets, the digraph type, the edge-list format and the generators.
"""

import pytest
from shared import custom_exception
from dipw_engine.digraph import digraph as dg
from dipw_engine.digraph import edge_list_io
from dipw_engine.digraph import generators
from dipw_engine.digraph import vertex_set as vs
from dipw_engine.digraph.digraph import Digraph


def test_vertex_set_helpers() -> None:
    mask = vs.from_iterable([4, 0, 3, 3])
    assert vs.members(mask) == [0, 3, 4]
    assert list(vs.iter_members(mask)) == [0, 3, 4]
    assert vs.size(mask) == 3
    assert vs.contains(mask, 3) and not vs.contains(mask, 1)
    assert vs.lowest(mask) == 0
    assert vs.format_members(mask) == "0 3 4"
    assert vs.format_members(vs.EMPTY) == ""
    assert vs.full(3) == 0b111
    assert vs.is_subset(vs.singleton(3), mask)


def test_as_vertex_set_rejects_out_of_range_members() -> None:
    assert vs.as_vertex_set([0, 2], 3) == 0b101
    with pytest.raises(custom_exception.DipwInputError, match="out of range"):
        vs.as_vertex_set([0, 3], 3)
    with pytest.raises(custom_exception.DipwInputError):
        vs.from_iterable([-1])
    with pytest.raises(custom_exception.DipwInputError):
        vs.lowest(vs.EMPTY)


def test_digraph_rejects_invalid_edges() -> None:
    with pytest.raises(custom_exception.DipwInputError, match="Self-loop"):
        Digraph(3, [(1, 1)])
    with pytest.raises(custom_exception.DipwInputError, match="Duplicate"):
        Digraph(3, [(0, 1), (0, 1)])
    with pytest.raises(custom_exception.DipwInputError, match="out of range"):
        Digraph(3, [(0, 3)])
    with pytest.raises(custom_exception.DipwInputError):
        Digraph(-1)


def test_adjacency_is_mirrored() -> None:
    graph = Digraph(4, [(0, 1), (1, 2), (3, 1)])
    for tail, head in graph.edges():
        assert vs.contains(graph.in_mask(head), tail)
    assert graph.out_neighbors(1) == [2]
    assert graph.in_neighbors(1) == [0, 3]
    assert graph.out_degrees().tolist() == [1, 1, 0, 1]
    assert graph.in_degrees().tolist() == [0, 2, 1, 0]
    assert graph.edge_count == 3


def test_set_degrees() -> None:
    graph = dg.directed_path(5)
    assert dg.d_plus(graph, [0, 1]) == 1
    assert dg.d_minus(graph, [3, 4]) == 1
    assert dg.d_plus(graph, graph.vertices) == 0
    assert dg.d_plus(dg.complete_biorientation(4), [0]) == 3
    with pytest.raises(custom_exception.DipwInputError):
        dg.d_plus(graph, [5])


def test_h_index_and_semicompleteness() -> None:
    assert dg.h_index(dg.transitive_tournament(5)) == 0
    assert dg.is_semicomplete(dg.directed_cycle(3))
    assert dg.h_index(dg.directed_cycle(5)) == 2
    assert dg.h_index(dg.edgeless(4)) == 3
    with pytest.raises(custom_exception.DipwInputError):
        dg.require_semicomplete(dg.directed_path(3))


def test_semicomplete_completion_orients_from_later_to_earlier() -> None:
    graph = dg.directed_path(4)
    completion = dg.semicomplete_completion(graph)
    assert dg.is_semicomplete(completion)
    assert all(completion.has_edge(tail, head) for tail, head in graph.edges())
    # vertex 3 has out-degree 0 and comes first, so every added edge towards it points into it
    assert completion.has_edge(0, 3) and completion.has_edge(1, 3)
    tournament = dg.transitive_tournament(4)
    assert dg.semicomplete_completion(tournament) is tournament


def test_induced_subgraph_relabels() -> None:
    graph = dg.directed_cycle(4)
    induced, kept = dg.induced_subgraph(graph, [1, 2, 3])
    assert kept == [1, 2, 3]
    assert induced.edges() == [(0, 1), (1, 2)]


def test_named_constructors() -> None:
    assert dg.directed_cycle(3).edges() == [(0, 1), (1, 2), (2, 0)]
    assert dg.complete_biorientation(3).edge_count == 6
    assert dg.transitive_tournament(4).out_degrees().tolist() == [3, 2, 1, 0]
    assert dg.directed_cycle(3).reverse().edges() == [(0, 2), (1, 0), (2, 1)]
    with pytest.raises(custom_exception.DipwInputError):
        dg.directed_cycle(2)


def test_edge_list_reads_comments_and_canonicalizes() -> None:
    text = "# a triangle\n3 3\n2 0\n0 1\n\n1 2\n"
    graph = edge_list_io.read_digraph(text)
    assert graph == dg.directed_cycle(3)
    assert edge_list_io.write_digraph(graph) == "3 3\n0 1\n1 2\n2 0\n"


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("", "missing"),
        ("3\n", "line 1"),
        ("3 1\n0 0\n", "line 2: self-loop"),
        ("3 2\n0 1\n0 1\n", "line 3: duplicate"),
        ("3 1\n0 3\n", "out of range"),
        ("3 2\n0 1\n", "declares 2 edges"),
        ("3 1\n0 1\n1 2\n", "line 3: more than"),
        ("3 1\n0 x\n", "line 2"),
    ],
)
def test_edge_list_errors_name_the_line(text: str, fragment: str) -> None:
    with pytest.raises(custom_exception.GraphFormatError, match=fragment):
        edge_list_io.read_digraph(text)


def test_undirected_variant_rejects_reversed_duplicate() -> None:
    assert edge_list_io.parse_edge_list("3 2\n0 1\n2 1\n", undirected=True) == (3, [(0, 1), (2, 1)])
    with pytest.raises(custom_exception.GraphFormatError, match="duplicate"):
        edge_list_io.parse_edge_list("3 2\n0 1\n1 0\n", undirected=True)
    assert edge_list_io.read_digraph("2 2\n0 1\n1 0\n").edge_count == 2


def test_load_digraph_reports_missing_file(tmp_path) -> None:
    with pytest.raises(OSError):
        edge_list_io.load_digraph(str(tmp_path / "missing.dg"))
    path = tmp_path / "c3.dg"
    edge_list_io.save_text(str(path), edge_list_io.write_digraph(dg.directed_cycle(3)))
    assert edge_list_io.load_digraph(str(path)) == dg.directed_cycle(3)


@pytest.mark.parametrize("h", [0, 1, 2, 3])
def test_random_h_semicomplete_respects_h(h: int) -> None:
    for seed in range(5):
        graph = generators.random_h_semicomplete(12, h, seed)
        assert graph.n == 12
        assert dg.h_index(graph) <= h
    assert generators.random_h_semicomplete(12, h, 42) == generators.random_h_semicomplete(12, h, 42)


def test_random_h_semicomplete_needs_h_below_n() -> None:
    with pytest.raises(custom_exception.DipwInputError):
        generators.random_h_semicomplete(3, 3, 0)


def test_random_digraph_extremes() -> None:
    assert generators.random_digraph(5, 0.0, 1).edge_count == 0
    assert generators.random_digraph(5, 1.0, 1) == dg.complete_biorientation(5)


def test_all_digraphs_counts() -> None:
    assert sum(1 for _ in generators.all_digraphs(2)) == 4
    assert len(set(generators.all_digraphs(3))) == 64


def test_few_vertices_extend_a_set_of_small_out_degree() -> None:
    for seed in range(12):
        h = seed % 3
        graph = generators.random_h_semicomplete(7, h, seed)
        for u_set in range(1 << graph.n):
            outside = vs.members(graph.vertices & ~u_set)
            for k in range(1, 4):
                extending = [v for v in outside if graph.d_plus(u_set | (1 << v)) <= k]
                assert len(extending) <= h + 2 * k + 1, f"seed {seed} U={u_set} k={k}"
