"""
Tests of the d-regular completion and its feasibility criterion.
"""

import itertools
import typing
import networkx as nx
import pytest
from shared import custom_exception
from dipw_engine.sampler import regular_completion as rc
from dipw_engine.sampler import ugraph


@pytest.mark.parametrize(
    "degrees, d, m, expected",
    [
        ([0], 2, 2, True),
        ([0], 2, 1, False),
        ([1, 1], 1, 0, True),
        ([0, 0], 1, 1, False),
        ([0, 0], 1, 2, True),
        ([2, 2, 2], 3, 1, True),
        ([2, 2, 2], 3, 2, False),
        ([], 3, 4, True),
    ],
)
def test_erdos_kelly_feasible(degrees, d: int, m: int, expected: bool) -> None:
    assert rc.erdos_kelly_feasible(degrees, d, m) is expected


def _extends_by_brute_force(deficits, d: int, m: int) -> bool:
    if m == 0:
        return not any(deficits)
    for choice in itertools.product(*(itertools.combinations(range(m), deficit) for deficit in deficits)):
        load = [0] * m
        for targets in choice:
            for target in targets:
                load[target] += 1
        if max(load) <= d and nx.is_graphical([d - value for value in load]):
            return True
    return False


def test_erdos_kelly_matches_brute_force() -> None:
    for n in range(1, 4):
        for d in range(1, 3):
            for degrees in itertools.product(range(d + 1), repeat=n):
                if not nx.is_graphical(list(degrees)):
                    continue
                deficits = [d - degree for degree in degrees]
                for m in range(5):
                    expected = _extends_by_brute_force(deficits, d, m)
                    assert rc.erdos_kelly_feasible(degrees, d, m) is expected, f"{degrees} d={d} m={m}"


def test_erdos_kelly_rejects_large_degree() -> None:
    with pytest.raises(custom_exception.DipwInputError):
        rc.erdos_kelly_feasible([3], 2, 4)


def test_completion_of_single_edge() -> None:
    graph = ugraph.UGraph(3, [(0, 1)])
    completion = rc.regular_completion(graph, 2, 6)
    assert completion.n == 6
    assert all(completion.degree(v) == 2 for v in range(6))
    assert completion.has_edge(0, 1)


def test_single_edge_completes_to_perfect_matching() -> None:
    completion = rc.regular_completion(ugraph.UGraph(2, [(0, 1)]), 1, 4)
    assert completion.edges() == [(0, 1), (2, 3)]


def test_path_completes_to_cycle_cover() -> None:
    path = ugraph.UGraph(3, [(0, 1), (1, 2)])
    completion = rc.regular_completion(path, 2, 6)
    assert set(completion.degrees().tolist()) == {2}
    assert completion.has_edge(0, 1) and completion.has_edge(1, 2)


def test_completion_is_deterministic() -> None:
    graph = ugraph.random_bounded_degree_graph(9, 3, seed=4)
    assert rc.regular_completion(graph, 3, 14) == rc.regular_completion(graph, 3, 14)


def test_random_completions_are_regular_supergraphs() -> None:
    for seed in range(40):
        d = 1 + seed % 4
        n = 3 + seed % 9
        graph = ugraph.random_bounded_degree_graph(n, d, seed)
        total = n + d + 1 + (seed % 3)
        if total * d % 2:
            total += 1
        completion = rc.regular_completion(graph, d, total)
        assert completion.n == total
        assert set(completion.degrees().tolist()) == {d}
        assert all(completion.has_edge(u, v) for u, v in graph.edges())


def _all_graphs(n: int) -> typing.Iterator[ugraph.UGraph]:
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield ugraph.UGraph(n, [pair for j, pair in enumerate(pairs) if (mask >> j) & 1])


def _valid_totals(n: int, d: int) -> typing.List[int]:
    return [total for total in range(n + d + 1, n + 3 * (d + 1) + 1) if total * d % 2 == 0]


def _assert_regular_supergraph(graph: ugraph.UGraph, d: int, total: int) -> None:
    completion = rc.regular_completion(graph, d, total)
    assert completion.n == total
    assert all(completion.degree(v) == d for v in range(total)), f"{graph!r} d={d} N={total}"
    assert all(completion.has_edge(u, v) for u, v in graph.edges())


@pytest.mark.parametrize(
    "graph, d, total",
    [
        (ugraph.UGraph(1), 1, 4),
        (ugraph.UGraph(3, [(0, 1)]), 1, 8),
        (ugraph.UGraph(1), 3, 6),
        (ugraph.UGraph(2), 2, 7),
    ],
    ids=["isolated-vertex", "edge-and-two-isolated", "isolated-vertex-cubic", "two-isolated-d2"],
)
def test_uneven_load_of_added_vertices(graph: ugraph.UGraph, d: int, total: int) -> None:
    _assert_regular_supergraph(graph, d, total)


def test_every_small_graph_on_every_valid_total() -> None:
    for n in range(1, 5):
        for graph in _all_graphs(n):
            for d in range(graph.max_degree(), 4):
                for total in _valid_totals(n, d):
                    _assert_regular_supergraph(graph, d, total)


@pytest.mark.slow
def test_completion_grid() -> None:
    for n in range(1, 7):
        for d in range(6):
            for seed in range(10):
                graph = ugraph.random_bounded_degree_graph(n, d, seed)
                for total in _valid_totals(n, d):
                    _assert_regular_supergraph(graph, d, total)


def test_zero_degree_completion() -> None:
    completion = rc.regular_completion(ugraph.UGraph(2), 0, 3)
    assert completion.edge_count == 0


def test_completion_errors() -> None:
    graph = ugraph.UGraph(3, [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(custom_exception.DipwInputError, match="maximum degree"):
        rc.regular_completion(graph, 1, 10)
    with pytest.raises(custom_exception.DipwInputError, match="n \\+ d \\+ 1"):
        rc.regular_completion(graph, 2, 5)
    with pytest.raises(custom_exception.DipwInputError, match="odd"):
        rc.regular_completion(ugraph.UGraph(2), 1, 5)
