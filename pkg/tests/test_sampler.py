"""
Tests of the uniform-marginal independent set sampler. Exact marginals come from rational enumeration of the sampler's
decision tree.
"""

import itertools
import typing
from fractions import Fraction
import pytest
from shared import custom_exception
from dipw_engine.digraph import digraph as dg
from dipw_engine.digraph import generators
from dipw_engine.digraph import vertex_set as vs
from dipw_engine.sampler import independent_set_sampler as iss
from dipw_engine.sampler import ugraph


def test_inclusion_probability() -> None:
    assert iss.inclusion_probability(0) == Fraction(1, 2)
    assert iss.inclusion_probability(3) == Fraction(1, 8)
    with pytest.raises(ValueError):
        iss.inclusion_probability(-1)


def test_single_edge_marginals() -> None:
    records = iss.exact_conditional_marginals(ugraph.UGraph(2, [(0, 1)]), 1)
    first_round = [record for record in records if record.i == 0]
    assert [record.probability for record in first_round] == [Fraction(1, 4), Fraction(1, 4)]
    assert all(record.matches for record in records)


def test_edgeless_marginals_with_zero_degree() -> None:
    records = iss.exact_conditional_marginals(ugraph.UGraph(2), 0)
    assert [record.probability for record in records if record.i == 0] == [Fraction(1, 2), Fraction(1, 2)]
    assert all(record.matches for record in records)


@pytest.mark.parametrize(
    "graph, d",
    [
        (ugraph.UGraph(3, [(0, 1), (1, 2)]), 2),
        (ugraph.UGraph(4, [(0, 1), (2, 3)]), 1),
        (ugraph.UGraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]), 2),
        (ugraph.UGraph(5), 1),
        (ugraph.UGraph(5, [(0, 1), (0, 2), (0, 3)]), 3),
    ],
    ids=["path-3", "matching-4", "cycle-4", "edgeless-5", "star-4"],
)
def test_every_reachable_state_has_exact_marginals(graph: ugraph.UGraph, d: int) -> None:
    records = iss.exact_conditional_marginals(graph, d)
    assert records
    mismatches = [record for record in records if not record.matches]
    assert not mismatches
    initial = [record for record in records if record.i == 0]
    assert {record.probability for record in initial} == {iss.inclusion_probability(d)}
    assert sum(record.state_probability for record in initial) == len(initial)


def _all_graphs(n: int) -> typing.Iterator[ugraph.UGraph]:
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield ugraph.UGraph(n, [pair for j, pair in enumerate(pairs) if (mask >> j) & 1])


def _assert_exact_marginals_up_to(max_n: int) -> None:
    for n in range(1, max_n + 1):
        for graph in _all_graphs(n):
            for d in range(graph.max_degree(), 3):
                mismatches = [record for record in iss.exact_conditional_marginals(graph, d) if not record.matches]
                assert not mismatches, f"{graph!r} d={d}: {mismatches[0]}"


def test_exact_marginals_of_every_graph_up_to_four_vertices() -> None:
    _assert_exact_marginals_up_to(4)


@pytest.mark.slow
def test_exact_marginals_of_every_graph_up_to_six_vertices() -> None:
    _assert_exact_marginals_up_to(6)


def test_isolated_vertex_is_sampled_with_uneven_completion_load() -> None:
    for seed in range(30):
        sample = iss.sample_independent_set(ugraph.UGraph(1), 1, seed)
        assert sample in (0, 1)
    records = iss.exact_conditional_marginals(ugraph.UGraph(1), 1)
    assert all(record.matches for record in records)
    assert [record.probability for record in records if record.i == 0] == [Fraction(1, 4)]


def test_samples_of_random_bounded_degree_graphs() -> None:
    for seed in range(60):
        n = 1 + seed % 28
        d = seed % 5
        graph = ugraph.random_bounded_degree_graph(n, d, seed)
        assert graph.is_independent(iss.sample_independent_set(graph, d, seed))


def test_samples_are_independent_and_deterministic() -> None:
    graph = ugraph.random_bounded_degree_graph(20, 3, seed=9)
    sampler = iss.IndependentSetSampler(graph, 3)
    for seed in range(50):
        sample = sampler.sample(seed)
        assert graph.is_independent(sample)
        assert sample == iss.sample_independent_set(graph, 3, seed)


def test_sampler_round_sizes() -> None:
    sampler = iss.IndependentSetSampler(ugraph.UGraph(7), 2)
    assert sampler.rounds == 3
    assert [sampler.round_size(i) for i in range(3)] == [18, 15, 12]
    state = sampler.initial_state()
    assert state.v_set == vs.full(7) and state.i_set == 0 and not state.finished
    assert state.round_size == 18


def test_step_through_added_vertex_keeps_candidate_set() -> None:
    sampler = iss.IndependentSetSampler(ugraph.UGraph(2, [(0, 1)]), 1)
    state = sampler.initial_state()
    completion, kept = sampler.completion(state.v_set, state.round_size)
    assert kept == [0, 1]
    assert completion.edges() == [(0, 1), (2, 3)]
    after_added = sampler.step(state, 3)
    assert after_added.i_set == 0 and after_added.v_set == 0b11 and after_added.finished
    after_original = sampler.step(state, 1)
    assert after_original.i_set == 0b10 and after_original.v_set == 0


def test_degree_bound_violation() -> None:
    triangle = ugraph.UGraph(3, [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(custom_exception.DipwInputError, match="maximum degree"):
        iss.IndependentSetSampler(triangle, 1)
    with pytest.raises(custom_exception.DipwInputError):
        iss.sample_independent_set(triangle, -1, 0)


def test_samples_of_h_semicomplete_digraphs_induce_semicomplete_subdigraphs() -> None:
    graph = generators.random_h_semicomplete(15, 2, 21)
    complement = ugraph.underlying_complement(graph)
    assert complement.max_degree() <= dg.h_index(graph)
    for seed in range(20):
        sample = iss.sample_independent_set(complement, 2, seed)
        induced, _ = dg.induced_subgraph(graph, sample)
        assert dg.is_semicomplete(induced)


def test_ugraph_io(tmp_path) -> None:
    graph = ugraph.UGraph(4, [(0, 1), (2, 3)])
    text = ugraph.write_ugraph(graph)
    assert ugraph.read_ugraph(text) == graph
    path = tmp_path / "graph.ug"
    path.write_text(text, encoding="utf-8")
    assert ugraph.load_ugraph(str(path)) == graph
    with pytest.raises(custom_exception.DipwInputError):
        ugraph.UGraph(2, [(0, 0)])
    with pytest.raises(custom_exception.DipwInputError):
        ugraph.UGraph(2, [(0, 1), (1, 0)])


def test_random_bounded_degree_graph() -> None:
    for seed in range(10):
        graph = ugraph.random_bounded_degree_graph(12, 2, seed)
        assert graph.max_degree() <= 2
    assert ugraph.random_bounded_degree_graph(8, 3, 5) == ugraph.random_bounded_degree_graph(8, 3, 5)
    assert ugraph.random_bounded_degree_graph(6, 3, 5, density=0.0).edge_count == 0
