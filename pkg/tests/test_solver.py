"""
Tests of the recursive pathwidth solver. Answers are compared against the exact oracle.
"""

import pytest
from shared import custom_exception
from dipw_engine.digraph import digraph as dg
from dipw_engine.digraph import generators
from dipw_engine.digraph import vertex_set as vs
from dipw_engine.digraph.digraph import Digraph
from dipw_engine.oracle import vertex_separation_dp
from dipw_engine.separations import decomposition as dec
from dipw_engine.separations import min_separation
from dipw_engine.separations import separation as sep_mod
from dipw_engine.solver import instance as inst
from dipw_engine.solver import pathwidth_solver
from tests.conftest import KNOWN_PATHWIDTHS, spider_counterexample


@pytest.mark.parametrize("name, graph, expected", KNOWN_PATHWIDTHS, ids=[row[0] for row in KNOWN_PATHWIDTHS])
def test_known_pathwidths(name, graph, expected) -> None:  # pylint: disable=unused-argument
    width, decomposition = pathwidth_solver.compute_pathwidth(graph)
    assert width == expected
    report = dec.validate_decomposition(graph, decomposition)
    assert report.valid
    assert report.width == expected


def test_spider_counterexample_has_pathwidth_one() -> None:
    width, _ = pathwidth_solver.compute_pathwidth(spider_counterexample())
    assert width == 1


@pytest.mark.parametrize("name, graph, expected", KNOWN_PATHWIDTHS[1:], ids=[row[0] for row in KNOWN_PATHWIDTHS[1:]])
def test_decision_boundary(name, graph, expected) -> None:  # pylint: disable=unused-argument
    decomposition, _ = pathwidth_solver.solve(graph, expected)
    assert decomposition is not None and decomposition.width <= expected
    if expected > 0:
        refused, stats = pathwidth_solver.solve(graph, expected - 1)
        assert refused is None
        assert stats.instance_count + stats.base_count >= 1


def test_solver_matches_oracle_on_h_semicomplete_digraphs() -> None:
    for seed in range(25):
        n = 5 + seed % 4
        h = seed % 3
        graph = generators.random_h_semicomplete(n, h, seed)
        expected = vertex_separation_dp.oracle_pathwidth(graph)
        width, decomposition = pathwidth_solver.compute_pathwidth(graph)
        assert width == expected, f"seed {seed}"
        assert dec.validate_decomposition(graph, decomposition).valid


def test_solver_matches_oracle_on_sparse_digraphs() -> None:
    for seed in range(25):
        graph = generators.random_digraph(6, 0.3, seed)
        width, _ = pathwidth_solver.compute_pathwidth(graph)
        assert width == vertex_separation_dp.oracle_pathwidth(graph), f"seed {seed}"


def test_memoization_does_not_change_answers() -> None:
    for seed in range(10):
        graph = generators.random_h_semicomplete(7, 1, seed)
        plain = pathwidth_solver.compute_pathwidth(graph)[0]
        memoized, _ = pathwidth_solver.compute_pathwidth(graph, memoize=True)
        assert plain == memoized
        refused, stats = pathwidth_solver.solve(graph, max(plain - 1, 0), memoize=True)
        assert (refused is None) == (plain > 0)
        assert stats.memo_hits >= 0


def test_instance_count_stays_within_bound() -> None:
    for seed in range(10):
        h = seed % 3
        graph = generators.random_h_semicomplete(7, h, seed)
        for k in range(3):
            _, stats = pathwidth_solver.solve(graph, k)
            bound = inst.instance_count_bound(min_separation.mu_prime(graph, vs.EMPTY, vs.EMPTY), h, k)
            assert stats.instance_count <= bound


def test_base_case_chain_on_path() -> None:
    graph = dg.directed_path(3)
    chain = pathwidth_solver.base_case_chain(graph, inst.Instance(vs.EMPTY, vs.EMPTY, 2))
    report = sep_mod.chain_predicates(graph, chain)
    assert report.is_st_chain and report.is_gapless
    assert report.order == 0
    with pytest.raises(custom_exception.DipwInputError, match="Base case"):
        pathwidth_solver.base_case_chain(graph, inst.Instance(vs.EMPTY, vs.EMPTY, 1))


def test_solve_instance_returns_tight_chain() -> None:
    graph = dg.directed_cycle(5)
    chain = pathwidth_solver.solve_instance(graph, inst.Instance(0b00001, 0b10000, 1))
    assert chain is not None
    report = sep_mod.chain_predicates(graph, chain, 0b00001, 0b10000)
    assert report.is_st_chain and report.is_gapless and report.is_tight
    assert report.order <= 1


def test_solve_instance_rejects_non_admissible_pairs() -> None:
    graph = dg.directed_path(3)
    with pytest.raises(custom_exception.DipwInputError, match="N\\+\\[S\\] meets T"):
        pathwidth_solver.solve_instance(graph, inst.Instance(0b001, 0b010, 1))
    with pytest.raises(custom_exception.DipwInputError, match="exceeds"):
        pathwidth_solver.solve_instance(dg.complete_biorientation(4), inst.Instance(0b0001, vs.EMPTY, 1))
    with pytest.raises(ValueError):
        pathwidth_solver.PathwidthSolver(graph, -1)


def test_admissibility_helpers() -> None:
    graph = dg.directed_cycle(4)
    assert inst.is_admissible(graph, 0b0001, 0b0100, 1)
    assert inst.admissibility_defect(graph, 0b0001, 0b0010, 1) == "N+[S] meets T"
    assert inst.admissibility_defect(graph, 0b0011, vs.EMPTY, 0).startswith("d+(S)")
    assert inst.admissibility_defect(graph, vs.EMPTY, 0b0011, 0).startswith("d-(T)")


def test_stats_merge() -> None:
    first = inst.SolveStats(instance_count=2, max_depth=3, memo_hits=1)
    second = inst.SolveStats(instance_count=5, max_depth=1, max_fanout_s=4)
    merged = first.merge(second)
    assert merged.instance_count == 7
    assert merged.max_depth == 3
    assert merged.max_fanout_s == 4
    assert merged.memo_hits == 1
    assert merged == second.merge(first)


def test_instance_count_bound_values() -> None:
    assert inst.instance_count_bound(5, 1, 2) == 5 * 6**4
    assert inst.instance_count_bound(5, 1, 2, gamma_value=2) == 5
    assert inst.instance_count_bound(0, 0, 0) == 0


@pytest.mark.slow
def test_solver_matches_oracle_on_larger_semicomplete_digraphs() -> None:
    for seed in range(20):
        graph = generators.random_h_semicomplete(12, 2, seed)
        width, _ = pathwidth_solver.compute_pathwidth(graph, memoize=True)
        assert width == vertex_separation_dp.oracle_pathwidth(graph), f"seed {seed}"


def _assert_solver_agrees_with_oracle(graph: Digraph) -> None:
    pathwidth = vertex_separation_dp.oracle_pathwidth(graph)
    for k in range(graph.n):
        decomposition, _ = pathwidth_solver.solve(graph, k)
        assert (decomposition is not None) == (pathwidth <= k), f"{graph!r} k={k} oracle={pathwidth}"
        if decomposition is not None:
            report = dec.validate_decomposition(graph, decomposition)
            assert report.valid and report.width <= k


def test_solver_decides_every_four_vertex_digraph() -> None:
    for graph in generators.all_digraphs(4):
        _assert_solver_agrees_with_oracle(graph)


@pytest.mark.slow
@pytest.mark.parametrize("n", [5, 6])
def test_solver_decides_random_digraphs(n: int) -> None:
    for seed in range(1000):
        _assert_solver_agrees_with_oracle(generators.random_digraph(n, 0.1 + 0.1 * (seed % 9), seed))


def _assert_fanout_within_bound(graph: Digraph, h: int, k: int) -> int:
    assert dg.h_index(graph) <= h
    _, stats = pathwidth_solver.solve(graph, k)
    assert stats.max_fanout_s <= h + 2 * k + 1
    assert stats.max_fanout_t <= h + 2 * k + 1
    bound = inst.instance_count_bound(min_separation.mu_prime(graph, vs.EMPTY, vs.EMPTY), h, k)
    assert stats.instance_count <= bound
    return stats.branch_count


def test_branch_fanout_stays_within_bound() -> None:
    branches = 0
    for seed in range(30):
        graph = generators.random_h_semicomplete(9, seed % 3, seed)
        for k in range(1, 4):
            branches += _assert_fanout_within_bound(graph, seed % 3, k)
    assert branches > 0


@pytest.mark.slow
def test_branch_fanout_and_instance_count_on_larger_digraphs() -> None:
    for seed in range(200):
        graph = generators.random_h_semicomplete(8 + seed % 13, seed % 3, seed)
        _assert_fanout_within_bound(graph, seed % 3, 1 + seed % 5)
