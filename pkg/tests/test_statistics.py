"""
Tests of the Monte Carlo validation of the sampler: binomial marginal intervals and tail bounds.
"""

import math
import numpy as np
import pytest
from dipw_engine.digraph import vertex_set as vs
from dipw_engine.sampler import statistics
from dipw_engine.sampler import ugraph


def test_tail_bound() -> None:
    assert statistics.tail_bound(3, 10) == pytest.approx(math.exp(-9 / 90))
    assert statistics.tail_bound(3, 10, statistics.TIGHT_TAIL_CONSTANT) == pytest.approx(math.exp(-9 / 60))
    assert statistics.tail_bound(5, 0) == 1.0


def test_deviation_grid() -> None:
    assert statistics.deviation_grid(4) == [1, 2, 3, 4, 5, 6]
    assert statistics.deviation_grid(0) == []


def test_default_target_sets() -> None:
    sets = statistics.default_target_sets(12, seed=1)
    assert [vs.size(target) for target in sets] == [5, 10, 12]
    assert statistics.default_target_sets(12, seed=1) == sets
    assert statistics.default_target_sets(4, seed=1) == [vs.full(4)]


def test_tally_merge() -> None:
    first = statistics.SampleTally(2, np.array([1, 0]), [np.array([1, 1])], dependent_runs=0)
    second = statistics.SampleTally(3, np.array([0, 2]), [np.array([2, 1])], dependent_runs=1)
    merged = first.merge(second)
    assert merged.trials == 5
    assert merged.inclusion_counts.tolist() == [1, 2]
    assert merged.intersection_counts[0].tolist() == [3, 2]
    assert merged.dependent_runs == 1


def test_tally_samples_counts_every_run() -> None:
    graph = ugraph.UGraph(4, [(0, 1), (2, 3)])
    tally = statistics.tally_samples(graph, 1, [vs.full(4)], list(range(30)))
    assert tally.trials == 30
    assert tally.dependent_runs == 0
    assert int(tally.intersection_counts[0].sum()) == 30
    assert int(tally.inclusion_counts.sum()) == int((tally.intersection_counts[0] * np.arange(5)).sum())


def test_sampler_passes_marginal_and_tail_check() -> None:
    graph = ugraph.random_bounded_degree_graph(12, 2, seed=17)
    target_sets = statistics.default_target_sets(graph.n, seed=17)
    report = statistics.marginal_and_tail_check(graph, 2, 2000, target_sets, seed=17, confidence=0.99999)
    assert report.p == pytest.approx(1 / 6)
    assert len(report.marginals) == 12
    assert report.dependent_runs == 0
    assert report.marginals_ok
    assert report.tails_ok
    assert report.passed


def test_report_does_not_depend_on_jobs() -> None:
    graph = ugraph.random_bounded_degree_graph(8, 1, seed=2)
    target_sets = [vs.full(8)]
    single = statistics.marginal_and_tail_check(graph, 1, 60, target_sets, seed=5)
    parallel = statistics.marginal_and_tail_check(graph, 1, 60, target_sets, seed=5, jobs=4)
    assert single == parallel


def test_report_formats() -> None:
    graph = ugraph.UGraph(3)
    report = statistics.marginal_and_tail_check(graph, 0, 40, [vs.full(3)], seed=8)
    table = statistics.format_report_table(report)
    assert table.startswith("d = 0, trials = 40")
    assert "dependent runs: 0" in table
    lines = statistics.format_report_csv(report).splitlines()
    assert lines[0] == "set_id,t,empirical_upper,bound,empirical_lower"
    assert len(lines) == 1 + len(statistics.deviation_grid(3))
    assert lines[1].startswith("0,1,")


def test_failed_rows_are_reported() -> None:
    row = statistics.TailRow(
        set_id=0, size=4, t=1, empirical_upper=0.9, empirical_lower=0.0, bound=0.5, tight_bound=0.4, slack=0.01
    )
    assert not row.upper_ok and row.lower_ok
    marginal = statistics.MarginalRow(v=0, count=3, frequency=0.3, interval=(5, 9))
    assert not marginal.inside


@pytest.mark.slow
def test_sampler_passes_check_at_acceptance_scale() -> None:
    graph = ugraph.random_bounded_degree_graph(40, 3, seed=23)
    target_sets = statistics.default_target_sets(graph.n, seed=23)
    report = statistics.marginal_and_tail_check(graph, 3, 20000, target_sets, seed=23, jobs=4, confidence=0.99999)
    assert report.passed
