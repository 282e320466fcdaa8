"""
Monte Carlo validation of the *Independent Set Sampler*: per-vertex inclusion frequencies against exact binomial
intervals around `p = 1 / (2(d + 1))`, and tails of `|S ∩ I|` for target sets `S` against `exp(-t² / (9|S|))`.
"""

from __future__ import annotations  # allowing future references -> return class under which return value is returned
import csv
import dataclasses
import functools
import io
import logging
import math
import typing
import numpy as np
from scipy import stats
from shared import utils as shared_utils
from shared import param_validators as shared_param_val
from dipw_engine.miscellaneous import dipw_engine_param_validators as param_val
from dipw_engine.digraph import vertex_set as vs
from dipw_engine.sampler.independent_set_sampler import IndependentSetSampler, inclusion_probability
from dipw_engine.sampler.ugraph import UGraph
from dipw_engine.trial_runner import trial_manager


_logger = logging.getLogger(__name__)

DEFAULT_CONFIDENCE: typing.Final[float] = 0.999
TAIL_CONSTANT: typing.Final[int] = 9
TIGHT_TAIL_CONSTANT: typing.Final[int] = 6
SLACK_SIGMAS: typing.Final[float] = 3.0
CSV_COLUMNS: typing.Final[typing.Tuple[str, ...]] = ("set_id", "t", "empirical_upper", "bound", "empirical_lower")


@dataclasses.dataclass
class SampleTally:
    """
    Partial aggregate of a chunk of sampler runs. Merging is element-wise addition, hence commutative.

    Attributes:
        trials (int): Number of runs.
        inclusion_counts (np.ndarray): Per-vertex number of runs with the vertex in `I`.
        intersection_counts (typing.List[np.ndarray]): Per target set, histogram of `|S ∩ I|` over `0..|S|`.
        dependent_runs (int): Runs whose output was not independent.
    """

    trials: int
    inclusion_counts: np.ndarray
    intersection_counts: typing.List[np.ndarray]
    dependent_runs: int = 0

    def merge(self, other: SampleTally) -> SampleTally:
        return SampleTally(
            trials=self.trials + other.trials,
            inclusion_counts=self.inclusion_counts + other.inclusion_counts,
            intersection_counts=[a + b for a, b in zip(self.intersection_counts, other.intersection_counts)],
            dependent_runs=self.dependent_runs + other.dependent_runs,
        )


def tally_samples(
    graph: UGraph, d: int, target_sets: typing.Sequence[vs.VertexSet], seeds: typing.Sequence[int]
) -> SampleTally:
    """
    Runs the sampler once per seed and counts inclusions and target set intersections.

    Args:
        graph (UGraph): Graph of maximum degree at most <d>.
        d (int): Degree bound.
        target_sets (typing.Sequence[vs.VertexSet]): Target sets `S`.
        seeds (typing.Sequence[int]): One seed per run.

    Returns (SampleTally): Counts of the chunk.
    """
    sampler = IndependentSetSampler(graph, d)
    members = np.zeros(graph.n, dtype=bool)
    tally = SampleTally(
        trials=len(seeds),
        inclusion_counts=np.zeros(graph.n, dtype=np.int64),
        intersection_counts=[np.zeros(vs.size(target) + 1, dtype=np.int64) for target in target_sets],
    )
    for seed in seeds:
        independent_set = sampler.sample(seed)
        if not graph.is_independent(independent_set):
            tally.dependent_runs += 1
        members[:] = False
        members[vs.members(independent_set)] = True
        tally.inclusion_counts += members
        for histogram, target in zip(tally.intersection_counts, target_sets):
            histogram[vs.size(independent_set & target)] += 1
    return tally


@dataclasses.dataclass(frozen=True)
class MarginalRow:
    """
    Attributes:
        v (int): Vertex.
        count (int): Runs with `v ∈ I`.
        frequency (float): Empirical inclusion frequency.
        interval (typing.Tuple[int, int]): Exact binomial interval of the count.
    """

    v: int
    count: int
    frequency: float
    interval: typing.Tuple[int, int]

    @property
    def inside(self) -> bool:
        return self.interval[0] <= self.count <= self.interval[1]


@dataclasses.dataclass(frozen=True)
class TailRow:
    """
    Attributes:
        set_id (int): Index of the target set.
        size (int): `|S|`.
        t (int): Deviation.
        empirical_upper (float): Empirical `Pr(|S ∩ I| > p|S| + t)`.
        empirical_lower (float): Empirical `Pr(|S ∩ I| < p|S| - t)`.
        bound (float): `exp(-t² / (9|S|))`.
        tight_bound (float): `exp(-t² / (6|S|))`, informational.
        slack (float): Allowed Monte Carlo excess, `3σ` of a frequency with mean <bound>.
    """

    # pylint: disable=too-many-instance-attributes
    # One attribute per reported column.

    set_id: int
    size: int
    t: int
    empirical_upper: float
    empirical_lower: float
    bound: float
    tight_bound: float
    slack: float

    @property
    def upper_ok(self) -> bool:
        return self.empirical_upper <= self.bound + self.slack

    @property
    def lower_ok(self) -> bool:
        return self.empirical_lower <= self.bound + self.slack


@dataclasses.dataclass(frozen=True)
class StatisticsReport:
    """
    Outcome of <marginal_and_tail_check()>.

    Attributes:
        d (int): Degree bound.
        trials (int): Number of runs.
        p (float): Target inclusion probability.
        confidence (float): Confidence of the binomial intervals.
        marginals (typing.Tuple[MarginalRow, ...]): One row per vertex.
        tails (typing.Tuple[TailRow, ...]): One row per target set and deviation.
        dependent_runs (int): Runs whose output was not independent.
    """

    d: int
    trials: int
    p: float
    confidence: float
    marginals: typing.Tuple[MarginalRow, ...]
    tails: typing.Tuple[TailRow, ...]
    dependent_runs: int

    @property
    def marginals_ok(self) -> bool:
        return all(row.inside for row in self.marginals)

    @property
    def tails_ok(self) -> bool:
        return all(row.upper_ok and row.lower_ok for row in self.tails)

    @property
    def passed(self) -> bool:
        return self.marginals_ok and self.tails_ok and self.dependent_runs == 0


def tail_bound(t: float, size: int, constant: float = TAIL_CONSTANT) -> float:
    """
    Returns `exp(-t² / (constant·|S|))`, `1` for an empty set.
    """
    if size == 0:
        return 1.0
    return math.exp(-(t**2) / (constant * size))


def deviation_grid(size: int) -> typing.List[int]:
    return list(range(1, math.ceil(3 * math.sqrt(size)) + 1))


def default_target_sets(n: int, seed: int) -> typing.List[vs.VertexSet]:
    """
    Picks random target sets of sizes `5` and `10` (those smaller than <n>) followed by the whole vertex set.

    Args:
        n (int): Vertex count.
        seed (int): 64-bit seed.

    Returns (typing.List[vs.VertexSet]): Target sets.
    """
    rng = shared_utils.make_rng(seed)
    sets = [vs.from_iterable(int(v) for v in rng.choice(n, size, replace=False)) for size in (5, 10) if size < n]
    return sets + [vs.full(n)]


def _tail_rows(tally: SampleTally, target_sets: typing.Sequence[vs.VertexSet], p: float) -> typing.List[TailRow]:
    rows = []
    for set_id, (target, histogram) in enumerate(zip(target_sets, tally.intersection_counts)):
        size = vs.size(target)
        values = np.arange(size + 1)
        frequencies = histogram / tally.trials
        for t in deviation_grid(size):
            bound = tail_bound(t, size)
            rows.append(
                TailRow(
                    set_id=set_id,
                    size=size,
                    t=t,
                    empirical_upper=float(frequencies[values > p * size + t].sum()),
                    empirical_lower=float(frequencies[values < p * size - t].sum()),
                    bound=bound,
                    tight_bound=tail_bound(t, size, TIGHT_TAIL_CONSTANT),
                    slack=SLACK_SIGMAS * math.sqrt(bound * (1.0 - bound) / tally.trials),
                )
            )
    return rows


def marginal_and_tail_check(
    graph: UGraph,
    d: int,
    trials: int,
    target_sets: typing.Sequence[vs.VertexSet],
    seed: int,
    jobs: int = 1,
    confidence: float = DEFAULT_CONFIDENCE,
) -> StatisticsReport:
    """
    Runs the sampler <trials> times and compares the empirical behavior with the contracted one:
        - every per-vertex inclusion count has to lie in the exact binomial <confidence> interval of
          `Binomial(trials, 1 / (2(d + 1)))`,
        - for every target set `S` and `t = 1..⌈3√|S|⌉` both tails of `|S ∩ I|` around `p|S|` have to stay below
          `exp(-t² / (9|S|))` plus a `3σ` Monte Carlo slack.

    Args:
        graph (UGraph): Graph of maximum degree at most <d>.
        d (int): Degree bound.
        trials (int): Number of runs, at least `1`.
        target_sets (typing.Sequence[vs.VertexSet]): Target sets `S`.
        seed (int): Base seed, per-run seeds are derived from it.
        jobs (int): Number of parallel jobs, the report does not depend on it.
        confidence (float): Confidence of the binomial intervals.

    Returns (StatisticsReport): Report.

    Exceptions:
        DipwInputError: If <graph> has a vertex of degree above <d>.
    """
    shared_param_val.type_check(graph, UGraph)
    shared_param_val.type_check(trials, int)
    shared_param_val.parameter_value_in_range(trials, 1, 10**9, label="trials")
    shared_param_val.parameter_value_in_range(confidence, 0.0, 1.0, label="confidence")
    target_sets = [vs.as_vertex_set(target, graph.n) for target in target_sets]
    param_val.degree_bound_check(graph, d)

    task = functools.partial(tally_samples, graph, d, target_sets)
    seeds = trial_manager.trial_seeds(seed, trials)
    tally: SampleTally = trial_manager.run_trials(task, seeds, SampleTally.merge, jobs)

    p = float(inclusion_probability(d))
    low, high = stats.binom.interval(confidence, trials, p)
    marginals = tuple(
        MarginalRow(v=v, count=int(count), frequency=count / trials, interval=(int(low), int(high)))
        for v, count in enumerate(tally.inclusion_counts)
    )
    report = StatisticsReport(
        d=d,
        trials=trials,
        p=p,
        confidence=confidence,
        marginals=marginals,
        tails=tuple(_tail_rows(tally, target_sets, p)),
        dependent_runs=tally.dependent_runs,
    )
    _logger.info(
        "Checked %d runs: marginals %s, tails %s",
        trials,
        "ok" if report.marginals_ok else "FAILED",
        "ok" if report.tails_ok else "FAILED",
    )
    return report


def format_report_table(report: StatisticsReport) -> str:
    """
    Renders <report> as aligned text tables, marginals first.

    Args:
        report (StatisticsReport): Report.

    Returns (str): Text.
    """
    lines = [
        f"d = {report.d}, trials = {report.trials}, p = {report.p:.6f}, confidence = {report.confidence}",
        f"{'vertex':>6} {'count':>9} {'frequency':>10} {'interval':>19} {'ok':>3}",
    ]
    for row in report.marginals:
        interval = f"[{row.interval[0]}, {row.interval[1]}]"
        ok = "yes" if row.inside else "NO"
        lines.append(f"{row.v:>6} {row.count:>9} {row.frequency:>10.6f} {interval:>19} {ok:>3}")

    lines.append("")
    header = ("set_id", "size", "t", "upper", "lower", "bound", "bound6", "slack", "ok")
    widths = (6, 5, 4, 9, 9, 9, 9, 9, 3)
    lines.append(" ".join(f"{name:>{width}}" for name, width in zip(header, widths)))
    for row in report.tails:
        ok = "yes" if row.upper_ok and row.lower_ok else "NO"
        lines.append(
            f"{row.set_id:>6} {row.size:>5} {row.t:>4} {row.empirical_upper:>9.6f} {row.empirical_lower:>9.6f} "
            f"{row.bound:>9.6f} {row.tight_bound:>9.6f} {row.slack:>9.6f} {ok:>3}"
        )
    lines.append(f"dependent runs: {report.dependent_runs}")
    return "\n".join(lines) + "\n"


def format_report_csv(report: StatisticsReport) -> str:
    """
    Renders the tail rows of <report> as CSV with the columns `set_id, t, empirical_upper, bound, empirical_lower`.

    Args:
        report (StatisticsReport): Report.

    Returns (str): CSV text with a header row.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in report.tails:
        writer.writerow(
            [row.set_id, row.t, f"{row.empirical_upper:.6f}", f"{row.bound:.6f}", f"{row.empirical_lower:.6f}"]
        )
    return buffer.getvalue()
