"""
Qualitative survival experiment: how much of a degree tangle survives restriction to a random semicomplete
subdigraph.

An h-semicomplete digraph `G` is completed into a semicomplete `G'` and the best degree tangle `T` of `G'` is taken.
An independent set `I` of the complement of the underlying graph of `G` (maximum degree at most `h`) induces a
semicomplete `G[I]`, and every vertex lies in `I` with probability `1 / (2(h + 1))`. The experiment reports `|T ∩ I|`
and how far apart the out-degrees of `T ∩ I` lie inside `G[I]`.
"""

from __future__ import annotations  # allowing future references -> return class under which return value is returned
import dataclasses
import functools
import logging
import math
import typing
from shared import custom_exception
from shared import param_validators as shared_param_val
from dipw_engine.miscellaneous import dipw_engine_param_validators as param_val
from dipw_engine.digraph import vertex_set as vs
from dipw_engine.digraph.digraph import Digraph, h_index, induced_subgraph, is_semicomplete, semicomplete_completion
from dipw_engine.obstacles.certificates import DegreeTangle
from dipw_engine.obstacles.search import find_degree_tangle
from dipw_engine.sampler.independent_set_sampler import IndependentSetSampler
from dipw_engine.sampler.ugraph import underlying_complement
from dipw_engine.trial_runner import trial_manager


_logger = logging.getLogger(__name__)


def scale_k(h: int, k: int) -> int:
    """
    Parameter scaling `K = (h + 1)k` under which a tangle of the completion is looked for. Informational.
    """
    return (h + 1) * k


def k_h(h: int) -> int:
    """
    Threshold `10^7 (h + 1)²` above which the survival statements hold with high probability. Informational.
    """
    return 10**7 * (h + 1) ** 2


def f_bound(k: int, h: int) -> int:
    """
    Pathwidth threshold `128 (h + 1) k` of the obstacle dichotomy for h-semicomplete digraphs. Informational.
    """
    return 128 * (h + 1) * k


@dataclasses.dataclass(frozen=True)
class SurvivalReport:
    """
    Outcome of one survival run.

    Attributes:
        seed (int): Seed of the run.
        h (int): Degree bound of the sampled graph.
        tangle (DegreeTangle): Tangle of the semicomplete completion.
        sample (vs.VertexSet): Sampled vertex set `I`.
        survivors (typing.Tuple[int, ...]): `T ∩ I`.
        degree_spread (typing.Optional[int]): Largest minus smallest out-degree in `G[I]` over `T ∩ I`, `None` when
            nothing survived.
    """

    seed: int
    h: int
    tangle: DegreeTangle
    sample: vs.VertexSet
    survivors: typing.Tuple[int, ...]
    degree_spread: typing.Optional[int]


@dataclasses.dataclass
class SurvivalSummary:
    """
    Aggregate over many survival runs, merged by addition.

    Attributes:
        trials (int): Number of runs.
        survivor_total (int): Sum of `|T ∩ I|`.
        survivor_square_total (int): Sum of `|T ∩ I|²`.
        max_spread (int): Largest degree spread seen.
    """

    trials: int = 0
    survivor_total: int = 0
    survivor_square_total: int = 0
    max_spread: int = 0

    def merge(self, other: SurvivalSummary) -> SurvivalSummary:
        return SurvivalSummary(
            trials=self.trials + other.trials,
            survivor_total=self.survivor_total + other.survivor_total,
            survivor_square_total=self.survivor_square_total + other.survivor_square_total,
            max_spread=max(self.max_spread, other.max_spread),
        )

    @property
    def survivor_mean(self) -> float:
        return self.survivor_total / self.trials if self.trials else 0.0

    @property
    def survivor_std(self) -> float:
        if self.trials < 2:
            return 0.0
        variance = (self.survivor_square_total - self.trials * self.survivor_mean**2) / (self.trials - 1)
        return math.sqrt(max(variance, 0.0))


class SurvivalExperiment:
    """
    Prepared survival experiment on one digraph: completion, tangle and sampler are built once and reused by every
    run.

    Attributes:
        _graph (Digraph): h-semicomplete digraph.
        _h (int): Degree bound used by the sampler.
        _tangle (DegreeTangle): Best degree tangle of the completion.
        _sampler (IndependentSetSampler): Sampler on the complement of the underlying graph.
    """

    def __init__(self, graph: Digraph, k: int = 0, h: typing.Optional[int] = None):
        """
        Completes <graph> and finds its tangle.

        Args:
            graph (Digraph): h-semicomplete digraph with at least one vertex.
            k (int): Window width of the degree tangle.
            h (typing.Optional[int]): Degree bound, defaults to the h-index of <graph>.

        Exceptions:
            DipwInputError: If <graph> is empty or <h> is below its h-index.
        """
        shared_param_val.type_check(graph, Digraph)
        param_val.width_check(k, "k")
        if graph.n == 0:
            raise custom_exception.DipwInputError("Survival experiment needs at least one vertex.")
        h = h_index(graph) if h is None else h
        param_val.width_check(h, "h")
        if h < h_index(graph):
            raise custom_exception.DipwInputError(f"Digraph is not {h}-semicomplete, its h-index is {h_index(graph)}.")

        tangle = find_degree_tangle(semicomplete_completion(graph), k)
        if tangle is None:
            raise custom_exception.InvariantViolationError("A non-empty digraph has no degree tangle.")

        self._graph = graph
        self._h = h
        self._tangle = tangle
        self._sampler = IndependentSetSampler(underlying_complement(graph), h)

    @property
    def tangle(self) -> DegreeTangle:
        return self._tangle

    @property
    def h(self) -> int:
        return self._h

    @property
    def expected_survivors(self) -> float:
        return self._tangle.l / (2 * (self._h + 1))

    def run(self, seed: int) -> SurvivalReport:
        """
        Samples `I` and measures the surviving part of the tangle.

        Args:
            seed (int): 64-bit seed.

        Returns (SurvivalReport): Report of the run.

        Exceptions:
            InvariantViolationError: If `G[I]` is not semicomplete.
        """
        sample = self._sampler.sample(seed)
        induced, kept = induced_subgraph(self._graph, sample)
        if not is_semicomplete(induced):
            raise custom_exception.InvariantViolationError(f"G[I] is not semicomplete for seed {seed}.")

        survivors = tuple(v for v in self._tangle.t if vs.contains(sample, v))
        degrees = induced.out_degrees()
        position = {v: index for index, v in enumerate(kept)}
        survivor_degrees = [int(degrees[position[v]]) for v in survivors]
        spread = max(survivor_degrees) - min(survivor_degrees) if survivor_degrees else None
        return SurvivalReport(
            seed=seed,
            h=self._h,
            tangle=self._tangle,
            sample=sample,
            survivors=survivors,
            degree_spread=spread,
        )

    def summarize(self, seeds: typing.Sequence[int]) -> SurvivalSummary:
        """
        Runs the experiment once per seed.

        Args:
            seeds (typing.Sequence[int]): Seeds.

        Returns (SurvivalSummary): Aggregate of the runs.
        """
        summary = SurvivalSummary()
        for seed in seeds:
            report = self.run(seed)
            size = len(report.survivors)
            summary = summary.merge(
                SurvivalSummary(
                    trials=1,
                    survivor_total=size,
                    survivor_square_total=size * size,
                    max_spread=report.degree_spread or 0,
                )
            )
        return summary


def survival_experiment(graph: Digraph, seed: int, k: int = 0, h: typing.Optional[int] = None) -> SurvivalReport:
    """
    Runs the survival experiment once.

    Args:
        graph (Digraph): h-semicomplete digraph with at least one vertex.
        seed (int): 64-bit seed.
        k (int): Window width of the degree tangle.
        h (typing.Optional[int]): Degree bound, defaults to the h-index of <graph>.

    Returns (SurvivalReport): Report.
    """
    return SurvivalExperiment(graph, k, h).run(seed)


def _summarize_chunk(graph: Digraph, k: int, h: typing.Optional[int], seeds: typing.Sequence[int]) -> SurvivalSummary:
    return SurvivalExperiment(graph, k, h).summarize(seeds)


def survival_trials(
    graph: Digraph, trials: int, seed: int, k: int = 0, h: typing.Optional[int] = None, jobs: int = 1
) -> typing.Tuple[DegreeTangle, SurvivalSummary]:
    """
    Runs the survival experiment <trials> times with seeds derived from <seed>.

    Args:
        graph (Digraph): h-semicomplete digraph with at least one vertex.
        trials (int): Number of runs, at least `1`.
        seed (int): Base seed.
        k (int): Window width of the degree tangle.
        h (typing.Optional[int]): Degree bound, defaults to the h-index of <graph>.
        jobs (int): Number of parallel jobs, the summary does not depend on it.

    Returns (typing.Tuple[DegreeTangle, SurvivalSummary]): Tangle and aggregate of the runs.
    """
    # pylint: disable=too-many-arguments
    # Mirrors the command config one to one.

    experiment = SurvivalExperiment(graph, k, h)
    seeds = trial_manager.trial_seeds(seed, trials)
    summary = trial_manager.run_trials(
        functools.partial(_summarize_chunk, graph, k, h), seeds, SurvivalSummary.merge, jobs
    )
    _logger.info(
        "Survival over %d runs: mean %.3f (expected %.3f) of a tangle of size %d",
        summary.trials,
        summary.survivor_mean,
        experiment.expected_survivors,
        experiment.tangle.l,
    )
    return experiment.tangle, summary
