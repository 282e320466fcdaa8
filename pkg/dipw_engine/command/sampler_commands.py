"""
*Command* is one CLI subcommand of dipw engine. Hydra instantiates the configured command, the entry point executes it.

This file contains the sampler commands `complete-regular`, `sample`, `stats` and `survival`.
"""

import typing
from shared import param_validators as shared_param_val
from dipw_engine.miscellaneous import dipw_engine_param_validators as param_val
from dipw_engine.miscellaneous import dipw_engine_utils
from dipw_engine.command.abstract_command import AbstractCommand
from dipw_engine.digraph import vertex_set as vs
from dipw_engine.digraph.digraph import h_index
from dipw_engine.obstacles import survival
from dipw_engine.sampler import statistics
from dipw_engine.sampler import ugraph
from dipw_engine.sampler.independent_set_sampler import sample_independent_set
from dipw_engine.sampler.regular_completion import regular_completion


class CompleteRegularCommand(AbstractCommand):
    """
    Writes the d-regular completion on <total> vertices of an undirected graph.

    Attributes:
        command_name (str): Subcommand label.
        _input_path (str): Undirected edge-list file.
        _d (int): Target degree.
        _total (int): Vertex count of the completion.
        _output_path (typing.Optional[str]): Output file, stdout when `None`.
    """

    command_name: typing.ClassVar[str] = "complete-regular"

    def __init__(self, input_path: str, d: int, total: int, output_path: typing.Optional[str] = None):
        shared_param_val.type_check(input_path, str)
        shared_param_val.type_check(output_path, (str, type(None)))
        param_val.width_check(d, "d")
        param_val.width_check(total, "total")

        self._input_path = input_path
        self._d = d
        self._total = total
        self._output_path = output_path

    def execute(self) -> int:
        graph = ugraph.load_ugraph(dipw_engine_utils.resolve_path(self._input_path))
        completion = regular_completion(graph, self._d, self._total)
        dipw_engine_utils.emit(ugraph.write_ugraph(completion), self._output_path)
        return self.decision_exit_code(True)


class SampleCommand(AbstractCommand):
    """
    Prints one sampled independent set as space separated vertices on a single line.

    Attributes:
        command_name (str): Subcommand label.
        _input_path (str): Undirected edge-list file.
        _d (int): Degree bound.
        _seed (int): 64-bit seed.
    """

    command_name: typing.ClassVar[str] = "sample"

    def __init__(self, input_path: str, d: int, seed: typing.Optional[int] = None):
        shared_param_val.type_check(input_path, str)
        param_val.width_check(d, "d")

        self._input_path = input_path
        self._d = d
        self._seed = param_val.seed_check(seed)

    def execute(self) -> int:
        graph = ugraph.load_ugraph(dipw_engine_utils.resolve_path(self._input_path))
        independent_set = sample_independent_set(graph, self._d, self._seed)
        dipw_engine_utils.emit(" ".join(str(v) for v in vs.members(independent_set)) + "\n")
        return self.decision_exit_code(True)


class StatsCommand(AbstractCommand):
    """
    Runs the marginal and tail check of the sampler and prints the text report. The tail rows are also written as CSV
    to <csv_path> when given. Exits with `1` if some check failed.

    Attributes:
        command_name (str): Subcommand label.
        _input_path (str): Undirected edge-list file.
        _d (int): Degree bound.
        _trials (int): Number of sampler runs.
        _seed (int): Base seed.
        _jobs (int): Number of parallel jobs.
        _confidence (float): Confidence of the binomial intervals.
        _target_sets (typing.Optional[typing.List[typing.List[int]]]): Target sets, random ones when `None`.
        _csv_path (typing.Optional[str]): CSV output file.
    """

    # pylint: disable=too-many-instance-attributes
    # One attribute per config parameter.

    command_name: typing.ClassVar[str] = "stats"

    def __init__(
        self,
        input_path: str,
        d: int,
        trials: int,
        seed: typing.Optional[int] = None,
        jobs: int = 1,
        confidence: float = statistics.DEFAULT_CONFIDENCE,
        target_sets: typing.Optional[typing.List[typing.List[int]]] = None,
        csv_path: typing.Optional[str] = None,
    ):
        """
        Validates the command config.

        Args:
            input_path (str): Undirected edge-list file.
            d (int): Degree bound.
            trials (int): Number of sampler runs, at least `1`.
            seed (typing.Optional[int]): Base seed, mandatory.
            jobs (int): Number of parallel jobs.
            confidence (float): Confidence of the binomial intervals.
            target_sets (typing.Optional[typing.List[typing.List[int]]]): Target sets, random ones when `None`.
            csv_path (typing.Optional[str]): CSV output file, it is optional.
        """

        # pylint: disable=too-many-arguments
        # Encapsulation in more classes would make instantiating process more complicated,
        # because Hydra instantiate feature is used.

        shared_param_val.type_check(input_path, str)
        shared_param_val.type_check(csv_path, (str, type(None)))
        param_val.width_check(d, "d")
        param_val.width_check(trials, "trials")
        shared_param_val.parameter_value_in_range(trials, 1, 10**9, label="trials")
        shared_param_val.parameter_value_in_range(jobs, 1, 1024, label="jobs")
        shared_param_val.parameter_value_in_range(confidence, 0.0, 1.0, label="confidence")

        self._input_path = input_path
        self._d = d
        self._trials = trials
        self._seed = param_val.seed_check(seed)
        self._jobs = jobs
        self._confidence = float(confidence)
        self._target_sets = None if target_sets is None else [list(target) for target in target_sets]
        self._csv_path = csv_path

    def execute(self) -> int:
        graph = ugraph.load_ugraph(dipw_engine_utils.resolve_path(self._input_path))
        if self._target_sets is None:
            target_sets = statistics.default_target_sets(graph.n, self._seed)
        else:
            target_sets = [vs.as_vertex_set(target, graph.n) for target in self._target_sets]
        report = statistics.marginal_and_tail_check(
            graph, self._d, self._trials, target_sets, self._seed, jobs=self._jobs, confidence=self._confidence
        )
        dipw_engine_utils.emit(statistics.format_report_table(report))
        if self._csv_path is not None:
            dipw_engine_utils.emit(statistics.format_report_csv(report), self._csv_path)
        return self.decision_exit_code(report.passed)


class SurvivalCommand(AbstractCommand):
    """
    Runs the survival experiment <trials> times on an h-semicomplete digraph and prints the tangle size, the mean and
    standard deviation of `|T ∩ I|` next to the expected mean, the largest degree spread and the number of runs with a
    non-semicomplete `G[I]`.

    Attributes:
        command_name (str): Subcommand label.
        _input_path (str): Edge-list file of the digraph.
        _trials (int): Number of runs.
        _seed (int): Base seed.
        _k (int): Window width of the degree tangle.
        _h (typing.Optional[int]): Degree bound, the h-index of the digraph when `None`.
        _jobs (int): Number of parallel jobs.
    """

    command_name: typing.ClassVar[str] = "survival"

    def __init__(
        self,
        input_path: str,
        trials: int,
        seed: typing.Optional[int] = None,
        k: int = 0,
        h: typing.Optional[int] = None,
        jobs: int = 1,
    ):
        # pylint: disable=too-many-arguments
        shared_param_val.type_check(input_path, str)
        param_val.width_check(trials, "trials")
        param_val.width_check(k, "k")
        if h is not None:
            param_val.width_check(h, "h")
        shared_param_val.parameter_value_in_range(trials, 1, 10**9, label="trials")
        shared_param_val.parameter_value_in_range(jobs, 1, 1024, label="jobs")

        self._input_path = input_path
        self._trials = trials
        self._seed = param_val.seed_check(seed)
        self._k = k
        self._h = h
        self._jobs = jobs

    def execute(self) -> int:
        graph = dipw_engine_utils.load_input_digraph(self._input_path)
        tangle, summary = survival.survival_trials(graph, self._trials, self._seed, self._k, self._h, self._jobs)
        h = self._h if self._h is not None else h_index(graph)
        lines = [
            f"tangle_size {tangle.l}",
            f"trials {summary.trials}",
            f"survivor_mean {summary.survivor_mean:.6f}",
            f"survivor_expected {tangle.l / (2 * (h + 1)):.6f}",
            f"survivor_std {summary.survivor_std:.6f}",
            f"max_degree_spread {summary.max_spread}",
        ]
        dipw_engine_utils.emit("\n".join(lines) + "\n")
        return self.decision_exit_code(True)
