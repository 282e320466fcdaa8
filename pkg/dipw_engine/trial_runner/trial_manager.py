"""
*Trial Runner* executes independent seeded Monte Carlo trials and merges their partial aggregates.

This file contains *Trial Manager* class which orchestrates *Trial Worker* class instances.
"""

from __future__ import annotations  # allowing future references -> return class under which return value is returned
import asyncio
import concurrent.futures
import functools
import logging
import typing
from shared import dipw_globals
from shared import utils as shared_utils
from shared import param_validators as shared_param_val
from dipw_engine.trial_runner.trial_worker import TrialTask, TrialWorker


_logger = logging.getLogger(__name__)

Aggregate = typing.TypeVar("Aggregate")


class TrialManager:
    """
    *Trial Manager* acts like orchestrator of *Trial Worker* instances, which are registered to it. It owns the
    executor: a process pool of <jobs> processes, or a single thread for `jobs = 1`. Works as a context manager.

    Attributes:
        _jobs (int): Number of parallel jobs.
        _trial_workers (typing.List[TrialWorker]): Registered workers.
        _executor (typing.Optional[concurrent.futures.Executor]): Executor, set while inside the context.
    """

    def __init__(self, jobs: int = 1):
        """
        Stores the job count.

        Args:
            jobs (int): Number of parallel jobs, at least `1`.
        """
        shared_param_val.type_check(jobs, int)
        shared_param_val.parameter_value_in_range(jobs, 1, 1024, label="jobs")

        self._jobs = jobs
        self._trial_workers: typing.List[TrialWorker] = []
        self._executor: typing.Optional[concurrent.futures.Executor] = None

    @property
    def jobs(self) -> int:
        return self._jobs

    def register_trial_worker(self, trial_worker: TrialWorker) -> None:
        """
        Registers *Trial Worker* instance whose chunk is run by the next <gather_tasks()>.

        Args:
            trial_worker (TrialWorker): Worker to register.

        Returns (None):
        """
        shared_param_val.type_check(trial_worker, TrialWorker)

        self._trial_workers.append(trial_worker)

    def __enter__(self) -> TrialManager:
        """
        Context manager __entry__ method. Starts the executor.

        Returns (TrialManager): Itself.
        """
        if self._jobs == 1:
            self._executor = concurrent.futures.ThreadPoolExecutor(max_workers=1)
        else:
            self._executor = concurrent.futures.ProcessPoolExecutor(max_workers=self._jobs)
        return self

    def __exit__(
        self,
        exc_type: typing.Optional[Exception],
        exc_val: typing.Optional[typing.Any],
        exc_tb: typing.Any,
    ) -> None:
        """
        Context manager __exit__ method. Shuts the executor down and forgets the registered workers.

        Args:
            exc_type (typing.Optional[Exception]): Exception type.
            exc_val (typing.Optional[typing.Any]): Exception value.
            exc_tb (typing.Any): Exception traceback.

        Returns (None):
        """
        if self._executor is not None:
            self._executor.shutdown(wait=True, cancel_futures=exc_type is not None)
            self._executor = None
        self._trial_workers.clear()

    def gather_tasks(self) -> asyncio.Future:
        """
        Gathers tasks of all registered *Trial Worker* instances and creates asyncio.Future.

        Returns (asyncio.Future): Gathered partial aggregates, in registration order.

        Exceptions:
            RuntimeError: If called outside the context.
        """
        if self._executor is None:
            raise RuntimeError("Trial Manager has to be entered before its tasks are gathered.")

        tasks = []
        for trial_worker in self._trial_workers:
            tasks.append(trial_worker.get_trial_task(dipw_globals.event_loop, self._executor))

        return asyncio.gather(*tasks)


def trial_seeds(base_seed: int, trials: int) -> typing.List[int]:
    """
    Derives one seed per trial from <base_seed>.

    Args:
        base_seed (int): Seed given by the user.
        trials (int): Trial count.

    Returns (typing.List[int]): Seeds, independent of the job count.
    """
    shared_param_val.non_negative_int_check(trials, "trials")
    return [shared_utils.derive_seed(base_seed, index) for index in range(trials)]


def run_trials(
    task: TrialTask,
    seeds: typing.Sequence[int],
    merge: typing.Callable[[Aggregate, Aggregate], Aggregate],
    jobs: int = 1,
) -> Aggregate:
    """
    Splits <seeds> into <jobs> contiguous chunks, evaluates them concurrently and folds the partial aggregates with
    <merge>. With a commutative and associative <merge> the result does not depend on <jobs>.

    Args:
        task (TrialTask): Picklable callable mapping a seed chunk to a partial aggregate.
        seeds (typing.Sequence[int]): Trial seeds, at least one.
        merge (typing.Callable[[Aggregate, Aggregate], Aggregate]): Aggregate merge.
        jobs (int): Number of parallel jobs.

    Returns (Aggregate): Merged aggregate.
    """
    if len(seeds) == 0:
        raise ValueError("At least one trial seed is needed.")

    chunk_count = min(jobs, len(seeds))
    chunk_size = shared_utils.ceil_div(len(seeds), chunk_count)
    with TrialManager(jobs) as trial_manager:
        for start in range(0, len(seeds), chunk_size):
            trial_manager.register_trial_worker(TrialWorker(task, seeds[start : start + chunk_size]))
        partials = dipw_globals.event_loop.run_until_complete(trial_manager.gather_tasks())

    _logger.debug("Merged %d partial aggregates of %d trials", len(partials), len(seeds))
    return functools.reduce(merge, partials)
