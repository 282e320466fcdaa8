"""
*Trial Runner* executes independent seeded Monte Carlo trials and merges their partial aggregates.

This file contains *Trial Worker* class which runs one chunk of trials on an executor.
"""

from __future__ import annotations  # allowing future references -> return class under which return value is returned
import asyncio
import concurrent.futures
import logging
import typing
from shared import param_validators as shared_param_val


_logger = logging.getLogger(__name__)

TrialTask = typing.Callable[[typing.Sequence[int]], typing.Any]


class TrialWorker:
    """
    *Trial Worker* owns a chunk of trial seeds and the task evaluating them. The task receives the whole chunk and
    returns one partial aggregate, so only a single result crosses the executor boundary per worker.

    Attributes:
        _task (TrialTask): Picklable callable mapping a seed chunk to a partial aggregate.
        _seeds (typing.Tuple[int, ...]): Seeds of the chunk.
    """

    def __init__(self, task: TrialTask, seeds: typing.Sequence[int]):
        """
        Stores the task and its seeds.

        Args:
            task (TrialTask): Picklable callable mapping a seed chunk to a partial aggregate.
            seeds (typing.Sequence[int]): Seeds of the chunk.
        """
        if not callable(task):
            raise TypeError(f"Given trial task `{task}` is not callable.")
        for seed in seeds:
            shared_param_val.type_check(seed, int)

        self._task = task
        self._seeds = tuple(seeds)

    @property
    def seed_count(self) -> int:
        return len(self._seeds)

    def get_trial_task(
        self, event_loop: asyncio.AbstractEventLoop, executor: concurrent.futures.Executor
    ) -> asyncio.Future:
        """
        Schedules the chunk on <executor>.

        Args:
            event_loop (asyncio.AbstractEventLoop): Loop the future belongs to.
            executor (concurrent.futures.Executor): Executor running the task.

        Returns (asyncio.Future): Future of the partial aggregate.
        """
        _logger.debug("Scheduling a chunk of %d trials", len(self._seeds))
        return event_loop.run_in_executor(executor, self._task, self._seeds)
