"""
Tests of the trial runner: seed derivation, chunking and the worker/manager pair.
"""

import operator
import pytest
from shared import dipw_globals
from dipw_engine.trial_runner import trial_manager
from dipw_engine.trial_runner.trial_worker import TrialWorker


def test_trial_seeds_are_reproducible() -> None:
    seeds = trial_manager.trial_seeds(42, 10)
    assert seeds == trial_manager.trial_seeds(42, 10)
    assert len(set(seeds)) == 10
    assert trial_manager.trial_seeds(42, 4) == seeds[:4]
    assert trial_manager.trial_seeds(43, 4) != seeds[:4]


@pytest.mark.parametrize("jobs", [1, 2, 3, 7, 20])
def test_run_trials_does_not_depend_on_jobs(jobs: int) -> None:
    seeds = list(range(1, 11))
    assert trial_manager.run_trials(sum, seeds, operator.add, jobs) == sum(seeds)


def test_run_trials_rejects_empty_seeds() -> None:
    with pytest.raises(ValueError):
        trial_manager.run_trials(sum, [], operator.add)


def test_worker_rejects_non_callable_task() -> None:
    with pytest.raises(TypeError):
        TrialWorker(42, [1, 2])
    with pytest.raises(TypeError):
        TrialWorker(sum, [1, "2"])
    assert TrialWorker(sum, [1, 2, 3]).seed_count == 3


def test_manager_gathers_in_registration_order() -> None:
    with trial_manager.TrialManager(1) as manager:
        manager.register_trial_worker(TrialWorker(sum, [1, 2]))
        manager.register_trial_worker(TrialWorker(len, [5, 6, 7]))
        results = dipw_globals.event_loop.run_until_complete(manager.gather_tasks())
    assert results == [3, 3]


def test_manager_outside_context() -> None:
    manager = trial_manager.TrialManager(2)
    assert manager.jobs == 2
    with pytest.raises(RuntimeError):
        manager.gather_tasks()
    with pytest.raises(ValueError):
        trial_manager.TrialManager(0)
