"""
Tests of the domain-free `shared` helpers.
"""

import pytest
from omegaconf import OmegaConf
from shared import config
from shared import custom_exception
from shared import param_validators as shared_param_val
from shared import utils as shared_utils
from shared.structures import Singleton


def test_type_check_accepts_tuple_of_types() -> None:
    shared_param_val.type_check(None, (int, type(None)))
    with pytest.raises(TypeError):
        shared_param_val.type_check("1", int)


def test_type_check_refuses_bool_for_int() -> None:
    shared_param_val.type_check(True, bool)
    shared_param_val.type_check(False, (bool, int))
    with pytest.raises(TypeError):
        shared_param_val.type_check(True, int)
    with pytest.raises(TypeError):
        shared_param_val.non_negative_int_check(False, "k")


def test_parameter_value_in_range_is_inclusive() -> None:
    shared_param_val.parameter_value_in_range(0, 0, 1)
    shared_param_val.parameter_value_in_range(1.0, 0, 1)
    with pytest.raises(ValueError):
        shared_param_val.parameter_value_in_range(1.5, 0, 1)
    with pytest.raises(ValueError, match="<confidence>"):
        shared_param_val.parameter_value_in_range(float("nan"), 0.0, 1.0, label="confidence")


def test_non_negative_int_check_names_the_parameter() -> None:
    with pytest.raises(ValueError, match="<k>"):
        shared_param_val.non_negative_int_check(-1, "k")


def test_file_existence_check(tmp_path) -> None:
    existing = tmp_path / "a.txt"
    existing.write_text("x", encoding="utf-8")
    shared_param_val.file_existence_check(str(existing))
    with pytest.raises(FileNotFoundError, match="missing.txt"):
        shared_param_val.file_existence_check(str(tmp_path / "missing.txt"))


def test_make_rng_is_reproducible() -> None:
    first = shared_utils.make_rng(7).integers(1000, size=5)
    second = shared_utils.make_rng(7).integers(1000, size=5)
    assert first.tolist() == second.tolist()
    with pytest.raises(ValueError):
        shared_utils.make_rng(2**64)


def test_derive_seed_gives_distinct_64_bit_seeds() -> None:
    seeds = [shared_utils.derive_seed(1, index) for index in range(100)]
    assert len(set(seeds)) == 100
    assert all(0 <= seed <= shared_utils.SEED_UPPER_BOUND for seed in seeds)
    assert seeds == [shared_utils.derive_seed(1, index) for index in range(100)]


@pytest.mark.parametrize("numerator, denominator, expected", [(0, 3, 0), (1, 3, 1), (3, 3, 1), (7, 2, 4)])
def test_ceil_div(numerator: int, denominator: int, expected: int) -> None:
    assert shared_utils.ceil_div(numerator, denominator) == expected


def test_singleton_allows_one_call() -> None:
    @Singleton
    def initialize() -> str:
        return "done"

    assert initialize() == "done"
    with pytest.raises(RuntimeError):
        initialize()


def test_get_hydra_config_requires_published_config(monkeypatch) -> None:
    @config.GetHydraConfig
    def read(hydra_config) -> int:
        return hydra_config.value

    monkeypatch.setattr(config, "config", None)
    with pytest.raises(RuntimeError):
        read()
    monkeypatch.setattr(config, "config", OmegaConf.create({"value": 3}))
    assert read() == 3


def test_graph_format_error_prefixes_line_number() -> None:
    assert str(custom_exception.GraphFormatError("self-loop 3 3", line_no=4)) == "line 4: self-loop 3 3"
    assert str(custom_exception.GraphFormatError("missing header")) == "missing header"
    assert isinstance(custom_exception.GraphFormatError(), ValueError)


def test_oracle_cap_error_is_input_error() -> None:
    error = custom_exception.OracleCapError(30, 22)
    assert isinstance(error, custom_exception.DipwInputError)
    assert "30" in str(error) and "22" in str(error)


def test_invariant_violation_is_not_an_input_error() -> None:
    assert not issubclass(custom_exception.InvariantViolationError, ValueError)
    assert issubclass(custom_exception.InvariantViolationError, AssertionError)
