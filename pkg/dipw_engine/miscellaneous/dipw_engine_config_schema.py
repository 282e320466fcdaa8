"""
The module provides *Structured Config Schema* to validate Hydra configs - config parameters and their type.
It does not validate parameter values, the command constructors do.
"""


from dataclasses import dataclass
import typing
from hydra.core.config_store import ConfigStore


@dataclass
class CommandSchema:
    """
    Hydra Config Schema parent for all *Commands*. Serves as *Abstract Command* schema.
    """


@dataclass
class PwDecideSchema(CommandSchema):
    """
    Hydra Config Schema for `pw decide`. The attributes have the same meaning as in <PwDecideCommand>.
    """

    input_path: str
    k: int
    emit_path: typing.Optional[str] = None
    memoize: bool = False
    _target_: str = "dipw_engine.command.pw_commands.PwDecideCommand"


@dataclass
class PwComputeSchema(CommandSchema):
    """
    Hydra Config Schema for `pw compute`. The attributes have the same meaning as in <PwComputeCommand>.
    """

    input_path: str
    emit_path: typing.Optional[str] = None
    memoize: bool = False
    _target_: str = "dipw_engine.command.pw_commands.PwComputeCommand"


@dataclass
class PwOracleSchema(CommandSchema):
    """
    Hydra Config Schema for `pw oracle`. The attributes have the same meaning as in <PwOracleCommand>.
    """

    input_path: str
    cap: int = 22
    ordering: bool = False
    _target_: str = "dipw_engine.command.pw_commands.PwOracleCommand"


@dataclass
class PwVerifySchema(CommandSchema):
    """
    Hydra Config Schema for `pw verify`. The attributes have the same meaning as in <PwVerifyCommand>.
    """

    input_path: str
    decomposition_path: str
    k: typing.Optional[int] = None
    _target_: str = "dipw_engine.command.pw_commands.PwVerifyCommand"


@dataclass
class GeneratorSchema(CommandSchema):
    """
    Hydra Config Schema for `gen`. The attributes have the same meaning as in <GeneratorCommand>.
    """

    family: str
    n: int
    seed: typing.Optional[int] = None
    h: int = 0
    d: int = 3
    edge_probability: float = 0.5
    output_path: typing.Optional[str] = None
    _target_: str = "dipw_engine.command.generator_command.GeneratorCommand"


@dataclass
class FindDegreeTangleSchema(CommandSchema):
    """
    Hydra Config Schema for `obstacle find-degree-tangle`. The attributes have the same meaning as in
    <FindDegreeTangleCommand>.
    """

    input_path: str
    k: int
    output_path: typing.Optional[str] = None
    _target_: str = "dipw_engine.command.obstacle_commands.FindDegreeTangleCommand"


@dataclass
class FindMatchingTangleSchema(CommandSchema):
    """
    Hydra Config Schema for `obstacle find-matching-tangle`. The attributes have the same meaning as in
    <FindMatchingTangleCommand>.
    """

    input_path: str
    k: int
    d: typing.Optional[int] = None
    output_path: typing.Optional[str] = None
    _target_: str = "dipw_engine.command.obstacle_commands.FindMatchingTangleCommand"


@dataclass
class VerifyCertificateSchema(CommandSchema):
    """
    Hydra Config Schema for `obstacle verify`. The attributes have the same meaning as in <VerifyCertificateCommand>.
    """

    input_path: str
    certificate_path: str
    pw_upper: typing.Optional[int] = None
    _target_: str = "dipw_engine.command.obstacle_commands.VerifyCertificateCommand"


@dataclass
class BoundSchema(CommandSchema):
    """
    Hydra Config Schema for `obstacle bound`. The attributes have the same meaning as in <BoundCommand>.
    """

    input_path: str
    _target_: str = "dipw_engine.command.obstacle_commands.BoundCommand"


@dataclass
class CompleteRegularSchema(CommandSchema):
    """
    Hydra Config Schema for `complete-regular`. The attributes have the same meaning as in <CompleteRegularCommand>.
    """

    input_path: str
    d: int
    total: int
    output_path: typing.Optional[str] = None
    _target_: str = "dipw_engine.command.sampler_commands.CompleteRegularCommand"


@dataclass
class SampleSchema(CommandSchema):
    """
    Hydra Config Schema for `sample`. The attributes have the same meaning as in <SampleCommand>.
    """

    input_path: str
    d: int
    seed: typing.Optional[int] = None
    _target_: str = "dipw_engine.command.sampler_commands.SampleCommand"


@dataclass
class StatsSchema(CommandSchema):
    """
    Hydra Config Schema for `stats`. The attributes have the same meaning as in <StatsCommand>.
    """

    # pylint: disable=too-many-instance-attributes
    # Addressing the same topic as exception in *Stats Command* class.

    input_path: str
    d: int
    trials: int
    seed: typing.Optional[int] = None
    jobs: int = 1
    confidence: float = 0.999
    target_sets: typing.Optional[typing.List[typing.List[int]]] = None
    csv_path: typing.Optional[str] = None
    _target_: str = "dipw_engine.command.sampler_commands.StatsCommand"


@dataclass
class SurvivalSchema(CommandSchema):
    """
    Hydra Config Schema for `survival`. The attributes have the same meaning as in <SurvivalCommand>.
    """

    input_path: str
    trials: int
    seed: typing.Optional[int] = None
    k: int = 0
    h: typing.Optional[int] = None
    jobs: int = 1
    _target_: str = "dipw_engine.command.sampler_commands.SurvivalCommand"


@dataclass
class DipwEngineConfigSchema:
    """
    Main Hydra Config Schema for dipw engine.

    Attributes:
        command (CommandSchema): Particular *Command*.
    """

    command: CommandSchema


COMMAND_SCHEMAS: typing.Final[typing.Dict[str, typing.Type[CommandSchema]]] = {
    "pw_decide_schema": PwDecideSchema,
    "pw_compute_schema": PwComputeSchema,
    "pw_oracle_schema": PwOracleSchema,
    "pw_verify_schema": PwVerifySchema,
    "gen_schema": GeneratorSchema,
    "obstacle_find_degree_tangle_schema": FindDegreeTangleSchema,
    "obstacle_find_matching_tangle_schema": FindMatchingTangleSchema,
    "obstacle_verify_schema": VerifyCertificateSchema,
    "obstacle_bound_schema": BoundSchema,
    "complete_regular_schema": CompleteRegularSchema,
    "sample_schema": SampleSchema,
    "stats_schema": StatsSchema,
    "survival_schema": SurvivalSchema,
}


def dipw_engine_config_schema_registration(cf_instance: ConfigStore) -> None:
    """
    Registers Hydra Config Schema for *dipw engine*.

    Args:
        cf_instance (ConfigStore): ConfigStore instance.

    Returns (None):
    """
    cf_instance.store(name="dipw_engine_config_schema", node=DipwEngineConfigSchema)
    for name, schema in COMMAND_SCHEMAS.items():
        cf_instance.store(group="command", name=name, node=schema)
