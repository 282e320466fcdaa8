"""
*Command* is one CLI subcommand of dipw engine. Hydra instantiates the configured command, the entry point executes it.

This file contains *Generator Command* class, the `gen` subcommand writing seeded random instances.
"""

import typing
from shared import custom_exception
from shared import param_validators as shared_param_val
from dipw_engine.miscellaneous import dipw_engine_param_validators as param_val
from dipw_engine.miscellaneous import dipw_engine_utils
from dipw_engine.command.abstract_command import AbstractCommand
from dipw_engine.digraph import edge_list_io
from dipw_engine.digraph import generators
from dipw_engine.sampler import ugraph


class GeneratorCommand(AbstractCommand):
    """
    Writes a seeded random instance in the edge-list format. Families:
        - `h-semicomplete`: digraph with at most <h> non-neighbors per vertex,
        - `random`: digraph with every ordered pair present with probability <edge_probability>,
        - `bounded-degree`: undirected graph of maximum degree at most <d>, written as unordered pairs.

    Attributes:
        command_name (str): Subcommand label.
        _family (str): Instance family.
        _n (int): Vertex count.
        _seed (int): 64-bit seed.
        _h (int): Non-neighbor bound of `h-semicomplete`.
        _d (int): Degree bound of `bounded-degree`.
        _edge_probability (float): Edge probability of `random`.
        _output_path (typing.Optional[str]): Output file, stdout when `None`.
    """

    # pylint: disable=too-many-instance-attributes
    # One attribute per config parameter.

    command_name: typing.ClassVar[str] = "gen"

    SUPPORTED_FAMILIES: typing.Final[typing.List[str]] = ["h-semicomplete", "random", "bounded-degree"]

    def __init__(
        self,
        family: str,
        n: int,
        seed: typing.Optional[int] = None,
        h: int = 0,
        d: int = 3,
        edge_probability: float = 0.5,
        output_path: typing.Optional[str] = None,
    ):
        """
        Validates the command config.

        Args:
            family (str): Instance family.
            n (int): Vertex count.
            seed (typing.Optional[int]): 64-bit seed, mandatory.
            h (int): Non-neighbor bound of `h-semicomplete`.
            d (int): Degree bound of `bounded-degree`.
            edge_probability (float): Edge probability of `random`.
            output_path (typing.Optional[str]): Output file, stdout when `None`.
        """

        # pylint: disable=too-many-arguments
        # Encapsulation in more classes would make instantiating process more complicated,
        # because Hydra instantiate feature is used.

        shared_param_val.type_check(family, str)
        shared_param_val.type_check(edge_probability, (int, float))
        shared_param_val.type_check(output_path, (str, type(None)))
        param_val.width_check(n, "n")
        param_val.width_check(h, "h")
        param_val.width_check(d, "d")
        family = family.lower()
        if family not in self.SUPPORTED_FAMILIES:
            raise custom_exception.DipwInputError(
                f"Given <family> value `{family}` is not supported. List of supported families: "
                f"{self.SUPPORTED_FAMILIES}"
            )

        self._family = family
        self._n = n
        self._seed = param_val.seed_check(seed)
        self._h = h
        self._d = d
        self._edge_probability = float(edge_probability)
        self._output_path = output_path

    def execute(self) -> int:
        if self._family == "h-semicomplete":
            text = edge_list_io.write_digraph(generators.random_h_semicomplete(self._n, self._h, self._seed))
        elif self._family == "random":
            text = edge_list_io.write_digraph(generators.random_digraph(self._n, self._edge_probability, self._seed))
        else:
            graph = ugraph.random_bounded_degree_graph(self._n, self._d, self._seed)
            text = ugraph.write_ugraph(graph)
        dipw_engine_utils.emit(text, self._output_path)
        return self.decision_exit_code(True)
