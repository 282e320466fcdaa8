"""
*Command* is one CLI subcommand of dipw engine. Hydra instantiates the configured command, the entry point executes it.

This file contains the pathwidth commands `pw decide`, `pw compute`, `pw oracle` and `pw verify`.
"""

import logging
import typing
from shared import param_validators as shared_param_val
from dipw_engine.miscellaneous import dipw_engine_param_validators as param_val
from dipw_engine.miscellaneous import dipw_engine_utils
from dipw_engine.command.abstract_command import AbstractCommand
from dipw_engine.digraph import edge_list_io
from dipw_engine.oracle import vertex_separation_dp
from dipw_engine.separations import decomposition as decomposition_io
from dipw_engine.solver import pathwidth_solver


_logger = logging.getLogger(__name__)


class PwDecideCommand(AbstractCommand):
    """
    Decides `pw(G) <= k`. Prints `yes` or `no`, exits with `0` or `1` and on success optionally writes the
    path-decomposition.

    Attributes:
        command_name (str): Subcommand label.
        _input_path (str): Edge-list file of the digraph.
        _k (int): Width parameter.
        _emit_path (typing.Optional[str]): Where to write the decomposition.
        _memoize (bool): Remember refused sub-instances.
    """

    command_name: typing.ClassVar[str] = "pw decide"

    def __init__(self, input_path: str, k: int, emit_path: typing.Optional[str] = None, memoize: bool = False):
        """
        Validates the command config.

        Args:
            input_path (str): Edge-list file of the digraph.
            k (int): Width parameter.
            emit_path (typing.Optional[str]): Where to write the decomposition, it is optional.
            memoize (bool): Remember refused sub-instances.
        """
        shared_param_val.type_check(input_path, str)
        shared_param_val.type_check(emit_path, (str, type(None)))
        shared_param_val.type_check(memoize, bool)
        param_val.width_check(k, "k")

        self._input_path = input_path
        self._k = k
        self._emit_path = emit_path
        self._memoize = memoize

    def execute(self) -> int:
        graph = dipw_engine_utils.load_input_digraph(self._input_path)
        decomposition, stats = pathwidth_solver.solve(graph, self._k, self._memoize)
        _logger.info(
            "k=%d: %d instances, %d base cases, depth %d",
            self._k,
            stats.instance_count,
            stats.base_count,
            stats.max_depth,
        )
        dipw_engine_utils.emit("yes\n" if decomposition is not None else "no\n")
        if decomposition is not None and self._emit_path is not None:
            dipw_engine_utils.emit(decomposition_io.format_decomposition(decomposition), self._emit_path)
        return self.decision_exit_code(decomposition is not None)


class PwComputeCommand(AbstractCommand):
    """
    Computes the pathwidth with the solver and prints it; optionally writes an optimal path-decomposition.

    Attributes:
        command_name (str): Subcommand label.
        _input_path (str): Edge-list file of the digraph.
        _emit_path (typing.Optional[str]): Where to write the decomposition.
        _memoize (bool): Remember refused sub-instances.
    """

    command_name: typing.ClassVar[str] = "pw compute"

    def __init__(self, input_path: str, emit_path: typing.Optional[str] = None, memoize: bool = False):
        shared_param_val.type_check(input_path, str)
        shared_param_val.type_check(emit_path, (str, type(None)))
        shared_param_val.type_check(memoize, bool)

        self._input_path = input_path
        self._emit_path = emit_path
        self._memoize = memoize

    def execute(self) -> int:
        graph = dipw_engine_utils.load_input_digraph(self._input_path)
        width, decomposition = pathwidth_solver.compute_pathwidth(graph, self._memoize)
        dipw_engine_utils.emit(f"{width}\n")
        if self._emit_path is not None:
            dipw_engine_utils.emit(decomposition_io.format_decomposition(decomposition), self._emit_path)
        return self.decision_exit_code(True)


class PwOracleCommand(AbstractCommand):
    """
    Computes the exact pathwidth by the subset dynamic program and prints it, optionally followed by an optimal vertex
    ordering on a second line.

    Attributes:
        command_name (str): Subcommand label.
        _input_path (str): Edge-list file of the digraph.
        _cap (int): Largest accepted vertex count.
        _ordering (bool): Print an optimal ordering as well.
    """

    command_name: typing.ClassVar[str] = "pw oracle"

    def __init__(self, input_path: str, cap: int = vertex_separation_dp.DEFAULT_ORACLE_CAP, ordering: bool = False):
        shared_param_val.type_check(input_path, str)
        shared_param_val.type_check(ordering, bool)
        param_val.width_check(cap, "cap")
        shared_param_val.parameter_value_in_range(cap, 0, vertex_separation_dp.MAX_ORACLE_CAP, label="cap")

        self._input_path = input_path
        self._cap = cap
        self._ordering = ordering

    def execute(self) -> int:
        graph = dipw_engine_utils.load_input_digraph(self._input_path)
        lines = [str(vertex_separation_dp.oracle_pathwidth(graph, self._cap))]
        if self._ordering:
            lines.append(" ".join(str(v) for v in vertex_separation_dp.oracle_ordering(graph, self._cap)))
        dipw_engine_utils.emit("\n".join(lines) + "\n")
        return self.decision_exit_code(True)


class PwVerifyCommand(AbstractCommand):
    """
    Validates a path-decomposition against a digraph. Prints `valid width=<w>` and exits with `0`, or prints
    `invalid: <violation>` and exits with `1`. With <k> set, a valid decomposition wider than <k> is rejected too.

    Attributes:
        command_name (str): Subcommand label.
        _input_path (str): Edge-list file of the digraph.
        _decomposition_path (str): Decomposition file.
        _k (typing.Optional[int]): Largest accepted width.
    """

    command_name: typing.ClassVar[str] = "pw verify"

    def __init__(self, input_path: str, decomposition_path: str, k: typing.Optional[int] = None):
        shared_param_val.type_check(input_path, str)
        shared_param_val.type_check(decomposition_path, str)
        if k is not None:
            param_val.width_check(k, "k")

        self._input_path = input_path
        self._decomposition_path = decomposition_path
        self._k = k

    def execute(self) -> int:
        graph = dipw_engine_utils.load_input_digraph(self._input_path)
        text = edge_list_io.load_text(dipw_engine_utils.resolve_path(self._decomposition_path))
        report = decomposition_io.validate_decomposition(graph, decomposition_io.parse_decomposition(text, graph.n))
        if report.valid and self._k is not None and report.width > self._k:
            dipw_engine_utils.emit(f"invalid: width {report.width} exceeds k = {self._k}\n")
            return self.decision_exit_code(False)
        if not report.valid:
            dipw_engine_utils.emit(f"invalid: {report.violation}\n")
            return self.decision_exit_code(False)
        dipw_engine_utils.emit(f"valid width={report.width}\n")
        return self.decision_exit_code(True)
