"""
*Command* is one CLI subcommand of dipw engine. Hydra instantiates the configured command, the entry point executes it.

This file contains the obstacle commands `obstacle find-degree-tangle`, `obstacle find-matching-tangle`,
`obstacle verify` and `obstacle bound`.
"""

import logging
import typing
from shared import param_validators as shared_param_val
from dipw_engine.miscellaneous import dipw_engine_param_validators as param_val
from dipw_engine.miscellaneous import dipw_engine_utils
from dipw_engine.command.abstract_command import AbstractCommand
from dipw_engine.digraph import edge_list_io
from dipw_engine.digraph.digraph import require_semicomplete
from dipw_engine.obstacles import certificates
from dipw_engine.obstacles import search
from dipw_engine.obstacles import verifiers


_logger = logging.getLogger(__name__)


def _emit_certificate(
    certificate: typing.Optional[certificates.Certificate], output_path: typing.Optional[str]
) -> None:
    if certificate is None:
        dipw_engine_utils.emit("none\n", output_path)
        return
    dipw_engine_utils.emit(certificates.format_certificate(certificate), output_path)


class FindDegreeTangleCommand(AbstractCommand):
    """
    Prints the largest degree tangle of window width <k> as certificate JSON, `none` for the empty digraph.

    Attributes:
        command_name (str): Subcommand label.
        _input_path (str): Edge-list file of a semicomplete digraph.
        _k (int): Window width.
        _output_path (typing.Optional[str]): Output file, stdout when `None`.
    """

    command_name: typing.ClassVar[str] = "obstacle find-degree-tangle"

    def __init__(self, input_path: str, k: int, output_path: typing.Optional[str] = None):
        shared_param_val.type_check(input_path, str)
        shared_param_val.type_check(output_path, (str, type(None)))
        param_val.width_check(k, "k")

        self._input_path = input_path
        self._k = k
        self._output_path = output_path

    def execute(self) -> int:
        graph = dipw_engine_utils.load_input_digraph(self._input_path)
        tangle = search.find_degree_tangle(graph, self._k)
        if tangle is not None:
            verdict = verifiers.verify_degree_tangle(graph, tangle)
            _logger.info("Degree tangle of size %d, lower bound %s", tangle.l, verdict.lower_bound)
        _emit_certificate(tangle, self._output_path)
        return self.decision_exit_code(True)


class FindMatchingTangleCommand(AbstractCommand):
    """
    Prints a maximum matching tangle with gap <k> as certificate JSON, `none` if there is none. Without <d> every
    threshold is tried and the largest tangle wins.

    Attributes:
        command_name (str): Subcommand label.
        _input_path (str): Edge-list file of a semicomplete digraph.
        _k (int): Out-degree gap.
        _d (typing.Optional[int]): Out-degree threshold of the low side.
        _output_path (typing.Optional[str]): Output file, stdout when `None`.
    """

    command_name: typing.ClassVar[str] = "obstacle find-matching-tangle"

    def __init__(
        self, input_path: str, k: int, d: typing.Optional[int] = None, output_path: typing.Optional[str] = None
    ):
        shared_param_val.type_check(input_path, str)
        shared_param_val.type_check(output_path, (str, type(None)))
        param_val.width_check(k, "k")
        if d is not None:
            param_val.width_check(d, "d")

        self._input_path = input_path
        self._k = k
        self._d = d
        self._output_path = output_path

    def execute(self) -> int:
        graph = dipw_engine_utils.load_input_digraph(self._input_path)
        if self._d is None:
            require_semicomplete(graph)
            tangle = search.best_matching_tangle(graph, self._k)
        else:
            tangle = search.find_matching_tangle(graph, self._d, self._k)
        _emit_certificate(tangle, self._output_path)
        return self.decision_exit_code(True)


class VerifyCertificateCommand(AbstractCommand):
    """
    Verifies an obstacle certificate. Prints `valid lower_bound=<b>` and exits with `0`, or prints
    `invalid: <violation>` and exits with `1`. Spiders additionally report `stated_bound`; with <pw_upper> set, the
    tameness of the certificate is reported as well.

    Attributes:
        command_name (str): Subcommand label.
        _input_path (str): Edge-list file of a semicomplete digraph.
        _certificate_path (str): Certificate JSON file.
        _pw_upper (typing.Optional[int]): Pathwidth upper bound for the tameness check.
    """

    command_name: typing.ClassVar[str] = "obstacle verify"

    def __init__(self, input_path: str, certificate_path: str, pw_upper: typing.Optional[int] = None):
        shared_param_val.type_check(input_path, str)
        shared_param_val.type_check(certificate_path, str)
        if pw_upper is not None:
            param_val.width_check(pw_upper, "pw_upper")

        self._input_path = input_path
        self._certificate_path = certificate_path
        self._pw_upper = pw_upper

    def execute(self) -> int:
        graph = dipw_engine_utils.load_input_digraph(self._input_path)
        text = edge_list_io.load_text(dipw_engine_utils.resolve_path(self._certificate_path))
        certificate = certificates.parse_certificate(text)
        verdict = verifiers.verify_certificate(graph, certificate)
        if not verdict.valid:
            dipw_engine_utils.emit(f"invalid: {verdict.violation}\n")
            return self.decision_exit_code(False)

        fields = [f"valid lower_bound={verdict.lower_bound}"]
        if isinstance(verdict, certificates.SpiderVerdict):
            fields.append(f"stated_bound={verdict.stated_bound}")
        if self._pw_upper is not None and not isinstance(certificate, certificates.DisjointPaths):
            tame = verifiers.verify_tameness(graph, certificate, self._pw_upper)
            fields.append(f"tame={'true' if tame else 'false'}")
        dipw_engine_utils.emit(" ".join(fields) + "\n")
        return self.decision_exit_code(True)


class BoundCommand(AbstractCommand):
    """
    Prints the best pathwidth lower bound the certificate searches find: the degree-interval bound, the best degree
    tangle over all window widths and the best matching tangle over all gaps, one `name value` line each, followed by
    `best <value>`.

    Attributes:
        command_name (str): Subcommand label.
        _input_path (str): Edge-list file of a semicomplete digraph.
    """

    command_name: typing.ClassVar[str] = "obstacle bound"

    def __init__(self, input_path: str):
        shared_param_val.type_check(input_path, str)

        self._input_path = input_path

    def execute(self) -> int:
        graph = dipw_engine_utils.load_input_digraph(self._input_path)
        bounds = {
            "degree-interval": verifiers.degree_interval_lower_bound(graph),
            "degree-tangle": 0,
            "matching-tangle": 0,
        }
        for k in range(graph.n):
            degree_tangle = search.find_degree_tangle(graph, k)
            if degree_tangle is not None:
                verdict = verifiers.verify_degree_tangle(graph, degree_tangle)
                bounds["degree-tangle"] = max(bounds["degree-tangle"], verdict.lower_bound or 0)
            matching_tangle = search.best_matching_tangle(graph, k)
            if matching_tangle is not None:
                verdict = verifiers.verify_matching_tangle(graph, matching_tangle)
                bounds["matching-tangle"] = max(bounds["matching-tangle"], verdict.lower_bound or 0)

        lines = [f"{name} {value}" for name, value in bounds.items()] + [f"best {max(bounds.values())}"]
        dipw_engine_utils.emit("\n".join(lines) + "\n")
        return self.decision_exit_code(True)
