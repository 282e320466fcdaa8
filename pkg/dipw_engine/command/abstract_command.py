"""
*Command* is one CLI subcommand of dipw engine. Hydra instantiates the configured command, the entry point executes it.

This file contains *Abstract Command* class which defines common interface across all *Command* types.
"""

import importlib
import typing
from abc import ABC, abstractmethod
from shared import dipw_globals
from dipw_engine import command as command_package


class AbstractCommand(ABC):
    """
    *Abstract Command* is an abstract class for any instantiable *Command*. Constructors validate the whole
    configuration, so <execute()> starts only with valid parameters. Results go to stdout or to the requested output
    file, diagnostics go to the log.

    Attributes:
        command_name (str): Subcommand label as written on the command line, e.g. `pw decide`.
    """

    @property
    def command_name(self) -> str:
        """
        Defines attribute `command_name` using "get" method as not implemented - abstract attribute.

        Returns (str):
        """
        raise NotImplementedError

    @abstractmethod
    def execute(self) -> int:
        """
        Runs the command.

        Returns (int): Process exit code, <dipw_globals.EXIT_OK> unless the command decides negatively.
        """

    @staticmethod
    def decision_exit_code(decided_yes: bool) -> int:
        return dipw_globals.EXIT_OK if decided_yes else dipw_globals.EXIT_DECIDED_NO


def all_command_names() -> typing.List[str]:
    """
    Lists the labels of all concrete commands.

    Returns (typing.List[str]): Sorted subcommand labels.
    """
    for module_name in command_package.__all__:
        importlib.import_module(f"{command_package.__name__}.{module_name}")

    def concrete(cls: type) -> typing.Iterator[type]:
        for child in cls.__subclasses__():
            yield from concrete(child)
            if not getattr(child, "__abstractmethods__", None):
                yield child

    return sorted({child.command_name for child in concrete(AbstractCommand)})
