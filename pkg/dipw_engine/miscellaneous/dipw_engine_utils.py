"""
This file contains small domain-free functions specific to dipw engine.
"""

import logging
import sys
import typing
import hydra
from shared.config import GetHydraConfig
from dipw_engine.command.abstract_command import AbstractCommand
from dipw_engine.digraph import edge_list_io
from dipw_engine.digraph.digraph import Digraph
from dipw_engine.miscellaneous.dipw_engine_config_schema import DipwEngineConfigSchema


_logger = logging.getLogger(__name__)


@GetHydraConfig
def instantiate_command(hydra_config: DipwEngineConfigSchema) -> AbstractCommand:
    """
    Instantiates particular *Command* based on configuration provided by Hydra framework.

    Args:
        hydra_config (DipwEngineConfigSchema): dipw engine configuration parameters provided by Hydra's config.

    Returns (AbstractCommand): Instantiated *Command*.
    """
    return hydra.utils.instantiate(hydra_config.command)


def resolve_path(file_path: typing.Optional[str]) -> typing.Optional[str]:
    """
    Resolves a user given path against the directory the tool was started from.

    Args:
        file_path (typing.Optional[str]): Path, absolute or relative.

    Returns (typing.Optional[str]): Absolute path, `None` for `None`.
    """
    if file_path is None:
        return None
    return hydra.utils.to_absolute_path(file_path)


def load_input_digraph(file_path: str) -> Digraph:
    """
    Loads the digraph named by a command config.

    Args:
        file_path (str): Path to an edge-list file.

    Returns (Digraph): Digraph.

    Exceptions:
        OSError: If the file does not exist.
        GraphFormatError: If the file is malformed.
    """
    return edge_list_io.load_digraph(resolve_path(file_path))


def emit(text: str, output_path: typing.Optional[str] = None) -> None:
    """
    Writes a result either to stdout or to <output_path>.

    Args:
        text (str): Result text.
        output_path (typing.Optional[str]): Output file, stdout when `None`.

    Returns (None):
    """
    if output_path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    edge_list_io.save_text(resolve_path(output_path), text)
    _logger.info("Wrote `%s`", output_path)
