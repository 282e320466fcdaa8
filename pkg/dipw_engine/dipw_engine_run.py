"""
The script runs *dipw engine* component, the command-line front-end of dipw. The subcommand is chosen by Hydra's
`command` config group, e.g.:

```
python dipw_engine/dipw_engine_run.py command=pw_decide command.input_path=c3.dg command.k=1
```

Exit codes: `0` success or decided yes, `1` decided no, `2` usage or input error.
"""


import logging
import os
import sys
import hydra
from hydra.errors import InstantiationException
from omegaconf.errors import OmegaConfBaseException
from shared import custom_exception
from shared import dipw_globals
from shared.config import set_hydra_config
from shared.config_schema import create_structured_config_schema
from dipw_engine.miscellaneous import dipw_engine_utils
from dipw_engine.miscellaneous.dipw_engine_config_schema import DipwEngineConfigSchema
from dipw_engine.miscellaneous.dipw_engine_config_schema import dipw_engine_config_schema_registration


_logger = logging.getLogger(__name__)

CONFIG_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "conf")

_REPORTED_ERRORS = (
    custom_exception.DipwInputError,
    ValueError,
    TypeError,
    OSError,
    OmegaConfBaseException,
    InstantiationException,
)


def _diagnostic(error: BaseException) -> str:
    """
    Builds the one-line diagnostic of a reported error. Hydra wraps the errors raised by a command constructor, the
    wrapped error is reported instead.

    Args:
        error (BaseException): Reported error.

    Returns (str): Single line message.
    """
    if isinstance(error, InstantiationException) and error.__cause__ is not None:
        error = error.__cause__
    lines = str(error).strip().splitlines() or [type(error).__name__]
    return lines[0]


@create_structured_config_schema(dipw_engine_config_schema_registration)
@hydra.main(version_base=None, config_path=CONFIG_DIR, config_name="dipw_engine_config")  # type: ignore[misc]
@set_hydra_config
def main(hydra_config: DipwEngineConfigSchema) -> None:  # pylint: disable=unused-argument
    """
    Main function of *dipw engine* component. Instantiates the configured *Command*, executes it and exits with its
    exit code.

    Args:
        hydra_config (DipwEngineConfigSchema): dipw engine configuration parameters provided by Hydra's config.

    Returns (None):
    """
    dipw_globals.task_started = True
    try:
        command = dipw_engine_utils.instantiate_command()
        exit_code = command.execute()
    except _REPORTED_ERRORS as error:
        _logger.error("%s", _diagnostic(error))
        sys.exit(dipw_globals.EXIT_USAGE_ERROR)
    sys.exit(exit_code)


def run() -> None:
    """
    Console entry point. Failures of Hydra's own argument parsing and config composition are mapped to the usage
    error exit code.

    Returns (None):
    """
    try:
        main()  # pylint: disable=no-value-for-parameter
    except SystemExit as system_exit:
        if not dipw_globals.task_started and system_exit.code not in (None, dipw_globals.EXIT_OK):
            sys.exit(dipw_globals.EXIT_USAGE_ERROR)
        raise


if __name__ == "__main__":
    run()
