"""
dipw global common variables and constants.
"""

import asyncio
import typing

event_loop: asyncio.AbstractEventLoop = asyncio.new_event_loop()

# Set by the entry point once Hydra handed over the composed config. Until then a `SystemExit` comes from Hydra's
# own argument / config composition and is reported as a usage error.
task_started: bool = False  # pylint: disable=invalid-name

EXIT_OK: typing.Final[int] = 0
EXIT_DECIDED_NO: typing.Final[int] = 1
EXIT_USAGE_ERROR: typing.Final[int] = 2
