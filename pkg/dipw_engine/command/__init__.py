"""
Customized package loading when imported in a following way: `from dipw_engine.command import *`.
This allows to collect programmatically all child classes of *Abstract Command* class and avoids maintaining manually
the list of subcommands, so adding or renaming a command touches only its own module and YAML.

Getting of all child classes is illustrated in this code snippet:
```
from dipw_engine.command import *  # imports all modules in the package, so Python can see all the children
from dipw_engine.command.abstract_command import AbstractCommand  # manual import for statical IDE analysis

all_children = AbstractCommand.__subclasses__()
```
"""


import os.path as os_path
import glob

modules = glob.glob(os_path.join(os_path.dirname(__file__), "*.py"))
__all__ = [os_path.basename(f)[:-3] for f in modules if os_path.isfile(f) and not f.endswith("__init__.py")]
