"""
Process wide access to the Hydra config of a dipw run.

The entry point publishes the composed config once, by stacking <set_hydra_config> right below <hydra.main>:

```
@hydra.main(version_base=None, config_path=CONFIG_DIR, config_name="dipw_engine_config")
@set_hydra_config
def main(hydra_config: DictConfig) -> None:
```

Code deeper in the call stack never receives the config as a parameter. It asks for it with the <GetHydraConfig>
decorator, which injects the published config as the first positional argument:

```
@GetHydraConfig
def instantiate_command(hydra_config: DictConfig) -> AbstractCommand:
    ...
```
"""

import typing
from functools import wraps
from types import MethodType
from omegaconf import DictConfig, OmegaConf
from shared.structures import Singleton


config: typing.Optional[DictConfig] = None  # pylint: disable=invalid-name


@Singleton
def set_hydra_config(main_function: typing.Callable[..., typing.Any]) -> typing.Callable[..., typing.Any]:
    """
    Wraps the Hydra main function so that it publishes its config into <config> before running. Only one main function
    per process may be wrapped. The published config is read-only.

    Args:
        main_function (typing.Callable[..., typing.Any]): Function decorated by <hydra.main>.

    Returns (typing.Callable[..., typing.Any]): Wrapped <main_function>.
    """

    @wraps(main_function)
    def publishing_main(cfg: DictConfig) -> typing.Any:
        global config  # pylint: disable=global-statement, invalid-name
        OmegaConf.set_readonly(cfg, True)
        config = cfg
        return main_function(cfg)

    return publishing_main


class GetHydraConfig:
    """
    Injects the published config as the first argument of a function. Works on plain functions and on methods, where
    the config comes right after `self`.

    Attributes:
        _decorated_func (typing.Any): Wrapped function or bound method.
    """

    def __init__(self, decorated_func: typing.Any):
        self._decorated_func = decorated_func

    def __call__(self, *args: typing.Any, **kwargs: typing.Any) -> typing.Any:
        """
        Calls the wrapped function with <config> prepended to <args>.

        Args:
            *args (typing.Any): Remaining positional arguments.
            **kwargs (typing.Any): Keyword arguments.

        Returns (typing.Any): Return value of the wrapped function.

        Exceptions:
            RuntimeError: If no config has been published yet, i.e. the code runs outside of the Hydra entry point.
        """
        if config is None:
            raise RuntimeError("Hydra config is not set. Decorate the main function with <set_hydra_config>.")
        return self._decorated_func(config, *args, **kwargs)

    def __get__(self, instance: typing.Any, owner: typing.Any) -> typing.Any:
        # attribute access on an instance binds the method first, so `self` precedes the injected config
        if instance is None:
            return self
        return self.__class__(MethodType(self._decorated_func, instance))
