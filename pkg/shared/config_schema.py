"""
This module provides decorator <create_structured_config_schema> which creates a *Structured Config Schema* used by
Hydra framework to validate presence of expected config parameters and their type. It calls the schema registration
function passed as an argument. The decorator has to be used before Hydra's <hydra.main>. See the sample code:

```
@create_structured_config_schema(dipw_engine_config_schema_registration)
@hydra.main(config_path="conf", config_name="dipw_engine_config")
@set_hydra_config
def main(cfg: DictConfig) -> None:
    ...
```
"""


import typing
from functools import wraps
from hydra.core.config_store import ConfigStore


def create_structured_config_schema(
    schema_registering_function: typing.Callable[[ConfigStore], None]
) -> typing.Callable[[typing.Callable[..., typing.Any]], typing.Callable[..., typing.Any]]:
    """
    Registers *Structured Config Schema* of Hydra framework, which validates presence and data types of config
    parameters, not their values. The registration itself is done by <schema_registering_function>.

    Args:
        schema_registering_function (typing.Callable[[ConfigStore], None]): Function which does actual Structured
            Config Schema registration. It takes only the ConfigStore instance and returns None.

    Returns (typing.Callable[[typing.Callable[..., typing.Any]], typing.Callable[..., typing.Any]]): Decorator of
        Hydra's main function.
    """

    def call_schema_register(hydra_main_func: typing.Callable[..., typing.Any]) -> typing.Callable[..., typing.Any]:
        """
        Calls <schema_registering_function> function at first and then returns wrapped Hydra's main function.

        Args:
            hydra_main_func (typing.Callable[..., typing.Any]): Hydra's main function.

        Returns (typing.Callable[..., typing.Any]): Wrapped Hydra's main function.
        """
        schema_registering_function(ConfigStore.instance())

        @wraps(hydra_main_func)
        def hydra_main_decorator(*args: typing.Any, **kwargs: typing.Any) -> typing.Any:
            return hydra_main_func(*args, **kwargs)

        return hydra_main_decorator

    return call_schema_register
