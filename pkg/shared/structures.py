"""
Decorator patterns shared by dipw packages.
"""


import typing


class Singleton:
    """
    Guards a one-time initialization: the decorated function (or class) may be called (or instantiated) once per
    process. Used for publishing the Hydra config, which has to happen exactly once per run.

    Attributes:
        _called (typing.Set[typing.Any]): Objects already called, shared by all <Singleton> instances.
        _decorated_object (typing.Any): Guarded function or class.
    """

    _called: typing.Set[typing.Any] = set()

    def __init__(self, decorated_object: typing.Any):
        self._decorated_object = decorated_object

    def __call__(self, *args: typing.Any, **kwargs: typing.Any) -> typing.Any:
        """
        Calls the guarded object on its first use.

        Args:
            *args (typing.Any): Positional arguments.
            **kwargs (typing.Any): Keyword arguments.

        Returns (typing.Any): Result of the guarded call.

        Exceptions:
            RuntimeError: On the second call.
        """
        if self._decorated_object in self._called:
            raise RuntimeError(f"{self._decorated_object} is a `Singleton` and was already called once.")
        self._called.add(self._decorated_object)
        return self._decorated_object(*args, **kwargs)
