"""
Precondition checks shared by all dipw packages. Domain checks (widths, seeds, degree bounds) live in
`dipw_engine.miscellaneous.dipw_engine_param_validators` and build on these.
"""

import math
import os
import typing


Number = typing.Union[int, float]


def _accepts_bool(expected_type: typing.Any) -> bool:
    expected = expected_type if isinstance(expected_type, tuple) else (expected_type,)
    return bool in expected or object in expected


def type_check(variable: typing.Any, expected_type: typing.Any) -> None:
    """
    Validates that <variable> is an instance of <expected_type>. `bool` is a subclass of `int` in Python, a `bool`
    value is nevertheless refused where an integer is expected, unless <expected_type> names `bool` itself.

    Args:
        variable (typing.Any): Variable.
        expected_type (typing.Any): Type or tuple of types.

    Returns (None):

    Exceptions:
        TypeError: Raised if <variable> is not type of <expected_type>.
    """
    if not isinstance(variable, expected_type) or (isinstance(variable, bool) and not _accepts_bool(expected_type)):
        raise TypeError(f"Given variable value `{variable}` does not meet expected type `{expected_type}`.")


def non_negative_int_check(value: int, label: str) -> None:
    """
    Validates that <value> is a non-negative integer.

    Args:
        value (int): Checked value.
        label (str): Parameter name used in the error message.

    Returns (None):

    Exceptions:
        TypeError: If <value> is not an integer.
        ValueError: If <value> is negative.
    """
    type_check(value, int)
    type_check(label, str)
    if value < 0:
        raise ValueError(f"Parameter <{label}> has to be non-negative, `{value}` was given.")


def file_existence_check(file_path: str) -> None:
    """
    Validates that an input file exists before it is opened, so the user gets the path in the message.

    Args:
        file_path (str): File path.

    Returns (None):

    Exceptions:
        FileNotFoundError: If <file_path> is not an existing regular file.
    """
    type_check(file_path, str)
    if not os.path.isfile(file_path):
        raise FileNotFoundError(f"Input file `{file_path}` does not exist.")


def parameter_value_in_range(
    param_value: Number, lower_bound: Number, upper_bound: Number, label: typing.Optional[str] = None
) -> None:
    """
    Checks that <param_value> lies in the closed range <<lower_bound>, <upper_bound>>. `NaN` is never in range.

    Args:
        param_value (Number): Parameter value.
        lower_bound (Number): Lower bound of allowed parameter values.
        upper_bound (Number): Upper bound of allowed parameter values.
        label (typing.Optional[str]): Parameter name used in the error message, it is optional.

    Returns (None):

    Exceptions:
        TypeError: If a value is not a number.
        ValueError: If value is not in the range.
    """
    for value in (param_value, lower_bound, upper_bound):
        type_check(value, (int, float))
    if math.isnan(param_value) or not lower_bound <= param_value <= upper_bound:
        name = f"Parameter <{label}>" if label is not None else "Given value"
        raise ValueError(f"{name} `{param_value}` is out of the allowed range <{lower_bound}, {upper_bound}>.")
