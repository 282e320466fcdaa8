"""
This file defines custom exceptions.
"""


import typing
from shared import param_validators as shared_param_val


class DipwInputError(ValueError):
    """
    Input of a *dipw* operation violates its precondition (out-of-range vertex, overlapping terminal sets,
    non-admissible instance, degree bound violation, ...).

    Attributes:
        message (str): Exception message.
    """

    def __init__(self, msg: typing.Optional[str] = None):
        """
        Stores the message. If no message is passed, empty error message is used.

        Args:
            msg (typing.Optional[str]): String to be used as an error message, it is optional.
        """
        shared_param_val.type_check(msg, (str, type(None)))
        self.message = msg or ""
        super().__init__(self.message)

    def __str__(self) -> str:
        """
        Used to get string representation of the error.

        Returns (str): String error representation.
        """
        return self.message


class GraphFormatError(DipwInputError):
    """
    Text artifact (edge list, path-decomposition, separation chain, certificate) is malformed.

    Two ways of use. Pass <line_no> argument, then the message is prefixed by the line number, so the user can find
    the offending line. See the sample code snippet:
    ```
    GraphFormatError("self-loop 3 3", line_no=4)  # -> "line 4: self-loop 3 3"
    GraphFormatError("missing header")            # -> "missing header"
    ```

    Attributes:
        message (str): Exception message.
        line_no (typing.Optional[int]): 1-based number of the offending line.
    """

    def __init__(self, msg: typing.Optional[str] = None, line_no: typing.Optional[int] = None):
        """
        Builds the message, prefixed by <line_no> when given.

        Args:
            msg (typing.Optional[str]): Reason of the parse failure.
            line_no (typing.Optional[int]): 1-based number of the offending line, it is optional.
        """
        shared_param_val.type_check(line_no, (int, type(None)))
        self.line_no = line_no
        if line_no is not None:
            msg = f"line {line_no}: {msg or ''}"
        super().__init__(msg)


class OracleCapError(DipwInputError):
    """
    Exact oracle refuses a digraph larger than its configured vertex cap.
    """

    def __init__(self, vertex_count: int, cap: int):
        """
        Uses the template message.

        Args:
            vertex_count (int): Vertex count of the refused digraph.
            cap (int): Configured oracle cap.
        """
        shared_param_val.type_check(vertex_count, int)
        shared_param_val.type_check(cap, int)
        super().__init__(f"Oracle refuses digraph with `{vertex_count}` vertices, the cap is `{cap}`.")


class InvariantViolationError(AssertionError):
    """
    A runtime-checked invariant of an algorithm does not hold. It signals a bug, never bad user input, therefore it
    is not caught anywhere in the package.
    """
