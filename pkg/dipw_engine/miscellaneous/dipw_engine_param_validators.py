"""
The module provides parameter validation functions specific for dipw engine. The scope of validation is all
parameters.
"""

import typing
from shared import custom_exception
from shared import utils as shared_utils
from shared import param_validators as shared_param_val


class DegreeBounded(typing.Protocol):
    """
    Any graph exposing its maximum degree.
    """

    def max_degree(self) -> int:
        ...


def degree_bound_check(graph: DegreeBounded, d: int) -> None:
    """
    Checks that every vertex of <graph> has degree at most <d>.

    Args:
        graph (DegreeBounded): Undirected graph.
        d (int): Degree bound.

    Returns (None):

    Exceptions:
        DipwInputError: If a vertex has degree above <d> or <d> is negative.
    """
    shared_param_val.type_check(d, int)
    if d < 0:
        raise custom_exception.DipwInputError(f"Degree bound has to be non-negative, `{d}` was given.")
    if graph.max_degree() > d:
        raise custom_exception.DipwInputError(f"Graph has maximum degree {graph.max_degree()} above d = {d}.")


def seed_check(seed: typing.Optional[int]) -> int:
    """
    Checks that a randomized command got an explicit 64-bit seed.

    Args:
        seed (typing.Optional[int]): Seed from the command config.

    Returns (int): The seed.

    Exceptions:
        DipwInputError: If the seed is missing or does not fit into 64 bits.
    """
    if seed is None:
        raise custom_exception.DipwInputError("Randomized commands require an explicit `seed`.")
    shared_param_val.type_check(seed, int)
    if not 0 <= seed <= shared_utils.SEED_UPPER_BOUND:
        raise custom_exception.DipwInputError(f"Seed `{seed}` does not fit into 64 bits.")
    return seed


def width_check(value: int, label: str) -> None:
    """
    Checks that a width-like parameter (`k`, `h`, `l`, ...) is a non-negative integer.

    Args:
        value (int): Checked value.
        label (str): Parameter name used in the error message.

    Returns (None):

    Exceptions:
        DipwInputError: If <value> is negative or not an integer.
    """
    if isinstance(value, bool) or not isinstance(value, int):
        raise custom_exception.DipwInputError(f"Parameter <{label}> has to be an integer, `{value}` was given.")
    if value < 0:
        raise custom_exception.DipwInputError(f"Parameter <{label}> has to be non-negative, `{value}` was given.")
