"""
*Vertex Set* helpers. A vertex set over vertices `0..n-1` is stored as a Python `int` bitmask, bit `v` set iff `v` is
a member. Integers are immutable and hashable, so vertex sets can be shared freely and used as dictionary keys.
"""

import typing
from shared import custom_exception
from shared import param_validators as shared_param_val


VertexSet = int
VertexSetLike = typing.Union[int, typing.Iterable[int]]

EMPTY: typing.Final[VertexSet] = 0


def full(n: int) -> VertexSet:
    """
    Returns the vertex set `{0, ..., n-1}`.

    Args:
        n (int): Vertex count.

    Returns (VertexSet): All vertices.
    """
    return (1 << n) - 1


def singleton(v: int) -> VertexSet:
    return 1 << v


def from_iterable(vertices: typing.Iterable[int]) -> VertexSet:
    """
    Builds a vertex set from vertex indices.

    Args:
        vertices (typing.Iterable[int]): Vertex indices, duplicates are allowed.

    Returns (VertexSet): Vertex set.

    Exceptions:
        DipwInputError: If a vertex index is negative or not an integer.
    """
    mask = 0
    for v in vertices:
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise custom_exception.DipwInputError(f"Vertex `{v}` is not a non-negative integer index.")
        mask |= 1 << v
    return mask


def as_vertex_set(value: VertexSetLike, n: int) -> VertexSet:
    """
    Normalizes a bitmask or an iterable of vertex indices into a bitmask and checks that all members are below <n>.

    Args:
        value (VertexSetLike): Bitmask or iterable of vertex indices.
        n (int): Vertex count of the digraph the set belongs to.

    Returns (VertexSet): Vertex set.

    Exceptions:
        DipwInputError: If a member is out of the range `0..n-1`.
    """
    if isinstance(value, bool):
        raise custom_exception.DipwInputError("Boolean is not a vertex set.")
    mask = value if isinstance(value, int) else from_iterable(value)
    if mask < 0:
        raise custom_exception.DipwInputError(f"Negative bitmask `{mask}` is not a vertex set.")
    if mask >> n:
        out_of_range = [v for v in members(mask) if v >= n]
        raise custom_exception.DipwInputError(
            f"Vertices `{out_of_range}` are out of range, the digraph has `{n}` vertices."
        )
    return mask


def members(mask: VertexSet) -> typing.List[int]:
    """
    Lists members of <mask> in increasing order.

    Args:
        mask (VertexSet): Vertex set.

    Returns (typing.List[int]): Sorted vertex indices.
    """
    result = []
    while mask:
        low_bit = mask & -mask
        result.append(low_bit.bit_length() - 1)
        mask ^= low_bit
    return result


def iter_members(mask: VertexSet) -> typing.Iterator[int]:
    while mask:
        low_bit = mask & -mask
        yield low_bit.bit_length() - 1
        mask ^= low_bit


def size(mask: VertexSet) -> int:
    return mask.bit_count()


def contains(mask: VertexSet, v: int) -> bool:
    return bool((mask >> v) & 1)


def is_subset(inner: VertexSet, outer: VertexSet) -> bool:
    return inner & ~outer == 0


def lowest(mask: VertexSet) -> int:
    """
    Returns the smallest member of non-empty <mask>.

    Args:
        mask (VertexSet): Non-empty vertex set.

    Returns (int): Smallest vertex index.

    Exceptions:
        DipwInputError: If <mask> is empty.
    """
    shared_param_val.type_check(mask, int)
    if mask <= 0:
        raise custom_exception.DipwInputError("Empty vertex set has no smallest member.")
    return (mask & -mask).bit_length() - 1


def format_members(mask: VertexSet) -> str:
    """
    Renders <mask> as space separated vertex indices, the form used by all text artifacts and log records.

    Args:
        mask (VertexSet): Vertex set.

    Returns (str): E.g. `"0 3 4"`, empty string for the empty set.
    """
    return " ".join(str(v) for v in iter_members(mask))
