"""
Exact pathwidth through the *vertex separation number*: the pathwidth of a digraph equals the minimum, over vertex
orderings, of the largest `d+(P)` of a prefix set `P`. The subset dynamic program

    value(∅) = 0,    value(U) = max(d+(U), min over v ∈ U of value(U \\ {v}))

gives the best achievable width of orderings starting with the vertices of `U`, so `value(V)` is the pathwidth. The
table has `2^n` entries and is filled layer by layer (by subset size) with vectorized numpy operations.
"""

import itertools
import logging
import typing
import numpy as np
from shared import custom_exception
from shared import param_validators as shared_param_val
from dipw_engine.digraph import vertex_set as vs
from dipw_engine.digraph.digraph import Digraph


_logger = logging.getLogger(__name__)

DEFAULT_ORACLE_CAP: typing.Final[int] = 22
BRUTE_FORCE_CAP: typing.Final[int] = 8
# subsets are uint32 bitmasks
MAX_ORACLE_CAP: typing.Final[int] = 32

_POPCOUNT_16 = np.array([bin(value).count("1") for value in range(1 << 16)], dtype=np.int8)


def _popcount(values: np.ndarray) -> np.ndarray:
    return _POPCOUNT_16[values & 0xFFFF] + _POPCOUNT_16[values >> 16]


def _check_cap(graph: Digraph, cap: int) -> None:
    shared_param_val.type_check(graph, Digraph)
    shared_param_val.non_negative_int_check(cap, "cap")
    shared_param_val.parameter_value_in_range(cap, 0, MAX_ORACLE_CAP, label="cap")
    if graph.n > cap:
        raise custom_exception.OracleCapError(graph.n, cap)


def out_section_table(graph: Digraph) -> np.ndarray:
    """
    Tabulates `d+(U)` for every subset `U`, indexed by the bitmask of `U`.

    Args:
        graph (Digraph): Digraph with at most 32 vertices.

    Returns (np.ndarray): Array of `2^n` out-section sizes.
    """
    closure = np.zeros(1 << graph.n, dtype=np.uint32)
    for v in range(graph.n):
        low = 1 << v
        closure[low : 2 * low] = closure[:low] | np.uint32(graph.out_mask(v) | low)
    subsets = np.arange(1 << graph.n, dtype=np.uint32)
    return _popcount(closure & ~subsets).astype(np.int16)


def vertex_separation_table(graph: Digraph, cap: int = DEFAULT_ORACLE_CAP) -> np.ndarray:
    """
    Fills the subset dynamic program.

    Args:
        graph (Digraph): Digraph.
        cap (int): Largest accepted vertex count, at most <MAX_ORACLE_CAP>.

    Returns (np.ndarray): <value[U]> is the least width of an ordering whose first `|U|` vertices are `U`.

    Exceptions:
        OracleCapError: If <graph> has more than <cap> vertices.
        ValueError: If <cap> exceeds <MAX_ORACLE_CAP>.
    """
    _check_cap(graph, cap)
    out_section = out_section_table(graph)
    value = out_section.copy()
    subsets = np.arange(1 << graph.n, dtype=np.uint32)
    sizes = _popcount(subsets)
    for size in range(1, graph.n + 1):
        layer = subsets[sizes == size]
        best = np.full(layer.shape, np.iinfo(np.int16).max, dtype=np.int16)
        for v in range(graph.n):
            bit = np.uint32(1 << v)
            holders = (layer & bit) != 0
            np.minimum(best, np.where(holders, value[layer ^ bit], best), out=best)
        value[layer] = np.maximum(out_section[layer], best)
    return value


def oracle_pathwidth(graph: Digraph, cap: int = DEFAULT_ORACLE_CAP) -> int:
    """
    Computes the exact pathwidth.

    Args:
        graph (Digraph): Digraph.
        cap (int): Largest accepted vertex count, at most <MAX_ORACLE_CAP>.

    Returns (int): Pathwidth of <graph>.

    Exceptions:
        OracleCapError: If <graph> has more than <cap> vertices.
        ValueError: If <cap> exceeds <MAX_ORACLE_CAP>.
    """
    value = vertex_separation_table(graph, cap)
    _logger.debug("Oracle table of %d entries filled", value.size)
    return int(value[-1])


def oracle_ordering(graph: Digraph, cap: int = DEFAULT_ORACLE_CAP) -> typing.List[int]:
    """
    Extracts an ordering of optimal width. Walking back from `V`, the removed vertex is re-derived as the lowest
    `v ∈ U` minimizing `value(U \\ {v})`, so no parent pointers are stored.

    Args:
        graph (Digraph): Digraph.
        cap (int): Largest accepted vertex count, at most <MAX_ORACLE_CAP>.

    Returns (typing.List[int]): Vertex ordering whose width equals <oracle_pathwidth()>.

    Exceptions:
        OracleCapError: If <graph> has more than <cap> vertices.
        ValueError: If <cap> exceeds <MAX_ORACLE_CAP>.
    """
    value = vertex_separation_table(graph, cap)
    remaining = graph.vertices
    reversed_order = []
    while remaining:
        last = min(vs.iter_members(remaining), key=lambda v: (value[remaining & ~(1 << v)], v))
        reversed_order.append(last)
        remaining &= ~(1 << last)
    return reversed_order[::-1]


def ordering_width(graph: Digraph, ordering: typing.Sequence[int]) -> int:
    """
    Width of a vertex ordering: the largest `d+` of its prefix sets.

    Args:
        graph (Digraph): Digraph.
        ordering (typing.Sequence[int]): Permutation of the vertices.

    Returns (int): Ordering width.

    Exceptions:
        DipwInputError: If <ordering> is not a vertex permutation.
    """
    shared_param_val.type_check(graph, Digraph)
    if sorted(ordering) != list(range(graph.n)):
        raise custom_exception.DipwInputError(f"Sequence `{list(ordering)}` is not a vertex permutation.")
    prefix = vs.EMPTY
    width = 0
    for v in ordering:
        prefix |= 1 << v
        width = max(width, graph.d_plus(prefix))
    return width


def brute_force_pathwidth(graph: Digraph, cap: int = BRUTE_FORCE_CAP) -> int:
    """
    Minimum ordering width over all `n!` orderings. Reference for the dynamic program on tiny digraphs.

    Args:
        graph (Digraph): Digraph.
        cap (int): Largest accepted vertex count, at most <MAX_ORACLE_CAP>.

    Returns (int): Pathwidth of <graph>.

    Exceptions:
        OracleCapError: If <graph> has more than <cap> vertices.
        ValueError: If <cap> exceeds <MAX_ORACLE_CAP>.
    """
    _check_cap(graph, cap)
    return min((ordering_width(graph, ordering) for ordering in itertools.permutations(range(graph.n))), default=0)
