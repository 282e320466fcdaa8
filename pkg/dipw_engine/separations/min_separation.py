"""
Minimum `S-T` separations and the measures driving the pathwidth recursion.

`γ(S, T)` is the minimum separation order (infinite if an edge goes from `S` to `T`),
`μ(S, T) = 2|V \\ (N+[S] ∪ N-[T])| + |N+(S) Δ N-(T)|` and `μ'(S, T) = max(0, 2μ(S, T) - 1)`.
"""

import math
import typing
from shared import custom_exception
from shared import param_validators as shared_param_val
from dipw_engine.digraph import vertex_set as vs
from dipw_engine.digraph.digraph import Digraph
from dipw_engine.separations import vertex_flow
from dipw_engine.separations.separation import Separation, is_st_separation, require_disjoint


GAMMA_INFINITE: typing.Final[float] = math.inf

Gamma = typing.Union[int, float]


def _validated_terminals(
    graph: Digraph, s: vs.VertexSetLike, t: vs.VertexSetLike
) -> typing.Tuple[vs.VertexSet, vs.VertexSet]:
    shared_param_val.type_check(graph, Digraph)
    s_mask = vs.as_vertex_set(s, graph.n)
    t_mask = vs.as_vertex_set(t, graph.n)
    require_disjoint(s_mask, t_mask)
    return s_mask, t_mask


def _forward_masks(graph: Digraph) -> typing.List[int]:
    return [graph.out_mask(v) for v in range(graph.n)]


def _backward_masks(graph: Digraph) -> typing.List[int]:
    return [graph.in_mask(v) for v in range(graph.n)]


def _checked(graph: Digraph, sep: Separation, s: vs.VertexSet, t: vs.VertexSet, order: int) -> Separation:
    if not is_st_separation(graph, sep, s, t) or sep.order != order:
        raise custom_exception.InvariantViolationError(
            f"Flow recovered `{sep}` which is not an S-T separation of order `{order}`."
        )
    return sep


def min_st_separation(
    graph: Digraph, s: vs.VertexSetLike, t: vs.VertexSetLike
) -> typing.Optional[typing.Tuple[Separation, int]]:
    """
    Computes a minimum `S-T` separation, the one closest to `S` (smallest `A`). Every minimum `S-T` separation
    `(X, Y)` satisfies `A ⊆ X` for the returned `(A, B)`.

    Args:
        graph (Digraph): Digraph.
        s (vs.VertexSetLike): Set `S`.
        t (vs.VertexSetLike): Set `T`.

    Returns (typing.Optional[typing.Tuple[Separation, int]]): Separation and its order, `None` iff an edge goes from
        `S` to `T`.

    Exceptions:
        DipwInputError: If `S` and `T` overlap or contain out-of-range vertices.
    """
    s_mask, t_mask = _validated_terminals(graph, s, t)
    result = vertex_flow.leftmost_min_cut(_forward_masks(graph), graph.n, s_mask, t_mask)
    if result is None:
        return None
    sep = _checked(graph, Separation(result.a, result.b), s_mask, t_mask, result.value)
    return sep, result.value


def rightmost_min_st_separation(
    graph: Digraph, s: vs.VertexSetLike, t: vs.VertexSetLike
) -> typing.Optional[typing.Tuple[Separation, int]]:
    """
    Computes the minimum `S-T` separation closest to `T` (smallest `B`), by running the flow from `T` to `S` on the
    reversed adjacency.

    Args:
        graph (Digraph): Digraph.
        s (vs.VertexSetLike): Set `S`.
        t (vs.VertexSetLike): Set `T`.

    Returns (typing.Optional[typing.Tuple[Separation, int]]): Separation and its order, `None` iff an edge goes from
        `S` to `T`.

    Exceptions:
        DipwInputError: If `S` and `T` overlap or contain out-of-range vertices.
    """
    s_mask, t_mask = _validated_terminals(graph, s, t)
    result = vertex_flow.leftmost_min_cut(_backward_masks(graph), graph.n, t_mask, s_mask)
    if result is None:
        return None
    sep = _checked(graph, Separation(result.b, result.a), s_mask, t_mask, result.value)
    return sep, result.value


def gamma(graph: Digraph, s: vs.VertexSetLike, t: vs.VertexSetLike) -> Gamma:
    """
    Returns the minimum `S-T` separation order.

    Args:
        graph (Digraph): Digraph.
        s (vs.VertexSetLike): Set `S`.
        t (vs.VertexSetLike): Set `T`.

    Returns (Gamma): Order, or <GAMMA_INFINITE> if no `S-T` separation exists.
    """
    found = min_st_separation(graph, s, t)
    return GAMMA_INFINITE if found is None else found[1]


def mu(graph: Digraph, s: vs.VertexSetLike, t: vs.VertexSetLike) -> int:
    """
    Returns `μ(S, T) = 2|V \\ (N+[S] ∪ N-[T])| + |N+(S) Δ N-(T)|`.

    Args:
        graph (Digraph): Digraph.
        s (vs.VertexSetLike): Set `S`.
        t (vs.VertexSetLike): Set `T`.

    Returns (int): Potential of the instance `(S, T)`.

    Exceptions:
        DipwInputError: If `S` and `T` overlap or contain out-of-range vertices.
    """
    s_mask, t_mask = _validated_terminals(graph, s, t)
    closed_out = graph.closed_out_neighborhood(s_mask)
    closed_in = graph.closed_in_neighborhood(t_mask)
    outside = graph.vertices & ~(closed_out | closed_in)
    difference = (closed_out & ~s_mask) ^ (closed_in & ~t_mask)
    return 2 * outside.bit_count() + difference.bit_count()


def mu_prime(graph: Digraph, s: vs.VertexSetLike, t: vs.VertexSetLike) -> int:
    return max(0, 2 * mu(graph, s, t) - 1)


def is_trivial(graph: Digraph, sep: Separation, s: vs.VertexSet, t: vs.VertexSet) -> bool:
    """
    An `S-T` separation `(A, B)` is trivial if `B = V \\ S` or `A = V \\ T`.

    Args:
        graph (Digraph): Digraph.
        sep (Separation): `S-T` separation.
        s (vs.VertexSet): Set `S`.
        t (vs.VertexSet): Set `T`.

    Returns (bool): True iff trivial.
    """
    everything = graph.vertices
    return sep.b == everything & ~s or sep.a == everything & ~t


def find_nontrivial_min_separation(
    graph: Digraph, s: vs.VertexSetLike, t: vs.VertexSetLike
) -> typing.Optional[Separation]:
    """
    Searches for a minimum `S-T` separation `(X, Y)` with `X \\ Y ⊋ S` and `Y \\ X ⊋ T`.

    For every candidate `u ∉ S ∪ T ∪ N-(T)` the separation closest to `S ∪ {u}` is computed with the flow capped at
    `γ + 1`. If it has order `γ` and its `B \\ A` strictly contains `T`, it is a non-trivial minimum `S-T`
    separation. Otherwise no minimum `S-T` separation has `u` in `A \\ B` and `B \\ A ⊋ T`, because its `B \\ A`
    equals `V \\ A` and the `A` side closest to the source is the smallest one. The search needs `O(n)` flows.

    Args:
        graph (Digraph): Digraph.
        s (vs.VertexSetLike): Set `S`.
        t (vs.VertexSetLike): Set `T`.

    Returns (typing.Optional[Separation]): First non-trivial minimum separation in vertex order, `None` if every
        minimum separation is trivial.

    Exceptions:
        DipwInputError: If `S` and `T` overlap or no `S-T` separation exists.
    """
    s_mask, t_mask = _validated_terminals(graph, s, t)
    forward = _forward_masks(graph)
    base = vertex_flow.leftmost_min_cut(forward, graph.n, s_mask, t_mask)
    if base is None:
        raise custom_exception.DipwInputError("No S-T separation exists, an edge goes from S to T.")
    target = base.value

    candidates = graph.vertices & ~(s_mask | t_mask | graph.closed_in_neighborhood(t_mask))
    for u in vs.iter_members(candidates):
        result = vertex_flow.leftmost_min_cut(forward, graph.n, s_mask | (1 << u), t_mask, limit=target + 1)
        if result is None or result.capped or result.value != target:
            continue
        sep = Separation(result.a, result.b)
        if sep.b_only != t_mask:
            return _checked(graph, sep, s_mask, t_mask, target)
    return None


def find_nontrivial_min_separation_by_pairs(
    graph: Digraph, s: vs.VertexSetLike, t: vs.VertexSetLike
) -> typing.Optional[Separation]:
    """
    Pair test for a non-trivial minimum `S-T` separation: one exists iff some `u ∉ S`, `v ∉ T`, `u != v` have
    `γ(S ∪ {u}, T ∪ {v}) = γ(S, T)`; the minimum separation of that pair is returned. Needs `O(n^2)` flows, it is
    kept as a reference for <find_nontrivial_min_separation()>.

    Args:
        graph (Digraph): Digraph.
        s (vs.VertexSetLike): Set `S`.
        t (vs.VertexSetLike): Set `T`.

    Returns (typing.Optional[Separation]): Non-trivial minimum separation or `None`.

    Exceptions:
        DipwInputError: If `S` and `T` overlap or no `S-T` separation exists.
    """
    s_mask, t_mask = _validated_terminals(graph, s, t)
    base = min_st_separation(graph, s_mask, t_mask)
    if base is None:
        raise custom_exception.DipwInputError("No S-T separation exists, an edge goes from S to T.")
    target = base[1]

    forward = _forward_masks(graph)
    everything = graph.vertices
    for u in vs.iter_members(everything & ~(s_mask | t_mask)):
        for v in vs.iter_members(everything & ~(s_mask | t_mask | (1 << u))):
            result = vertex_flow.leftmost_min_cut(
                forward, graph.n, s_mask | (1 << u), t_mask | (1 << v), limit=target + 1
            )
            if result is not None and not result.capped and result.value == target:
                return _checked(graph, Separation(result.a, result.b), s_mask, t_mask, target)
    return None
