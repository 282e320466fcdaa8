"""
*d-regular completion*: embedding a graph of maximum degree at most `d` into a d-regular graph on more vertices.

A graph on `n` vertices with degrees `deg(v) <= d` is an induced subgraph of some d-regular graph on `n + m` vertices
iff, with `t = Σ (d - deg(v))`:
    - `m·d >= t`,
    - `m² - m(d + 1) + t >= 0`,
    - `m >= d - deg(v)` for every `v`,
    - `(n + m)·d` is even.

<regular_completion()> covers the regime `N >= n + d + 1` with `N·d` even, where a completion always exists once edges
between the original vertices may be added as well. The result is then a supergraph, not necessarily induced.
"""

import logging
import typing
import networkx as nx
from shared import custom_exception
from shared import param_validators as shared_param_val
from dipw_engine.miscellaneous import dipw_engine_param_validators as param_val
from dipw_engine.digraph import vertex_set as vs
from dipw_engine.sampler.ugraph import UGraph


_logger = logging.getLogger(__name__)


def erdos_kelly_feasible(degrees: typing.Sequence[int], d: int, m: int) -> bool:
    """
    Decides whether a graph with degree sequence <degrees> extends to a d-regular graph by adding <m> vertices.

    Args:
        degrees (typing.Sequence[int]): Degrees of the existing graph.
        d (int): Target degree.
        m (int): Number of added vertices.

    Returns (bool): True iff all four conditions hold.

    Exceptions:
        DipwInputError: If a degree is negative or exceeds <d>.
    """
    shared_param_val.non_negative_int_check(d, "d")
    shared_param_val.non_negative_int_check(m, "m")
    for degree in degrees:
        if not 0 <= degree <= d:
            raise custom_exception.DipwInputError(f"Degree `{degree}` is outside 0..{d}.")

    deficits = [d - int(degree) for degree in degrees]
    t = sum(deficits)
    return (
        m * d >= t
        and m * m - m * (d + 1) + t >= 0
        and all(m >= deficit for deficit in deficits)
        and (len(deficits) + m) * d % 2 == 0
    )


def _require_completable(graph: UGraph, d: int, total: int) -> None:
    shared_param_val.type_check(graph, UGraph)
    shared_param_val.non_negative_int_check(total, "total")
    param_val.degree_bound_check(graph, d)
    if total < graph.n + d + 1:
        raise custom_exception.DipwInputError(f"Completion needs at least n + d + 1 = {graph.n + d + 1} vertices.")
    if total * d % 2:
        raise custom_exception.DipwInputError(f"No {d}-regular graph has {total} vertices, N·d is odd.")


def _saturate(graph: UGraph, d: int) -> typing.List[int]:
    """
    Greedily adds edges in index order while both endpoints have degree below <d>. Afterwards the vertices of degree
    below <d> are pairwise adjacent.
    """
    adjacency = [graph.neighbors_mask(v) for v in range(graph.n)]
    for u in range(graph.n):
        for v in range(u + 1, graph.n):
            if adjacency[u].bit_count() >= d:
                break
            if not (adjacency[u] >> v) & 1 and adjacency[v].bit_count() < d:
                adjacency[u] |= 1 << v
                adjacency[v] |= 1 << u
    return adjacency


def regular_completion(graph: UGraph, d: int, total: int) -> UGraph:
    """
    Completes <graph> into a d-regular graph on <total> vertices. Vertices `0..n-1` of the result are the vertices of
    <graph>; the added vertices are `n..total-1`. The construction is deterministic:
        1. the graph is saturated greedily in index order, so deficient vertices form a clique of at most `d` vertices,
        2. each deficient vertex is joined to its missing number of added vertices, assigned round-robin, which keeps
           the load of added vertices within one of each other and below `d`,
        3. the added vertices are completed among themselves by a Havel-Hakimi realization of their residual degrees.

    Args:
        graph (UGraph): Graph of maximum degree at most <d>.
        d (int): Target degree.
        total (int): Vertex count `N` of the result, `N >= n + d + 1` and `N·d` even.

    Returns (UGraph): d-regular supergraph of <graph>.

    Exceptions:
        DipwInputError: If the degree bound or the requirements on <total> are violated.
    """
    _require_completable(graph, d, total)

    n = graph.n
    added = total - n
    adjacency = _saturate(graph, d)
    edges = [(u, v) for u in range(n) for v in vs.iter_members(adjacency[u]) if u < v]

    load = [0] * added
    cursor = 0
    for v in range(n):
        for _ in range(d - adjacency[v].bit_count()):
            edges.append((v, n + cursor))
            load[cursor] += 1
            cursor = (cursor + 1) % added

    residual = [d - value for value in load]
    if not nx.is_graphical(residual):
        raise custom_exception.InvariantViolationError(f"Residual degrees `{residual}` are not graphical.")
    # networkx numbers the realization by position in a non-increasing sequence, zero degrees last
    order = sorted(range(added), key=lambda i: (-residual[i], i))
    realization = nx.havel_hakimi_graph([residual[i] for i in order])
    for position in range(added):
        if realization.degree(position) != residual[order[position]]:
            raise custom_exception.InvariantViolationError(
                f"Added vertex {n + order[position]} realized degree {realization.degree(position)}, "
                f"expected {residual[order[position]]}."
            )
    edges.extend((n + order[u], n + order[v]) for u, v in realization.edges())

    completion = UGraph(total, edges)
    if any(completion.degree(v) != d for v in range(total)):
        raise custom_exception.InvariantViolationError(f"Completion on {total} vertices is not {d}-regular.")
    if any(not completion.has_edge(u, v) for u, v in graph.edges()):
        raise custom_exception.InvariantViolationError("Completion lost an edge of the completed graph.")
    _logger.debug("Completed graph on %d vertices to a %d-regular graph on %d vertices", n, d, total)
    return completion
