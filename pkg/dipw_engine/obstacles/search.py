"""
Best-effort searches for obstacle certificates. A found certificate always passes its verifier; not finding one
says nothing about the pathwidth.
"""

import logging
import typing
import networkx as nx
import numpy as np
from shared import custom_exception
from shared import param_validators as shared_param_val
from dipw_engine.digraph import vertex_set as vs
from dipw_engine.digraph.digraph import Digraph, require_semicomplete
from dipw_engine.obstacles import verifiers
from dipw_engine.obstacles.certificates import DegreeTangle, MatchingTangle, Spider, SpiderLeg


_logger = logging.getLogger(__name__)


def find_degree_tangle(graph: Digraph, k: int) -> typing.Optional[DegreeTangle]:
    """
    Finds the largest degree tangle of window width <k>: a sliding window `[d, d + k]` over the sorted out-degrees,
    the lowest `d` wins ties.

    Args:
        graph (Digraph): Semicomplete digraph.
        k (int): Window width.

    Returns (typing.Optional[DegreeTangle]): Largest tangle, `None` for the empty digraph.

    Exceptions:
        DipwInputError: If <graph> is not semicomplete.
    """
    require_semicomplete(graph)
    shared_param_val.non_negative_int_check(k, "k")
    if graph.n == 0:
        return None

    degrees = np.sort(graph.out_degrees())
    window_ends = np.searchsorted(degrees, degrees + k, side="right")
    start = int(np.argmax(window_ends - np.arange(graph.n)))
    d = int(degrees[start])
    members = np.flatnonzero((graph.out_degrees() >= d) & (graph.out_degrees() <= d + k))
    return DegreeTangle(d=d, l=len(members), k=k, t=tuple(int(v) for v in members))


def find_matching_tangle(graph: Digraph, d: int, k: int) -> typing.Optional[MatchingTangle]:
    """
    Finds a maximum matching tangle with thresholds <d> and <k>: a maximum bipartite matching (Hopcroft-Karp) between
    `V_out^{<=d}` and `V_out^{>=d+k+1}` along edges from the low to the high side.

    Args:
        graph (Digraph): Semicomplete digraph.
        d (int): Out-degree threshold of the low side.
        k (int): Out-degree gap.

    Returns (typing.Optional[MatchingTangle]): Tangle, `None` if no edge goes from the low to the high side.

    Exceptions:
        DipwInputError: If <graph> is not semicomplete.
    """
    require_semicomplete(graph)
    shared_param_val.non_negative_int_check(d, "d")
    shared_param_val.non_negative_int_check(k, "k")

    low = verifiers.out_degree_at_most(graph, d)
    high = verifiers.out_degree_at_least(graph, d + k + 1)
    bipartite = nx.Graph()
    bipartite.add_nodes_from(vs.iter_members(low))
    bipartite.add_nodes_from(vs.iter_members(high))
    bipartite.add_edges_from((u, v) for u in vs.iter_members(low) for v in vs.iter_members(graph.out_mask(u) & high))
    if bipartite.number_of_edges() == 0:
        return None

    matching = nx.bipartite.hopcroft_karp_matching(bipartite, top_nodes=vs.members(low))
    phi = tuple(sorted((u, matching[u]) for u in vs.iter_members(low) if u in matching))
    return MatchingTangle(d=d, l=len(phi), k=k, phi=phi)


def best_matching_tangle(graph: Digraph, k: int) -> typing.Optional[MatchingTangle]:
    """
    Runs <find_matching_tangle()> for every threshold `d` and keeps the largest tangle, the lowest `d` wins ties.

    Args:
        graph (Digraph): Semicomplete digraph.
        k (int): Out-degree gap.

    Returns (typing.Optional[MatchingTangle]): Largest tangle or `None`.
    """
    best = None
    for d in range(graph.n):
        tangle = find_matching_tangle(graph, d, k)
        if tangle is not None and (best is None or tangle.l > best.l):
            best = tangle
    return best


def _spider_legs(graph: Digraph, candidates: vs.VertexSet, d: int, w: int) -> typing.List[SpiderLeg]:
    low = verifiers.out_degree_at_most(graph, d)
    high = verifiers.out_degree_at_least(graph, d + w)
    return [
        SpiderLeg(
            v=v,
            left=tuple(vs.members(low & graph.in_mask(v))),
            right=tuple(vs.members(high & graph.out_mask(v))),
        )
        for v in vs.iter_members(candidates)
    ]


def find_spider(graph: Digraph, l: int, w: int) -> typing.Optional[Spider]:
    """
    Scans thresholds `d = 0, 1, ...` and for each takes `L_v = V_out^{<=d} ∩ N-(v)` and `R_v = V_out^{>=d+w} ∩ N+(v)`.
    The first threshold where at least <l> vertices have both sets of size `>= 3l` gives the spider.

    Args:
        graph (Digraph): Semicomplete digraph.
        l (int): Size parameter, positive.
        w (int): Out-degree gap, positive.

    Returns (typing.Optional[Spider]): `(d, l, w)`-spider or `None`.

    Exceptions:
        DipwInputError: If <graph> is not semicomplete or a parameter is not positive.
    """
    require_semicomplete(graph)
    if l <= 0 or w <= 0:
        raise custom_exception.DipwInputError(f"Spider parameters have to be positive, l = {l} and w = {w} given.")

    for d in range(graph.n):
        legs = [
            leg
            for leg in _spider_legs(graph, graph.vertices, d, w)
            if len(leg.left) >= 3 * l and len(leg.right) >= 3 * l
        ]
        if len(legs) >= l:
            return Spider(d=d, l=l, w=w, legs=tuple(legs))
    return None


def split_degree_tangle(
    graph: Digraph, tangle: DegreeTangle, pw_upper: int
) -> typing.Union[DegreeTangle, Spider]:
    """
    Turns a `(2l, w)`-degree tangle into a tame `(l, w)`-degree tangle or an `(l, w)`-spider. Vertices of wildness at
    most `3l + w + 2pw` are tame; if at least `l` of them exist, `l` of them form the tame tangle. Otherwise the wild
    ones carry a spider with `L_v = V_out^{<=d} ∩ N-(v)` and `R_v = V_out^{>=d+w} ∩ N+(v)`.

    Args:
        graph (Digraph): Semicomplete digraph.
        tangle (DegreeTangle): Valid degree tangle with `l >= 2` and `k >= 1`.
        pw_upper (int): Upper bound on the pathwidth of <graph>.

    Returns (typing.Union[DegreeTangle, Spider]): Tame tangle or spider, both valid.

    Exceptions:
        DipwInputError: If <tangle> is invalid or too small to split.
    """
    verdict = verifiers.verify_degree_tangle(graph, tangle)
    if not verdict.valid:
        raise custom_exception.DipwInputError(f"Degree tangle is invalid: {verdict.violation}.")
    half = tangle.l // 2
    if half < 1 or tangle.k < 1:
        raise custom_exception.DipwInputError("Splitting needs a degree tangle with l >= 2 and k >= 1.")

    threshold = 3 * half + tangle.k + 2 * pw_upper
    tame = [v for v in tangle.t if verifiers.wildness(graph, v) <= threshold]
    if len(tame) >= half:
        return DegreeTangle(d=tangle.d, l=half, k=tangle.k, t=tuple(sorted(tame)[:half]))

    wild = vs.from_iterable(v for v in tangle.t if v not in tame)
    spider = Spider(d=tangle.d, l=half, w=tangle.k, legs=tuple(_spider_legs(graph, wild, tangle.d, tangle.k)))
    spider_verdict = verifiers.verify_spider(graph, spider)
    if not spider_verdict.valid:
        raise custom_exception.DipwInputError(
            f"Wild vertices of a degree tangle gave an invalid spider ({spider_verdict.violation}); "
            f"is {pw_upper} really an upper bound on the pathwidth?"
        )
    _logger.debug("Degree tangle of size %d split into a spider with %d legs", tangle.l, len(spider.legs))
    return spider
