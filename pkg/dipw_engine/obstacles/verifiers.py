"""
Verifiers of obstacle certificates and the degree based pathwidth lower bounds of semicomplete digraphs.

Notation: `V_out^{<=d}` is the set of vertices of out-degree at most `d`, `V_out^{>=d}` and `V_in^{>=d}` are defined
likewise. All bounds are proved for semicomplete digraphs only, so every verifier rejects other digraphs.
"""

import typing
import numpy as np
from shared import custom_exception
from shared import param_validators as shared_param_val
from shared import utils as shared_utils
from dipw_engine.digraph import vertex_set as vs
from dipw_engine.digraph.digraph import Digraph, require_semicomplete
from dipw_engine.obstacles.certificates import (
    Certificate,
    DegreeTangle,
    DisjointPaths,
    MatchingTangle,
    Spider,
    SpiderVerdict,
    Verdict,
)


def out_degree_at_most(graph: Digraph, d: int) -> vs.VertexSet:
    return vs.from_iterable(np.flatnonzero(graph.out_degrees() <= d).tolist())


def out_degree_at_least(graph: Digraph, d: int) -> vs.VertexSet:
    return vs.from_iterable(np.flatnonzero(graph.out_degrees() >= d).tolist())


def _distinct_in_range(graph: Digraph, vertices: typing.Sequence[int], label: str) -> typing.Optional[str]:
    if any(v < 0 or v >= graph.n for v in vertices):
        return f"{label} has vertices outside 0..{graph.n - 1}"
    if len(set(vertices)) != len(vertices):
        return f"{label} repeats a vertex"
    return None


def _invalid(violation: str) -> Verdict:
    return Verdict(valid=False, violation=violation)


def wildness(graph: Digraph, v: int) -> int:
    """
    Returns `wld(v) = |V_out^{<=d+(v)} \\ N+(v)|`, the number of vertices of out-degree at most `d+(v)` which are not
    out-neighbors of `v`. The vertex `v` itself is counted, so the value is at least one.

    Args:
        graph (Digraph): Digraph.
        v (int): Vertex.

    Returns (int): Wildness of <v>.
    """
    shared_param_val.type_check(graph, Digraph)
    shared_param_val.parameter_value_in_range(v, 0, graph.n - 1, label="v")
    return (out_degree_at_most(graph, graph.out_degree(v)) & ~graph.out_mask(v)).bit_count()


def verify_degree_tangle(graph: Digraph, tangle: DegreeTangle) -> Verdict:
    """
    Verifies a `(d, l, k)`-degree tangle. A valid one implies `pw >= (l - k - 1) / 2`.

    Args:
        graph (Digraph): Semicomplete digraph.
        tangle (DegreeTangle): Certificate.

    Returns (Verdict): Lower bound `max(0, ⌈(l - k - 1) / 2⌉)` or the first violation.

    Exceptions:
        DipwInputError: If <graph> is not semicomplete.
    """
    shared_param_val.type_check(tangle, DegreeTangle)
    require_semicomplete(graph)

    if tangle.d < 0 or tangle.k < 0 or tangle.l <= 0:
        return _invalid("parameters need d >= 0, k >= 0 and l > 0")
    defect = _distinct_in_range(graph, tangle.t, "T")
    if defect:
        return _invalid(defect)
    if len(tangle.t) != tangle.l:
        return _invalid(f"|T| = {len(tangle.t)} differs from l = {tangle.l}")
    for v in tangle.t:
        degree = graph.out_degree(v)
        if not tangle.d <= degree <= tangle.d + tangle.k:
            return _invalid(f"vertex {v} has out-degree {degree} outside [{tangle.d}, {tangle.d + tangle.k}]")
    return Verdict(valid=True, lower_bound=max(0, shared_utils.ceil_div(tangle.l - tangle.k - 1, 2)))


def verify_matching_tangle(graph: Digraph, tangle: MatchingTangle) -> Verdict:
    """
    Verifies a `(d, l, k)`-matching tangle. A valid one implies `pw >= min{l, k + 1}`.

    Args:
        graph (Digraph): Semicomplete digraph.
        tangle (MatchingTangle): Certificate.

    Returns (Verdict): Lower bound or the first violation.

    Exceptions:
        DipwInputError: If <graph> is not semicomplete.
    """
    shared_param_val.type_check(tangle, MatchingTangle)
    require_semicomplete(graph)

    if tangle.d < 0 or tangle.k < 0 or tangle.l <= 0:
        return _invalid("parameters need d >= 0, k >= 0 and l > 0")
    for label, side in (("T1", tangle.t1), ("T2", tangle.t2)):
        defect = _distinct_in_range(graph, side, label)
        if defect:
            return _invalid(defect)
    if len(tangle.phi) != tangle.l:
        return _invalid(f"matching has {len(tangle.phi)} edges, l = {tangle.l}")
    for u, v in tangle.phi:
        if graph.out_degree(u) > tangle.d:
            return _invalid(f"vertex {u} of T1 has out-degree {graph.out_degree(u)} above {tangle.d}")
        if graph.out_degree(v) < tangle.d + tangle.k + 1:
            return _invalid(f"vertex {v} of T2 has out-degree {graph.out_degree(v)} below {tangle.d + tangle.k + 1}")
        if not graph.has_edge(u, v):
            return _invalid(f"matching pair {u} -> {v} is not an edge")
    return Verdict(valid=True, lower_bound=min(tangle.l, tangle.k + 1))


def verify_spider(graph: Digraph, spider: Spider) -> SpiderVerdict:
    """
    Verifies a `(d, l, w)`-spider. Picking, for `l` body vertices `v`, disjoint triples `l_v -> v -> r_v` with
    `l_v ∈ L_v` and `r_v ∈ R_v` yields `l` disjoint paths from `V_out^{<=d}` to `V_out^{>=d+w}`, hence the bound
    `min{l, w}`.

    Args:
        graph (Digraph): Semicomplete digraph.
        spider (Spider): Certificate.

    Returns (SpiderVerdict): Lower bound `min{l, w}` or the first violation.

    Exceptions:
        DipwInputError: If <graph> is not semicomplete.
    """
    shared_param_val.type_check(spider, Spider)
    require_semicomplete(graph)

    if spider.d < 0 or spider.l <= 0 or spider.w <= 0:
        return SpiderVerdict(valid=False, violation="parameters need d >= 0, l > 0 and w > 0")
    defect = _distinct_in_range(graph, spider.t, "T")
    if defect:
        return SpiderVerdict(valid=False, violation=defect)
    if len(spider.legs) < spider.l:
        return SpiderVerdict(valid=False, violation=f"|T| = {len(spider.legs)} is below l = {spider.l}")

    low = out_degree_at_most(graph, spider.d)
    high = out_degree_at_least(graph, spider.d + spider.w)
    for leg in spider.legs:
        for label, side, neighbors, allowed in (
            ("L", leg.left, graph.in_mask(leg.v), low),
            ("R", leg.right, graph.out_mask(leg.v), high),
        ):
            defect = _distinct_in_range(graph, side, f"{label}_{leg.v}")
            if defect:
                return SpiderVerdict(valid=False, violation=defect)
            side_mask = vs.from_iterable(side)
            if len(side) < 3 * spider.l:
                return SpiderVerdict(valid=False, violation=f"|{label}_{leg.v}| = {len(side)} is below 3l")
            if not vs.is_subset(side_mask, neighbors):
                return SpiderVerdict(valid=False, violation=f"{label}_{leg.v} is not within the neighbors of {leg.v}")
            if not vs.is_subset(side_mask, allowed):
                return SpiderVerdict(valid=False, violation=f"{label}_{leg.v} has a vertex of wrong out-degree")

    bound = min(spider.l, spider.w)
    return SpiderVerdict(valid=True, lower_bound=bound, stated_bound=bound + 1)


def verify_disjoint_paths(graph: Digraph, certificate: DisjointPaths) -> Verdict:
    """
    Verifies `l` pairwise vertex-disjoint directed paths from `V_out^{<=d}` to `V_out^{>=d+k}`. A valid certificate
    implies `pw >= min{l, k}`.

    Args:
        graph (Digraph): Semicomplete digraph.
        certificate (DisjointPaths): Certificate.

    Returns (Verdict): Lower bound or the first violation.

    Exceptions:
        DipwInputError: If <graph> is not semicomplete.
    """
    shared_param_val.type_check(certificate, DisjointPaths)
    require_semicomplete(graph)

    if certificate.d < 0 or certificate.k < 0:
        return _invalid("parameters need d >= 0 and k >= 0")
    used = vs.EMPTY
    for index, path in enumerate(certificate.paths):
        if not path:
            return _invalid(f"path {index} is empty")
        defect = _distinct_in_range(graph, path, f"path {index}")
        if defect:
            return _invalid(defect)
        mask = vs.from_iterable(path)
        if mask & used:
            return _invalid(f"path {index} shares a vertex with an earlier path")
        used |= mask
        for tail, head in zip(path, path[1:]):
            if not graph.has_edge(tail, head):
                return _invalid(f"path {index} uses the missing edge {tail} -> {head}")
        if graph.out_degree(path[0]) > certificate.d:
            return _invalid(f"path {index} starts at out-degree {graph.out_degree(path[0])} above {certificate.d}")
        if graph.out_degree(path[-1]) < certificate.d + certificate.k:
            return _invalid(f"path {index} ends at out-degree {graph.out_degree(path[-1])} below d + k")
    return Verdict(valid=True, lower_bound=min(len(certificate.paths), certificate.k))


def verify_certificate(graph: Digraph, certificate: Certificate) -> Verdict:
    """
    Dispatches <certificate> to its verifier.

    Args:
        graph (Digraph): Semicomplete digraph.
        certificate (Certificate): Any certificate.

    Returns (Verdict): Verdict of the matching verifier.
    """
    if isinstance(certificate, DegreeTangle):
        return verify_degree_tangle(graph, certificate)
    if isinstance(certificate, MatchingTangle):
        return verify_matching_tangle(graph, certificate)
    if isinstance(certificate, Spider):
        return verify_spider(graph, certificate)
    shared_param_val.type_check(certificate, DisjointPaths)
    return verify_disjoint_paths(graph, certificate)


def _low_side_tame(graph: Digraph, u: int, d: int, l: int, w: int, pw_upper: int) -> bool:
    # pylint: disable=too-many-arguments
    return wildness(graph, u) <= 3 * l + d + w - graph.out_degree(u) + 2 * pw_upper


def _high_side_tame(graph: Digraph, u: int, d: int, l: int, pw_upper: int) -> bool:
    # pylint: disable=too-many-arguments
    return wildness(graph, u) <= 3 * l + graph.out_degree(u) - d + 2 * pw_upper


def verify_tameness(graph: Digraph, certificate: Certificate, pw_upper: int) -> bool:
    """
    Checks tameness of a tangle or spider, with `pw(G)` in the thresholds replaced by <pw_upper>. Thresholds grow with
    the pathwidth, so a certificate tame for the true pathwidth is tame for any upper bound.

        - degree tangle: `wld(v) <= 3l + k + 2pw` for every `v ∈ T`,
        - matching tangle: `wld(v) <= 3l + d + k - d+(v) + 2pw` on `T1` and `wld(v) <= 3l + d+(v) - d + 2pw` on `T2`,
        - spider: every `L_v` and `R_v` has at least `2l` tame vertices, tameness of their members being the matching
          tangle conditions with `w` in place of `k`.

    Args:
        graph (Digraph): Semicomplete digraph.
        certificate (Certificate): Degree tangle, matching tangle or spider.
        pw_upper (int): Upper bound on the pathwidth of <graph>.

    Returns (bool): True iff tame.

    Exceptions:
        DipwInputError: For disjoint-path certificates, which have no tameness notion.
    """
    shared_param_val.type_check(graph, Digraph)
    shared_param_val.non_negative_int_check(pw_upper, "pw_upper")

    if isinstance(certificate, DegreeTangle):
        threshold = 3 * certificate.l + certificate.k + 2 * pw_upper
        return all(wildness(graph, v) <= threshold for v in certificate.t)
    if isinstance(certificate, MatchingTangle):
        d, l, k = certificate.d, certificate.l, certificate.k
        return all(_low_side_tame(graph, u, d, l, k, pw_upper) for u in certificate.t1) and all(
            _high_side_tame(graph, v, d, l, pw_upper) for v in certificate.t2
        )
    if isinstance(certificate, Spider):
        d, l, w = certificate.d, certificate.l, certificate.w
        for leg in certificate.legs:
            tame_left = sum(_low_side_tame(graph, u, d, l, w, pw_upper) for u in leg.left)
            tame_right = sum(_high_side_tame(graph, u, d, l, pw_upper) for u in leg.right)
            if tame_left < 2 * l or tame_right < 2 * l:
                return False
        return True
    raise custom_exception.DipwInputError(f"Tameness is not defined for `{type(certificate).__name__}`.")


def degree_interval_counts(graph: Digraph) -> np.ndarray:
    """
    Tabulates `|V_out^{>=d1} ∩ V_in^{>=d2}|` for all `0 <= d1, d2 <= n`.

    Args:
        graph (Digraph): Digraph.

    Returns (np.ndarray): Array of shape `(n + 1, n + 1)` indexed by `[d1, d2]`.
    """
    shared_param_val.type_check(graph, Digraph)
    histogram = np.zeros((graph.n + 1, graph.n + 1), dtype=np.int64)
    np.add.at(histogram, (graph.out_degrees(), graph.in_degrees()), 1)
    return histogram[::-1, ::-1].cumsum(axis=0).cumsum(axis=1)[::-1, ::-1]


def degree_interval_lower_bound(graph: Digraph) -> int:
    """
    For a semicomplete digraph and `d1 + d2 < n`, `|V_out^{>=d1} ∩ V_in^{>=d2}| <= n - (d1 + d2) + 2pw`. The
    rearranged inequality, maximized over all such pairs, is a lower bound on the pathwidth.

    Args:
        graph (Digraph): Semicomplete digraph.

    Returns (int): `max(0, max ⌈(|V_out^{>=d1} ∩ V_in^{>=d2}| - n + d1 + d2) / 2⌉)`.

    Exceptions:
        DipwInputError: If <graph> is not semicomplete.
    """
    require_semicomplete(graph)
    n = graph.n
    if n == 0:
        return 0
    counts = degree_interval_counts(graph)
    d1, d2 = np.meshgrid(np.arange(n + 1), np.arange(n + 1), indexing="ij")
    slack = np.where(d1 + d2 < n, counts - n + d1 + d2, 0)
    return max(0, shared_utils.ceil_div(int(slack.max()), 2))
