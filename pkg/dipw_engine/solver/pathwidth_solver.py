"""
Recursive *pathwidth solver*. For a digraph `G` and a k-admissible pair `(S, T)` it computes a gapless, tight `S-T`
chain of order at most `k` or refuses, and refusal is correct: no such chain exists. Solving `(∅, ∅)` therefore
decides whether `pw(G) <= k` and yields a path-decomposition on success.

Every instance falls into one of three cases:
    - base: at most `k + 1` vertices lie outside `S ∪ T`, a chain is built directly,
    - divide: a non-trivial minimum `S-T` separation `(X, Y)` exists, `(S, Y \\ X)` and `(X \\ Y, T)` are solved and
      glued at `(X, Y)`,
    - branch: every minimum separation is trivial, so `S` and/or `T` is extended by a single vertex in every admissible
      way.

The potential `μ` strictly decreases along every recursion edge and `γ` never decreases (strictly increases on
branching). Both are checked at runtime and a failure raises <InvariantViolationError>.
"""

import contextlib
import logging
import sys
import typing
from shared import custom_exception
from shared import param_validators as shared_param_val
from dipw_engine.digraph import vertex_set as vs
from dipw_engine.digraph.digraph import Digraph
from dipw_engine.separations import min_separation
from dipw_engine.separations.decomposition import PathDecomposition, chain_to_decomposition, validate_decomposition
from dipw_engine.separations.separation import (
    Separation,
    SeparationChain,
    chain_predicates,
    leftmost_trivial,
    pad_to_tight,
    rightmost_trivial,
)
from dipw_engine.solver.instance import Instance, SolveStats, require_admissible


_logger = logging.getLogger(__name__)

Pair = typing.Tuple[vs.VertexSet, vs.VertexSet]


@contextlib.contextmanager
def _recursion_headroom(n: int) -> typing.Iterator[None]:
    # recursion depth is bounded by μ(∅, ∅) = 2n, with a few frames per level
    previous = sys.getrecursionlimit()
    sys.setrecursionlimit(max(previous, 8 * n + 1000))
    try:
        yield
    finally:
        sys.setrecursionlimit(previous)


def base_case_chain(graph: Digraph, instance: Instance) -> SeparationChain:
    """
    Builds a gapless `S-T` chain of order at most `k` for a k-admissible `(S, T)` with `|V \\ (S ∪ T)| <= k + 1`.

    While the middle `V \\ (S ∪ T)` differs from `N+(S)` or from `N-(T)`, the lowest middle vertex outside `N+(S)` is
    moved into `T` (the separation `(V \\ T, N-[T])` of the old `T` is kept for the end of the chain), or else the
    lowest middle vertex outside `N-(T)` is moved into `S` (the separation `(N+[S], V \\ S)` of the old `S` is kept for
    the start). Each move keeps the pair admissible. Once the middle equals `N+(S) = N-(T)`, the single separation
    `(N+[S], N-[T])` joins both kept sequences.

    Args:
        graph (Digraph): Digraph.
        instance (Instance): k-admissible instance with a small middle.

    Returns (SeparationChain): Gapless `S-T` chain of order at most <instance.k>.

    Exceptions:
        DipwInputError: If <instance> is not admissible or its middle has more than `k + 1` vertices.
    """
    require_admissible(graph, instance)
    everything = graph.vertices
    middle = everything & ~(instance.s | instance.t)
    if middle.bit_count() > instance.k + 1:
        raise custom_exception.DipwInputError(
            f"Base case needs at most {instance.k + 1} vertices outside S ∪ T, {middle.bit_count()} were given."
        )

    s, t = instance.s, instance.t
    head: typing.List[Separation] = []
    tail: typing.List[Separation] = []
    while True:
        middle = everything & ~(s | t)
        s_frontier = graph.closed_out_neighborhood(s) & ~s
        t_frontier = graph.closed_in_neighborhood(t) & ~t
        if middle == s_frontier == t_frontier:
            break
        if middle & ~s_frontier:
            tail.append(rightmost_trivial(graph, t))
            t |= 1 << vs.lowest(middle & ~s_frontier)
        else:
            head.append(leftmost_trivial(graph, s))
            s |= 1 << vs.lowest(middle & ~t_frontier)

    core = Separation(graph.closed_out_neighborhood(s), graph.closed_in_neighborhood(t))
    return SeparationChain(tuple(head) + (core,) + tuple(reversed(tail)))


class PathwidthSolver:
    """
    Solver of `(S, T)` instances for a fixed digraph and width. Statistics accumulate over all
    <solve_instance()> calls of one object.

    Attributes:
        _graph (Digraph): Digraph.
        _k (int): Width parameter.
        _memoize (bool): Remember refused instances.
        _refused (typing.Set[Pair]): Refused `(S, T)` pairs, filled only when <_memoize> is set.
        _stats (SolveStats): Collected statistics.
    """

    def __init__(self, graph: Digraph, k: int, memoize: bool = False):
        shared_param_val.type_check(graph, Digraph)
        shared_param_val.non_negative_int_check(k, "k")
        shared_param_val.type_check(memoize, bool)

        self._graph = graph
        self._k = k
        self._memoize = memoize
        self._refused: typing.Set[Pair] = set()
        self._stats = SolveStats()

    @property
    def stats(self) -> SolveStats:
        return self._stats

    def solve_instance(self, s: vs.VertexSetLike, t: vs.VertexSetLike) -> typing.Optional[SeparationChain]:
        """
        Solves the instance `(S, T)`.

        Args:
            s (vs.VertexSetLike): Set `S`.
            t (vs.VertexSetLike): Set `T`.

        Returns (typing.Optional[SeparationChain]): Gapless tight `S-T` chain of order at most `k`, `None` if none
            exists.

        Exceptions:
            DipwInputError: If `(S, T)` is not k-admissible.
        """
        s_mask = vs.as_vertex_set(s, self._graph.n)
        t_mask = vs.as_vertex_set(t, self._graph.n)
        require_admissible(self._graph, Instance(s_mask, t_mask, self._k))

        with _recursion_headroom(self._graph.n):
            chain = self._solve(s_mask, t_mask, 0, 0)
        if chain is not None:
            report = chain_predicates(self._graph, chain, s_mask, t_mask)
            if not (report.is_st_chain and report.is_gapless and report.is_tight and report.order <= self._k):
                raise custom_exception.InvariantViolationError(f"Solver returned an invalid chain: {report}.")
        return chain

    def _trace(
        self,
        s: vs.VertexSet,
        t: vs.VertexSet,
        action: str,
        gamma_value: typing.Optional[min_separation.Gamma] = None,
        mu_value: typing.Optional[int] = None,
    ) -> None:
        if not _logger.isEnabledFor(logging.DEBUG):
            return
        if gamma_value is None:
            gamma_value = min_separation.gamma(self._graph, s, t)
        if mu_value is None:
            mu_value = min_separation.mu(self._graph, s, t)
        _logger.debug(
            "S={%s} T={%s} gamma=%s mu=%s action=%s",
            vs.format_members(s),
            vs.format_members(t),
            gamma_value,
            mu_value,
            action,
        )

    def _solve(
        self, s: vs.VertexSet, t: vs.VertexSet, depth: int, gamma_floor: min_separation.Gamma
    ) -> typing.Optional[SeparationChain]:
        graph = self._graph
        self._stats.max_depth = max(self._stats.max_depth, depth)

        middle = graph.vertices & ~(s | t)
        if middle.bit_count() <= self._k + 1:
            self._stats.base_count += 1
            self._trace(s, t, "base")
            return pad_to_tight(graph, base_case_chain(graph, Instance(s, t, self._k)), s, t)

        if self._memoize and (s, t) in self._refused:
            self._stats.memo_hits += 1
            self._trace(s, t, "memo-hit")
            return None

        self._stats.instance_count += 1
        found = min_separation.min_st_separation(graph, s, t)
        if found is None:
            raise custom_exception.InvariantViolationError("Admissible instance has no S-T separation.")
        gamma_value = found[1]
        if gamma_value < gamma_floor:
            raise custom_exception.InvariantViolationError(
                f"Minimum separation order dropped to {gamma_value} below {gamma_floor} at depth {depth}."
            )
        mu_value = min_separation.mu(graph, s, t)

        split = min_separation.find_nontrivial_min_separation(graph, s, t)
        if split is not None:
            self._trace(s, t, "divide", gamma_value, mu_value)
            chain = self._divide(s, t, split, depth, gamma_value, mu_value)
        else:
            chain = self._branch(s, t, depth, gamma_value, mu_value)

        if chain is None:
            self._trace(s, t, "refuse", gamma_value, mu_value)
            if self._memoize:
                self._refused.add((s, t))
        return chain

    def _divide(
        self,
        s: vs.VertexSet,
        t: vs.VertexSet,
        split: Separation,
        depth: int,
        gamma_value: int,
        mu_value: int,
    ) -> typing.Optional[SeparationChain]:
        # pylint: disable=too-many-arguments
        graph = self._graph
        left_t = split.b_only
        right_s = split.a_only
        left_mu = min_separation.mu(graph, s, left_t)
        right_mu = min_separation.mu(graph, right_s, t)
        if left_mu + right_mu != mu_value or min(left_mu, right_mu) < 1:
            raise custom_exception.InvariantViolationError(
                f"Split at {split} gives potentials {left_mu} + {right_mu}, expected two positive parts of {mu_value}."
            )
        self._stats.divide_count += 1
        self._stats.divide_checks += 1

        left = self._solve(s, left_t, depth + 1, gamma_value)
        if left is None:
            return None
        right = self._solve(right_s, t, depth + 1, gamma_value)
        if right is None:
            return None
        return pad_to_tight(graph, left + split + right, s, t)

    def _extensions(
        self, side: vs.VertexSet, candidates: vs.VertexSet, degree: typing.Callable[[vs.VertexSet], int]
    ) -> typing.List[int]:
        scored = []
        for v in vs.iter_members(candidates):
            value = degree(side | (1 << v))
            if value <= self._k:
                scored.append((value, v))
        return [v for _, v in sorted(scored)]

    def _children(self, s: vs.VertexSet, t: vs.VertexSet, gamma_value: int) -> typing.Tuple[str, typing.List[Pair]]:
        graph = self._graph
        middle = graph.vertices & ~(s | t)
        left_is_minimum = graph.d_plus(s) == gamma_value
        right_is_minimum = graph.d_minus(t) == gamma_value

        s_extensions = []
        if left_is_minimum:
            s_extensions = self._extensions(s, middle & ~graph.closed_in_neighborhood(t), graph.d_plus)
            self._stats.max_fanout_s = max(self._stats.max_fanout_s, len(s_extensions))
        t_extensions = []
        if right_is_minimum:
            t_extensions = self._extensions(t, middle & ~graph.closed_out_neighborhood(s), graph.d_minus)
            self._stats.max_fanout_t = max(self._stats.max_fanout_t, len(t_extensions))

        if left_is_minimum and right_is_minimum:
            pairs = [
                (s | (1 << u), t | (1 << v))
                for u in s_extensions
                for v in t_extensions
                if u != v and not graph.has_edge(u, v)
            ]
            return "branch-both", pairs
        if left_is_minimum:
            return "branch-s", [(s | (1 << u), t) for u in s_extensions]
        if right_is_minimum:
            return "branch-t", [(s, t | (1 << v)) for v in t_extensions]
        raise custom_exception.InvariantViolationError(
            f"No trivial separation has the minimum order {gamma_value}, yet no non-trivial one was found."
        )

    def _branch(
        self, s: vs.VertexSet, t: vs.VertexSet, depth: int, gamma_value: int, mu_value: int
    ) -> typing.Optional[SeparationChain]:
        # pylint: disable=too-many-arguments
        graph = self._graph
        action, children = self._children(s, t, gamma_value)
        self._trace(s, t, action, gamma_value, mu_value)
        self._stats.branch_count += 1

        for child_s, child_t in children:
            child_mu = min_separation.mu(graph, child_s, child_t)
            if child_mu >= mu_value:
                raise custom_exception.InvariantViolationError(
                    f"Branching from potential {mu_value} produced a child of potential {child_mu}."
                )
            chain = self._solve(child_s, child_t, depth + 1, gamma_value + 1)
            if chain is not None:
                return pad_to_tight(graph, chain, s, t)
        return None


def solve_instance(graph: Digraph, instance: Instance, memoize: bool = False) -> typing.Optional[SeparationChain]:
    """
    Computes a gapless tight `S-T` chain of order at most `k` for a k-admissible <instance>.

    Args:
        graph (Digraph): Digraph.
        instance (Instance): k-admissible instance.
        memoize (bool): Remember refused sub-instances.

    Returns (typing.Optional[SeparationChain]): Chain, `None` if no gapless `S-T` chain of order at most `k` exists.

    Exceptions:
        DipwInputError: If <instance> is not k-admissible.
    """
    shared_param_val.type_check(instance, Instance)
    return PathwidthSolver(graph, instance.k, memoize).solve_instance(instance.s, instance.t)


def solve(
    graph: Digraph, k: int, memoize: bool = False
) -> typing.Tuple[typing.Optional[PathDecomposition], SolveStats]:
    """
    Decides whether `pw(G) <= k`.

    Args:
        graph (Digraph): Digraph.
        k (int): Width parameter, `0` allowed.
        memoize (bool): Remember refused sub-instances.

    Returns (typing.Tuple[typing.Optional[PathDecomposition], SolveStats]): Path-decomposition of width at most <k>
        (`None` iff the pathwidth exceeds <k>) and the solver statistics.
    """
    solver = PathwidthSolver(graph, k, memoize)
    chain = solver.solve_instance(vs.EMPTY, vs.EMPTY)
    if chain is None:
        return None, solver.stats

    decomposition = chain_to_decomposition(graph, chain)
    report = validate_decomposition(graph, decomposition)
    if not report.valid or report.width > k:
        raise custom_exception.InvariantViolationError(
            f"Solver decomposition fails validation for k = {k}: {report.violation or f'width {report.width}'}."
        )
    return decomposition, solver.stats


def compute_pathwidth(graph: Digraph, memoize: bool = False) -> typing.Tuple[int, PathDecomposition]:
    """
    Computes the pathwidth by solving `k = 0, 1, 2, ...` until the first success.

    Args:
        graph (Digraph): Digraph.
        memoize (bool): Remember refused sub-instances.

    Returns (typing.Tuple[int, PathDecomposition]): Pathwidth and a path-decomposition of that width.
    """
    shared_param_val.type_check(graph, Digraph)
    k = 0
    while True:
        decomposition, stats = solve(graph, k, memoize)
        if decomposition is not None:
            return k, decomposition
        _logger.debug("k=%d refused after %d instances", k, stats.instance_count)
        k += 1
