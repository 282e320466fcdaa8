"""
Problem instances of the pathwidth recursion and the statistics collected while solving them.
"""

from __future__ import annotations  # allowing future references -> return class under which return value is returned
import dataclasses
import typing
from shared import custom_exception
from shared import param_validators as shared_param_val
from dipw_engine.digraph import vertex_set as vs
from dipw_engine.digraph.digraph import Digraph


@dataclasses.dataclass(frozen=True)
class Instance:
    """
    Pair `(S, T)` with the width parameter `k`. The solver only accepts k-admissible instances: `N+[S] ∩ T = ∅`,
    `d+(S) <= k` and `d-(T) <= k`.

    Attributes:
        s (vs.VertexSet): Set `S`.
        t (vs.VertexSet): Set `T`.
        k (int): Width parameter.
    """

    s: vs.VertexSet
    t: vs.VertexSet
    k: int


def admissibility_defect(graph: Digraph, s: vs.VertexSet, t: vs.VertexSet, k: int) -> typing.Optional[str]:
    """
    Returns the first violated k-admissibility condition of `(S, T)`.

    Args:
        graph (Digraph): Digraph.
        s (vs.VertexSet): Set `S`.
        t (vs.VertexSet): Set `T`.
        k (int): Width parameter.

    Returns (typing.Optional[str]): Description of the violation, `None` for admissible pairs.
    """
    if graph.closed_out_neighborhood(s) & t:
        return "N+[S] meets T"
    if graph.d_plus(s) > k:
        return f"d+(S) = {graph.d_plus(s)} exceeds k = {k}"
    if graph.d_minus(t) > k:
        return f"d-(T) = {graph.d_minus(t)} exceeds k = {k}"
    return None


def is_admissible(graph: Digraph, s: vs.VertexSet, t: vs.VertexSet, k: int) -> bool:
    return admissibility_defect(graph, s, t, k) is None


def require_admissible(graph: Digraph, instance: Instance) -> None:
    """
    Validates <instance> against <graph>.

    Args:
        graph (Digraph): Digraph.
        instance (Instance): Checked instance.

    Returns (None):

    Exceptions:
        DipwInputError: On out-of-range vertices, negative `k` or a non-admissible pair.
    """
    shared_param_val.type_check(graph, Digraph)
    shared_param_val.type_check(instance, Instance)
    vs.as_vertex_set(instance.s, graph.n)
    vs.as_vertex_set(instance.t, graph.n)
    if instance.k < 0:
        raise custom_exception.DipwInputError(f"Parameter <k> has to be non-negative, `{instance.k}` was given.")
    defect = admissibility_defect(graph, instance.s, instance.t, instance.k)
    if defect is not None:
        raise custom_exception.DipwInputError(f"Instance is not {instance.k}-admissible: {defect}.")


@dataclasses.dataclass
class SolveStats:
    """
    Counters of one solver run. Two runs are merged with <merge()>, which is commutative and associative, so
    statistics of concurrently solved instances can be combined in any order.

    Attributes:
        instance_count (int): Instances outside the base case, the solved one included.
        base_count (int): Instances answered by the base case.
        max_depth (int): Deepest recursion level, the top instance is level `0`.
        divide_count (int): Divide-and-conquer steps.
        branch_count (int): Branching steps.
        max_fanout_s (int): Largest number of single-vertex extensions of `S` seen at a branching step.
        max_fanout_t (int): Largest number of single-vertex extensions of `T` seen at a branching step.
        divide_checks (int): Divide steps whose potential split was verified to be exact with both parts positive.
        memo_hits (int): Instances answered from the refusal memo.
    """

    # pylint: disable=too-many-instance-attributes
    # Plain counters, grouping them would only add indirection.

    instance_count: int = 0
    base_count: int = 0
    max_depth: int = 0
    divide_count: int = 0
    branch_count: int = 0
    max_fanout_s: int = 0
    max_fanout_t: int = 0
    divide_checks: int = 0
    memo_hits: int = 0

    def merge(self, other: SolveStats) -> SolveStats:
        """
        Combines two statistics: counters are summed and maxima are maximized.

        Args:
            other (SolveStats): Statistics of another run.

        Returns (SolveStats): New merged statistics.
        """
        shared_param_val.type_check(other, SolveStats)
        return SolveStats(
            instance_count=self.instance_count + other.instance_count,
            base_count=self.base_count + other.base_count,
            max_depth=max(self.max_depth, other.max_depth),
            divide_count=self.divide_count + other.divide_count,
            branch_count=self.branch_count + other.branch_count,
            max_fanout_s=max(self.max_fanout_s, other.max_fanout_s),
            max_fanout_t=max(self.max_fanout_t, other.max_fanout_t),
            divide_checks=self.divide_checks + other.divide_checks,
            memo_hits=self.memo_hits + other.memo_hits,
        )


def instance_count_bound(mu_prime_value: int, h: int, k: int, gamma_value: int = 0) -> int:
    """
    Upper bound `μ'(S, T) * (h + 2k + 1)^(2(k - γ(S, T)))` on the number of non-base instances the solver visits for
    an h-semicomplete digraph.

    Args:
        mu_prime_value (int): `μ'(S, T)` of the top instance.
        h (int): Non-neighbor bound of the digraph.
        k (int): Width parameter.
        gamma_value (int): `γ(S, T)` of the top instance.

    Returns (int): Bound on <SolveStats.instance_count>.
    """
    shared_param_val.non_negative_int_check(mu_prime_value, "mu_prime_value")
    shared_param_val.non_negative_int_check(h, "h")
    shared_param_val.non_negative_int_check(k, "k")
    return mu_prime_value * (h + 2 * k + 1) ** (2 * max(k - gamma_value, 0))
