"""
*Independent Set Sampler* draws an independent set `I` of a graph of maximum degree at most `d`, such that every vertex
lies in `I` with probability exactly `1 / (2(d + 1))`.

The procedure runs `s = ⌈n / (d + 1)⌉` rounds over states `(I_i, V_i)`, starting at `(∅, V)`. Round `i` completes
`G[V_i]` into the d-regular graph `H_i` on `n_i = (2s - i)(d + 1)` vertices and draws a vertex `v` of `H_i` uniformly:
    - if `v ∈ V_i`, it joins `I`,
    - in any case `V_{i+1} = V_i \\ ({v} ∪ N_{H_i}(v))`.
Since `H_i` is d-regular, a vertex of `V_i` leaves `V_i` with probability exactly `(d + 1) / n_i`, which gives
`Pr(v ∈ I | v ∈ V_i) = (s - i) / n_i` for every state.
"""

from __future__ import annotations  # allowing future references -> return class under which return value is returned
import dataclasses
import logging
import typing
from fractions import Fraction
from shared import custom_exception
from shared import utils as shared_utils
from shared import param_validators as shared_param_val
from dipw_engine.miscellaneous import dipw_engine_param_validators as param_val
from dipw_engine.digraph import vertex_set as vs
from dipw_engine.sampler.regular_completion import regular_completion
from dipw_engine.sampler.ugraph import UGraph


_logger = logging.getLogger(__name__)


def inclusion_probability(d: int) -> Fraction:
    shared_param_val.non_negative_int_check(d, "d")
    return Fraction(1, 2 * (d + 1))


@dataclasses.dataclass(frozen=True)
class SamplerState:
    """
    State of the sampler before round <i>.

    Attributes:
        i (int): Round index.
        v_set (vs.VertexSet): Candidate set `V_i`.
        i_set (vs.VertexSet): Independent set `I_i` built so far.
        s (int): Round count `⌈n / (d + 1)⌉`.
        d (int): Degree bound.
    """

    i: int
    v_set: vs.VertexSet
    i_set: vs.VertexSet
    s: int
    d: int

    @property
    def round_size(self) -> int:
        return (2 * self.s - self.i) * (self.d + 1)

    @property
    def finished(self) -> bool:
        return self.i >= self.s


@dataclasses.dataclass(frozen=True)
class MarginalRecord:
    """
    Exact conditional inclusion probability of one vertex in one reachable state.

    Attributes:
        i (int): Round index.
        v_set (vs.VertexSet): Candidate set `V_i`.
        v (int): Vertex of `V_i`.
        state_probability (Fraction): Probability of reaching `V_i` before round <i>.
        probability (Fraction): `Pr(v ∈ I | V_i)` computed from the decision tree.
        expected (Fraction): `(s - i) / n_i`.
    """

    i: int
    v_set: vs.VertexSet
    v: int
    state_probability: Fraction
    probability: Fraction
    expected: Fraction

    @property
    def matches(self) -> bool:
        return self.probability == self.expected


class IndependentSetSampler:
    """
    Runs the sampling procedure on one graph. Completions depend only on `(V_i, n_i)`, so they are cached per
    instance when <cache> is set, which makes repeated sampling on the same graph cheap.

    Attributes:
        _graph (UGraph): Sampled graph.
        _d (int): Degree bound.
        _s (int): Round count.
        _cache (typing.Optional[typing.Dict[typing.Tuple[int, int], typing.Tuple[UGraph, typing.List[int]]]]):
            Completion and vertex mapping per `(V_i, n_i)`, `None` when caching is off.
    """

    def __init__(self, graph: UGraph, d: int, cache: bool = True):
        """
        Validates the degree bound.

        Args:
            graph (UGraph): Graph of maximum degree at most <d>.
            d (int): Degree bound.
            cache (bool): Cache completions.

        Exceptions:
            DipwInputError: If <graph> has a vertex of degree above <d>.
        """
        shared_param_val.type_check(graph, UGraph)
        shared_param_val.type_check(cache, bool)
        param_val.degree_bound_check(graph, d)

        self._graph = graph
        self._d = d
        self._s = shared_utils.ceil_div(graph.n, d + 1)
        self._cache: typing.Optional[typing.Dict[typing.Tuple[int, int], typing.Tuple[UGraph, typing.List[int]]]] = (
            {} if cache else None
        )

    @property
    def graph(self) -> UGraph:
        return self._graph

    @property
    def d(self) -> int:
        return self._d

    @property
    def rounds(self) -> int:
        return self._s

    def round_size(self, i: int) -> int:
        return (2 * self._s - i) * (self._d + 1)

    def initial_state(self) -> SamplerState:
        return SamplerState(i=0, v_set=self._graph.vertices, i_set=0, s=self._s, d=self._d)

    def completion(self, v_set: vs.VertexSet, size: int) -> typing.Tuple[UGraph, typing.List[int]]:
        """
        Returns `H_i` for the candidate set <v_set>: the regular completion of `G[V_i]` on <size> vertices and the list
        mapping its first `|V_i|` vertices back to the vertices of the graph.

        Args:
            v_set (vs.VertexSet): Candidate set.
            size (int): Completion size `n_i`.

        Returns (typing.Tuple[UGraph, typing.List[int]]): Completion and vertex mapping.
        """
        key = (v_set, size)
        if self._cache is not None and key in self._cache:
            return self._cache[key]

        induced, kept = self._graph.induced(v_set)
        entry = (regular_completion(induced, self._d, size), kept)
        if self._cache is not None:
            self._cache[key] = entry
        return entry

    def check_state(self, state: SamplerState) -> None:
        """
        Asserts the loop invariants of <state>.

        Args:
            state (SamplerState): State before a round.

        Returns (None):

        Exceptions:
            InvariantViolationError: If an invariant does not hold.
        """
        if not self._graph.is_independent(state.i_set):
            raise custom_exception.InvariantViolationError(f"I = {vs.format_members(state.i_set)} is not independent.")
        if self._graph.edges_between(state.i_set, state.v_set):
            raise custom_exception.InvariantViolationError("An edge joins I and the candidate set.")
        if state.i_set & state.v_set:
            raise custom_exception.InvariantViolationError("I and the candidate set intersect.")
        if not state.finished and state.round_size < vs.size(state.v_set) + self._d + 1:
            raise custom_exception.InvariantViolationError(
                f"Round {state.i} has size {state.round_size} below |V_i| + d + 1."
            )

    def step(self, state: SamplerState, drawn: int) -> SamplerState:
        """
        Applies one round in which vertex <drawn> of `H_i` was picked.

        Args:
            state (SamplerState): State before the round.
            drawn (int): Vertex of `H_i`, in `0..n_i-1`.

        Returns (SamplerState): State after the round.
        """
        shared_param_val.parameter_value_in_range(drawn, 0, state.round_size - 1, label="drawn")

        completion, kept = self.completion(state.v_set, state.round_size)
        closed = completion.neighbors_mask(drawn) | vs.singleton(drawn)
        removed = vs.from_iterable(kept[h] for h in vs.iter_members(closed) if h < len(kept))
        i_set = state.i_set | (vs.singleton(kept[drawn]) if drawn < len(kept) else 0)
        return dataclasses.replace(state, i=state.i + 1, v_set=state.v_set & ~removed, i_set=i_set)

    def sample(self, seed: int) -> vs.VertexSet:
        """
        Draws one independent set.

        Args:
            seed (int): 64-bit seed, the same seed gives the same set.

        Returns (vs.VertexSet): Independent set `I`.
        """
        rng = shared_utils.make_rng(seed)
        state = self.initial_state()
        while not state.finished:
            self.check_state(state)
            state = self.step(state, int(rng.integers(state.round_size)))
        self.check_state(state)
        return state.i_set


def sample_independent_set(graph: UGraph, d: int, seed: int) -> vs.VertexSet:
    """
    Draws one independent set of <graph> in which every vertex is included with probability `1 / (2(d + 1))`.

    Args:
        graph (UGraph): Graph of maximum degree at most <d>.
        d (int): Degree bound.
        seed (int): 64-bit seed.

    Returns (vs.VertexSet): Independent set.

    Exceptions:
        DipwInputError: If <graph> has a vertex of degree above <d>.
    """
    return IndependentSetSampler(graph, d, cache=False).sample(seed)


def exact_conditional_marginals(graph: UGraph, d: int) -> typing.List[MarginalRecord]:
    """
    Enumerates the whole decision tree of the sampler with rational arithmetic. For every reachable state `V_i` and
    every `v ∈ V_i` it records the exact `Pr(v ∈ I | V_i)` next to `(s - i) / n_i`. The tree has at most
    `Π n_i` leaves, so this is meant for graphs with a handful of vertices.

    Args:
        graph (UGraph): Graph of maximum degree at most <d>.
        d (int): Degree bound.

    Returns (typing.List[MarginalRecord]): Records ordered by round, candidate set and vertex.
    """
    sampler = IndependentSetSampler(graph, d)
    conditional: typing.Dict[typing.Tuple[int, int], typing.Dict[int, Fraction]] = {}

    def inclusion(state: SamplerState) -> typing.Dict[int, Fraction]:
        key = (state.i, state.v_set)
        if key in conditional:
            return conditional[key]
        result = {v: Fraction(0) for v in vs.iter_members(state.v_set)}
        if not state.finished:
            weight = Fraction(1, state.round_size)
            for drawn in range(state.round_size):
                child = sampler.step(dataclasses.replace(state, i_set=0), drawn)
                picked = child.i_set
                later = inclusion(child)
                for v in result:
                    if vs.contains(picked, v):
                        result[v] += weight
                    elif v in later:
                        result[v] += weight * later[v]
        conditional[key] = result
        return result

    initial = sampler.initial_state()
    inclusion(initial)

    reach: typing.Dict[typing.Tuple[int, int], Fraction] = {(0, initial.v_set): Fraction(1)}
    for i in range(sampler.rounds):
        size = sampler.round_size(i)
        for (round_index, v_set), probability in sorted(reach.items()):
            if round_index != i:
                continue
            state = SamplerState(i=i, v_set=v_set, i_set=0, s=sampler.rounds, d=d)
            for drawn in range(size):
                child_key = (i + 1, sampler.step(state, drawn).v_set)
                reach[child_key] = reach.get(child_key, Fraction(0)) + probability / size

    records = []
    for (i, v_set), probability in sorted(reach.items()):
        if i >= sampler.rounds:
            continue
        expected = Fraction(sampler.rounds - i, sampler.round_size(i))
        for v, value in sorted(conditional[(i, v_set)].items()):
            records.append(
                MarginalRecord(
                    i=i, v_set=v_set, v=v, state_probability=probability, probability=value, expected=expected
                )
            )
    _logger.debug("Enumerated %d conditional marginals over %d states", len(records), len(reach))
    return records
