"""
*Separations* are ordered pairs `(A, B)` of vertex sets with `A ∪ B = V` and no edge from `A \\ B` to `B \\ A`.

This file contains the <Separation> and <SeparationChain> types, the chain predicates and the chain text format. The
text format has one line per separation, `A-members | B-members`, members space separated.
"""

from __future__ import annotations  # allowing future references -> return class under which return value is returned
import dataclasses
import typing
from shared import custom_exception
from shared import param_validators as shared_param_val
from dipw_engine.digraph import vertex_set as vs
from dipw_engine.digraph.digraph import Digraph


CHAIN_SIDE_DELIMITER: typing.Final[str] = "|"


@dataclasses.dataclass(frozen=True)
class Separation:
    """
    Pair of vertex sets `(A, B)`. The separation property itself depends on the digraph and is checked by
    <is_separation()>.

    Attributes:
        a (vs.VertexSet): Side `A`.
        b (vs.VertexSet): Side `B`.
    """

    a: vs.VertexSet
    b: vs.VertexSet

    @property
    def order(self) -> int:
        return (self.a & self.b).bit_count()

    @property
    def separator(self) -> vs.VertexSet:
        return self.a & self.b

    @property
    def a_only(self) -> vs.VertexSet:
        return self.a & ~self.b

    @property
    def b_only(self) -> vs.VertexSet:
        return self.b & ~self.a

    def __str__(self) -> str:
        return f"({{{vs.format_members(self.a)}}}, {{{vs.format_members(self.b)}}})"


@dataclasses.dataclass(frozen=True)
class ChainReport:
    """
    Outcome of <chain_predicates()>.

    Attributes:
        is_chain (bool): Every member is a separation, `A`s are non-decreasing and `B`s are non-increasing.
        is_st_chain (bool): Chain with `B_0 = V \\ S` and `A_r = V \\ T`.
        is_gapless (bool): Each step adds at most one vertex to `A` or removes at most one vertex from `B`.
        is_nice (bool): Each step adds at most one vertex to `A` and removes at most one vertex from `B`.
        is_tight (bool): `A_0 = N+[S]` and `B_r = N-[T]`.
        order (int): Maximum member order, `0` for the empty sequence.
    """

    is_chain: bool
    is_st_chain: bool
    is_gapless: bool
    is_nice: bool
    is_tight: bool
    order: int


@dataclasses.dataclass(frozen=True)
class SeparationChain:
    """
    Sequence of separations `((A_0, B_0), ..., (A_r, B_r))`. The `+` operator concatenates chains and appends or
    prepends single separations.

    Attributes:
        seps (typing.Tuple[Separation, ...]): Member separations.
    """

    seps: typing.Tuple[Separation, ...] = ()

    @property
    def order(self) -> int:
        return max((sep.order for sep in self.seps), default=0)

    def __len__(self) -> int:
        return len(self.seps)

    def __iter__(self) -> typing.Iterator[Separation]:
        return iter(self.seps)

    def __getitem__(self, index: int) -> Separation:
        return self.seps[index]

    def __add__(self, other: typing.Union[SeparationChain, Separation]) -> SeparationChain:
        if isinstance(other, Separation):
            return SeparationChain(self.seps + (other,))
        if isinstance(other, SeparationChain):
            return SeparationChain(self.seps + other.seps)
        return NotImplemented

    def __radd__(self, other: Separation) -> SeparationChain:
        if isinstance(other, Separation):
            return SeparationChain((other,) + self.seps)
        return NotImplemented


def is_separation(graph: Digraph, a: vs.VertexSet, b: vs.VertexSet) -> bool:
    """
    Checks that `A ∪ B = V` and that no edge leaves `A \\ B` towards `B \\ A`.

    Args:
        graph (Digraph): Digraph.
        a (vs.VertexSet): Side `A`.
        b (vs.VertexSet): Side `B`.

    Returns (bool): True iff `(A, B)` is a separation of <graph>.
    """
    shared_param_val.type_check(graph, Digraph)
    if (a | b) != graph.vertices:
        return False
    return graph.closed_out_neighborhood(a & ~b) & (b & ~a) == 0


def is_st_separation(graph: Digraph, sep: Separation, s: vs.VertexSet, t: vs.VertexSet) -> bool:
    return is_separation(graph, sep.a, sep.b) and s & sep.b == 0 and t & sep.a == 0


def sep_order(sep: Separation) -> int:
    return sep.order


def require_disjoint(s: vs.VertexSet, t: vs.VertexSet) -> None:
    """
    Validates that the terminal sets do not overlap.

    Args:
        s (vs.VertexSet): Set `S`.
        t (vs.VertexSet): Set `T`.

    Returns (None):

    Exceptions:
        DipwInputError: If `S ∩ T` is not empty.
    """
    if s & t:
        raise custom_exception.DipwInputError(f"Sets S and T overlap in `{{{vs.format_members(s & t)}}}`.")


def leftmost_trivial(graph: Digraph, s: vs.VertexSet) -> Separation:
    """
    Returns the trivial separation `(N+[S], V \\ S)`.

    Args:
        graph (Digraph): Digraph.
        s (vs.VertexSet): Set `S`.

    Returns (Separation): `(N+[S], V \\ S)`.
    """
    return Separation(graph.closed_out_neighborhood(s), graph.vertices & ~s)


def rightmost_trivial(graph: Digraph, t: vs.VertexSet) -> Separation:
    """
    Returns the trivial separation `(V \\ T, N-[T])`.

    Args:
        graph (Digraph): Digraph.
        t (vs.VertexSet): Set `T`.

    Returns (Separation): `(V \\ T, N-[T])`.
    """
    return Separation(graph.vertices & ~t, graph.closed_in_neighborhood(t))


def chain_predicates(
    graph: Digraph, chain: SeparationChain, s: vs.VertexSet = vs.EMPTY, t: vs.VertexSet = vs.EMPTY
) -> ChainReport:
    """
    Evaluates all chain predicates of <chain> with respect to terminal sets <s> and <t>. The `S-T`, gapless, nice and
    tight predicates are reported as False whenever <chain> is not a chain or is empty.

    Args:
        graph (Digraph): Digraph.
        chain (SeparationChain): Checked sequence of separations.
        s (vs.VertexSet): Set `S`.
        t (vs.VertexSet): Set `T`.

    Returns (ChainReport): Predicate values and the chain order.
    """
    shared_param_val.type_check(graph, Digraph)
    shared_param_val.type_check(chain, SeparationChain)

    seps = chain.seps
    is_chain = bool(seps) and all(is_separation(graph, sep.a, sep.b) for sep in seps)
    is_gapless = is_nice = is_chain
    for previous, current in zip(seps, seps[1:]):
        if not vs.is_subset(previous.a, current.a) or not vs.is_subset(current.b, previous.b):
            is_chain = is_gapless = is_nice = False
            break
        a_step = (current.a & ~previous.a).bit_count()
        b_step = (previous.b & ~current.b).bit_count()
        is_gapless = is_gapless and (a_step <= 1 or b_step <= 1)
        is_nice = is_nice and a_step <= 1 and b_step <= 1

    everything = graph.vertices
    is_st_chain = is_chain and seps[0].b == everything & ~s and seps[-1].a == everything & ~t
    is_tight = (
        is_chain and seps[0].a == graph.closed_out_neighborhood(s) and seps[-1].b == graph.closed_in_neighborhood(t)
    )
    return ChainReport(
        is_chain=is_chain,
        is_st_chain=is_st_chain,
        is_gapless=is_gapless,
        is_nice=is_nice,
        is_tight=is_tight,
        order=chain.order,
    )


def pad_to_tight(graph: Digraph, chain: SeparationChain, s: vs.VertexSet, t: vs.VertexSet) -> SeparationChain:
    """
    Prepends `(N+[S], V \\ S)` and appends `(V \\ T, N-[T])` unless the chain already starts or ends with them. For
    an `S-T` chain of a k-admissible pair the result is a tight `S-T` chain with the same order and gaplessness.

    Args:
        graph (Digraph): Digraph.
        chain (SeparationChain): `S-T` chain.
        s (vs.VertexSet): Set `S`.
        t (vs.VertexSet): Set `T`.

    Returns (SeparationChain): Tight `S-T` chain.
    """
    first = leftmost_trivial(graph, s)
    last = rightmost_trivial(graph, t)
    seps = list(chain.seps)
    if not seps or seps[0] != first:
        seps.insert(0, first)
    if seps[-1] != last:
        seps.append(last)
    return SeparationChain(tuple(seps))


def ordering_to_chain(graph: Digraph, ordering: typing.Sequence[int]) -> SeparationChain:
    """
    Builds the `∅-∅` chain of the prefixes `P_i = {v_1, ..., v_i}` of <ordering>: member `i` is `(N+[P_i], V \\ P_i)`,
    whose order is `d+(P_i)`, so the chain order equals the ordering width. The chain is gapless because every step
    removes exactly one vertex from `B`.

    Args:
        graph (Digraph): Digraph.
        ordering (typing.Sequence[int]): Permutation of the vertices.

    Returns (SeparationChain): Gapless `∅-∅` chain of `n + 1` separations.

    Exceptions:
        DipwInputError: If <ordering> is not a permutation of the vertices.
    """
    shared_param_val.type_check(graph, Digraph)
    if sorted(ordering) != list(range(graph.n)):
        raise custom_exception.DipwInputError(f"Sequence `{list(ordering)}` is not a vertex permutation.")

    everything = graph.vertices
    seps = []
    prefix = vs.EMPTY
    for v in [None, *ordering]:
        if v is not None:
            prefix |= 1 << v
        seps.append(Separation(graph.closed_out_neighborhood(prefix), everything & ~prefix))
    return SeparationChain(tuple(seps))


def format_chain(chain: SeparationChain) -> str:
    """
    Serializes <chain>, one line `A-members | B-members` per separation.

    Args:
        chain (SeparationChain): Chain.

    Returns (str): Chain text.
    """
    shared_param_val.type_check(chain, SeparationChain)
    return "".join(
        f"{vs.format_members(sep.a)} {CHAIN_SIDE_DELIMITER} {vs.format_members(sep.b)}".strip() + "\n"
        for sep in chain
    )


def parse_chain(text: str, n: int) -> SeparationChain:
    """
    Parses the chain text format. Blank lines and `#` comments are skipped.

    Args:
        text (str): Chain text.
        n (int): Vertex count of the digraph the chain belongs to.

    Returns (SeparationChain): Parsed chain, not validated against any digraph.

    Exceptions:
        GraphFormatError: On a line without the delimiter, a non-integer member or an out-of-range member.
    """
    shared_param_val.type_check(text, str)
    seps = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped.count(CHAIN_SIDE_DELIMITER) != 1:
            raise custom_exception.GraphFormatError(f"expected `A | B`, got `{stripped}`", line_no=line_no)
        sides = []
        for side in stripped.split(CHAIN_SIDE_DELIMITER):
            try:
                sides.append(vs.as_vertex_set([int(field) for field in side.split()], n))
            except (ValueError, custom_exception.DipwInputError) as error:
                raise custom_exception.GraphFormatError(str(error), line_no=line_no) from error
        seps.append(Separation(sides[0], sides[1]))
    return SeparationChain(tuple(seps))
