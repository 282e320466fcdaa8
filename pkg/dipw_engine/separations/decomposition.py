"""
*Path-decompositions* of digraphs. A sequence of bags `(X_1, ..., X_r)` is a path-decomposition if the bags cover
`V`, every edge `u -> v` has `u ∈ X_i` and `v ∈ X_j` for some `i >= j`, and the bags containing any vertex are
consecutive. Its width is the largest bag size minus one.

This file also converts between gapless `∅-∅` separation chains and path-decompositions, and holds the
decomposition text format:

```
width W
bags R
<R lines of space separated members, a bag may be an empty line>
```
"""

from __future__ import annotations  # allowing future references -> return class under which return value is returned
import dataclasses
import typing
import numpy as np
from shared import custom_exception
from shared import param_validators as shared_param_val
from dipw_engine.digraph import vertex_set as vs
from dipw_engine.digraph.digraph import Digraph
from dipw_engine.separations.separation import Separation, SeparationChain, is_separation


@dataclasses.dataclass(frozen=True)
class PathDecomposition:
    """
    Sequence of bags.

    Attributes:
        bags (typing.Tuple[vs.VertexSet, ...]): Bags `X_1, ..., X_r`.
    """

    bags: typing.Tuple[vs.VertexSet, ...]

    @property
    def width(self) -> int:
        return max(max((bag.bit_count() for bag in self.bags), default=0) - 1, 0)

    def __len__(self) -> int:
        return len(self.bags)


@dataclasses.dataclass(frozen=True)
class DecompositionReport:
    """
    Outcome of <validate_decomposition()>.

    Attributes:
        valid (bool): All three conditions hold.
        width (int): Width of the checked bags.
        violation (typing.Optional[str]): First violated condition, `None` when valid.
    """

    valid: bool
    width: int
    violation: typing.Optional[str] = None


def _membership(n: int, bags: typing.Sequence[vs.VertexSet]) -> np.ndarray:
    matrix = np.zeros((n, len(bags)), dtype=bool)
    for index, bag in enumerate(bags):
        matrix[vs.members(bag), index] = True
    return matrix


def validate_decomposition(graph: Digraph, decomposition: PathDecomposition) -> DecompositionReport:
    """
    Checks cover, edge direction and contiguity, in this order, and reports the first violation.

    Args:
        graph (Digraph): Digraph.
        decomposition (PathDecomposition): Checked bags.

    Returns (DecompositionReport): Diagnostic, never raises on invalid bags.
    """
    shared_param_val.type_check(graph, Digraph)
    shared_param_val.type_check(decomposition, PathDecomposition)

    width = decomposition.width
    bags = decomposition.bags
    everything = graph.vertices
    for index, bag in enumerate(bags, start=1):
        if bag & ~everything:
            return DecompositionReport(False, width, f"bag {index} has vertices outside 0..{graph.n - 1}")

    covered = vs.EMPTY
    for bag in bags:
        covered |= bag
    if covered != everything:
        missing = vs.lowest(everything & ~covered)
        return DecompositionReport(False, width, f"cover: vertex {missing} is in no bag")

    membership = _membership(graph.n, bags)
    bag_count = len(bags)
    first = membership.argmax(axis=1) if bag_count else np.zeros(graph.n, dtype=np.int64)
    last = bag_count - 1 - membership[:, ::-1].argmax(axis=1) if bag_count else np.zeros(graph.n, dtype=np.int64)

    for tail, head in graph.edges():
        if last[tail] < first[head]:
            return DecompositionReport(
                False,
                width,
                f"edge {tail}->{head}: tail last occurs in bag {last[tail] + 1}, "
                f"before head first occurs in bag {first[head] + 1}",
            )

    scattered = np.flatnonzero(membership.sum(axis=1) != last - first + 1)
    if scattered.size:
        return DecompositionReport(
            False, width, f"contiguity: bags containing vertex {scattered[0]} are not consecutive"
        )

    return DecompositionReport(True, width)


def _chain_defect(graph: Digraph, chain: SeparationChain) -> typing.Optional[str]:
    seps = chain.seps
    if not seps:
        return "chain is empty"
    everything = graph.vertices
    for index, sep in enumerate(seps):
        if not is_separation(graph, sep.a, sep.b):
            return f"member {index} is not a separation"
    if seps[0].b != everything:
        return "member 0 has B != V"
    if seps[-1].a != everything:
        return f"member {len(seps) - 1} has A != V"
    for index in range(1, len(seps)):
        previous, current = seps[index - 1], seps[index]
        if not vs.is_subset(previous.a, current.a) or not vs.is_subset(current.b, previous.b):
            return f"member {index} breaks the nesting of the chain"
        if (current.a & ~previous.a).bit_count() > 1 and (previous.b & ~current.b).bit_count() > 1:
            return f"step {index} is not gapless"
    return None


def chain_to_decomposition(graph: Digraph, chain: SeparationChain) -> PathDecomposition:
    """
    Converts a gapless `∅-∅` chain `((A_0, B_0), ..., (A_r, B_r))` into the path-decomposition with bags
    `A_i ∩ B_(i-1)`, `1 <= i <= r`. Its width is at most the chain order. A single-member chain, necessarily `(V, V)`,
    gives the single bag `V`.

    Args:
        graph (Digraph): Digraph.
        chain (SeparationChain): Gapless `∅-∅` chain.

    Returns (PathDecomposition): Path-decomposition.

    Exceptions:
        DipwInputError: If <chain> is not a gapless `∅-∅` chain, naming the first failing member or step.
    """
    shared_param_val.type_check(graph, Digraph)
    shared_param_val.type_check(chain, SeparationChain)

    defect = _chain_defect(graph, chain)
    if defect is not None:
        raise custom_exception.DipwInputError(f"Not a gapless ∅-∅ chain: {defect}.")

    seps = chain.seps
    if len(seps) == 1:
        return PathDecomposition((graph.vertices,))
    return PathDecomposition(tuple(seps[i].a & seps[i - 1].b for i in range(1, len(seps))))


def decomposition_to_chain(graph: Digraph, decomposition: PathDecomposition) -> SeparationChain:
    """
    Converts a path-decomposition `(X_1, ..., X_r)` into the `∅-∅` chain with `A_i = X_1 ∪ ... ∪ X_i` and
    `B_i = X_(i+1) ∪ ... ∪ X_r`, `0 <= i <= r`. The chain need not be gapless.

    Args:
        graph (Digraph): Digraph.
        decomposition (PathDecomposition): Valid path-decomposition.

    Returns (SeparationChain): `∅-∅` chain with `r + 1` members.

    Exceptions:
        DipwInputError: If <decomposition> is not valid for <graph>.
    """
    report = validate_decomposition(graph, decomposition)
    if not report.valid:
        raise custom_exception.DipwInputError(f"Invalid path-decomposition: {report.violation}.")

    bags = decomposition.bags
    prefixes = [vs.EMPTY]
    for bag in bags:
        prefixes.append(prefixes[-1] | bag)
    suffixes = [vs.EMPTY]
    for bag in reversed(bags):
        suffixes.append(suffixes[-1] | bag)
    suffixes.reverse()
    return SeparationChain(tuple(Separation(prefixes[i], suffixes[i]) for i in range(len(bags) + 1)))


def format_decomposition(decomposition: PathDecomposition) -> str:
    """
    Serializes <decomposition> in the decomposition text format.

    Args:
        decomposition (PathDecomposition): Path-decomposition.

    Returns (str): Decomposition text.
    """
    shared_param_val.type_check(decomposition, PathDecomposition)
    lines = [f"width {decomposition.width}", f"bags {len(decomposition)}"]
    lines.extend(vs.format_members(bag) for bag in decomposition.bags)
    return "\n".join(lines) + "\n"


def _header_value(line: typing.Optional[str], keyword: str, line_no: int) -> int:
    fields = (line or "").split()
    if len(fields) != 2 or fields[0] != keyword or not fields[1].isdigit():
        raise custom_exception.GraphFormatError(f"expected `{keyword} <count>`, got `{line}`", line_no=line_no)
    return int(fields[1])


def parse_decomposition(text: str, n: int) -> PathDecomposition:
    """
    Parses the decomposition text format. `#` comment lines are allowed before the header only, since empty lines
    after it are empty bags.

    Args:
        text (str): Decomposition text.
        n (int): Vertex count of the digraph the decomposition belongs to.

    Returns (PathDecomposition): Parsed bags.

    Exceptions:
        GraphFormatError: On malformed header, member or bag count, or a declared width differing from the bags.
    """
    shared_param_val.type_check(text, str)
    lines = text.splitlines()
    start = 0
    while start < len(lines) and (not lines[start].strip() or lines[start].strip().startswith("#")):
        start += 1

    declared_width = _header_value(lines[start] if start < len(lines) else None, "width", start + 1)
    bag_count = _header_value(lines[start + 1] if start + 1 < len(lines) else None, "bags", start + 2)

    bags = []
    for offset in range(bag_count):
        line_no = start + 3 + offset
        line = lines[line_no - 1] if line_no - 1 < len(lines) else None
        if line is None:
            raise custom_exception.GraphFormatError(f"header declares {bag_count} bags, but {offset} were found")
        try:
            bags.append(vs.as_vertex_set([int(field) for field in line.split()], n))
        except (ValueError, custom_exception.DipwInputError) as error:
            raise custom_exception.GraphFormatError(str(error), line_no=line_no) from error

    for line_no in range(start + 3 + bag_count, len(lines) + 1):
        if lines[line_no - 1].strip():
            raise custom_exception.GraphFormatError("more bag lines than declared", line_no=line_no)

    decomposition = PathDecomposition(tuple(bags))
    if decomposition.width != declared_width:
        raise custom_exception.GraphFormatError(
            f"declared width {declared_width}, but the bags have width {decomposition.width}"
        )
    return decomposition
