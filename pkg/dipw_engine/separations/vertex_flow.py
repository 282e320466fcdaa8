"""
Unit vertex-capacity maximum flow between two disjoint vertex sets, computed by BFS augmenting paths (Edmonds-Karp)
on the vertex-split network. Every vertex `v` outside `S ∪ T` is split into an in-node and an out-node joined by an
arc of capacity one. Edges of the digraph become arcs of unbounded capacity from out-node to in-node. All of `S` is
one super source and all of `T` is one super sink.

Because vertex capacities are one, every edge carries flow zero or one, so the flow is kept as two maps: for a
saturated vertex `w`, <flow_in[w]> is the tail of the flow edge entering `w`, and for any flow carrying vertex `u`,
<flow_out[u]> is the head of the flow edge leaving `u`.
"""

import collections
import dataclasses
import typing
from shared import custom_exception
from dipw_engine.digraph import vertex_set as vs


_SOURCE: typing.Final[int] = -1
_SINK: typing.Final[int] = -2


def _in_node(v: int) -> int:
    return 2 * v


def _out_node(v: int) -> int:
    return 2 * v + 1


@dataclasses.dataclass(frozen=True)
class CutResult:
    """
    Outcome of a flow computation.

    Attributes:
        value (int): Flow value. Equals the minimum separation order unless <capped> is set.
        capped (bool): Augmentation stopped at the requested limit, so the minimum order is at least <value>.
        a (typing.Optional[vs.VertexSet]): Side `A` of the source-closest minimum separation, `None` when capped.
        b (typing.Optional[vs.VertexSet]): Side `B` of the same separation, `None` when capped.
    """

    value: int
    capped: bool
    a: typing.Optional[vs.VertexSet] = None
    b: typing.Optional[vs.VertexSet] = None


class VertexFlowNetwork:
    """
    Residual network of one `S-T` flow computation. The adjacency is passed as per-vertex bitmasks, so the same code
    serves the digraph (out-neighbor masks) and its reverse (in-neighbor masks).

    Attributes:
        _forward (typing.Sequence[int]): <_forward[v]> is the bitmask of heads of edges leaving `v`.
        _everything (vs.VertexSet): All vertices.
        _s (vs.VertexSet): Source set `S`.
        _t (vs.VertexSet): Sink set `T`.
        _middle (vs.VertexSet): `V \\ (S ∪ T)`, the vertices with capacity one.
        _saturated (vs.VertexSet): Middle vertices carrying one unit of flow.
        _flow_in (typing.Dict[int, int]): Tail of the flow edge entering a saturated vertex.
        _flow_out (typing.Dict[int, int]): Head of the flow edge leaving a saturated vertex.
        value (int): Current flow value.
    """

    def __init__(self, forward: typing.Sequence[int], n: int, s: vs.VertexSet, t: vs.VertexSet):
        """
        Creates the zero flow.

        Args:
            forward (typing.Sequence[int]): Per-vertex out-neighbor bitmasks.
            n (int): Vertex count.
            s (vs.VertexSet): Source set, disjoint with <t>.
            t (vs.VertexSet): Sink set.
        """
        self._forward = forward
        self._everything = vs.full(n)
        self._s = s
        self._t = t
        self._middle = self._everything & ~(s | t)
        self._saturated = vs.EMPTY
        self._flow_in: typing.Dict[int, int] = {}
        self._flow_out: typing.Dict[int, int] = {}
        self._source_targets = vs.EMPTY
        for v in vs.iter_members(s):
            self._source_targets |= forward[v]
        self.value = 0

    def has_direct_edge(self) -> bool:
        return self._source_targets & self._t != 0

    def _source_tail(self, head: int) -> int:
        for v in vs.iter_members(self._s):
            if (self._forward[v] >> head) & 1:
                return v
        raise custom_exception.InvariantViolationError(f"No source vertex points to `{head}`.")

    def _search(self) -> typing.Tuple[typing.Dict[int, int], bool, vs.VertexSet, vs.VertexSet]:
        """
        Breadth-first search of the residual network from the super source.

        Returns (typing.Tuple[typing.Dict[int, int], bool, vs.VertexSet, vs.VertexSet]): Parent map of reached nodes,
            whether the sink was reached, and the sets of vertices whose in-node / out-node was reached.
        """
        parent: typing.Dict[int, int] = {}
        reached_in = vs.EMPTY
        reached_out = vs.EMPTY
        queue: typing.Deque[int] = collections.deque()

        for w in vs.iter_members(self._source_targets & self._middle):
            parent[_in_node(w)] = _SOURCE
            reached_in |= 1 << w
            queue.append(_in_node(w))

        while queue:
            node = queue.popleft()
            v, is_out = divmod(node, 2)
            if is_out:
                targets = self._forward[v]
                if targets & self._t:
                    parent[_SINK] = node
                    return parent, True, reached_in, reached_out
                for w in vs.iter_members(targets & self._middle & ~reached_in):
                    parent[_in_node(w)] = node
                    reached_in |= 1 << w
                    queue.append(_in_node(w))
                if (self._saturated >> v) & 1 and not (reached_in >> v) & 1:
                    parent[_in_node(v)] = node
                    reached_in |= 1 << v
                    queue.append(_in_node(v))
            else:
                if not (self._saturated >> v) & 1:
                    if not (reached_out >> v) & 1:
                        parent[_out_node(v)] = node
                        reached_out |= 1 << v
                        queue.append(_out_node(v))
                    continue
                tail = self._flow_in[v]
                if (self._middle >> tail) & 1 and not (reached_out >> tail) & 1:
                    parent[_out_node(tail)] = node
                    reached_out |= 1 << tail
                    queue.append(_out_node(tail))

        return parent, False, reached_in, reached_out

    def _augment(self, parent: typing.Dict[int, int]) -> None:
        node = _SINK
        while node != _SOURCE:
            previous = parent[node]
            if node == _SINK:
                tail = previous // 2
                self._flow_out[tail] = vs.lowest(self._forward[tail] & self._t)
            elif previous == _SOURCE:
                head = node // 2
                self._flow_in[head] = self._source_tail(head)
            else:
                prev_v, prev_is_out = divmod(previous, 2)
                v, is_out = divmod(node, 2)
                if prev_v == v:
                    if is_out:
                        self._saturated |= 1 << v
                    else:
                        self._saturated &= ~(1 << v)
                elif prev_is_out:
                    self._flow_in[v] = prev_v
                    self._flow_out[prev_v] = v
                else:
                    # cancels the flow edge `v -> prev_v`
                    if self._flow_in.get(prev_v) == v:
                        del self._flow_in[prev_v]
                    if self._flow_out.get(v) == prev_v:
                        del self._flow_out[v]
            node = previous
        self.value += 1

    def run(self, limit: typing.Optional[int] = None) -> CutResult:
        """
        Augments until no augmenting path is left or the flow reaches <limit>.

        Args:
            limit (typing.Optional[int]): Optional flow cap.

        Returns (CutResult): Flow value and, unless capped, the separation closest to `S`.
        """
        while limit is None or self.value < limit:
            parent, found, reached_in, reached_out = self._search()
            if not found:
                a_only = self._s | reached_out
                a = self._s | reached_in
                return CutResult(value=self.value, capped=False, a=a, b=self._everything & ~a_only)
            self._augment(parent)
        return CutResult(value=self.value, capped=True)


def leftmost_min_cut(
    forward: typing.Sequence[int], n: int, s: vs.VertexSet, t: vs.VertexSet, limit: typing.Optional[int] = None
) -> typing.Optional[CutResult]:
    """
    Computes the minimum `S-T` separation closest to `S` for the adjacency given by <forward>.

    Args:
        forward (typing.Sequence[int]): Per-vertex out-neighbor bitmasks.
        n (int): Vertex count.
        s (vs.VertexSet): Source set.
        t (vs.VertexSet): Sink set, disjoint with <s>.
        limit (typing.Optional[int]): Optional flow cap.

    Returns (typing.Optional[CutResult]): `None` iff an edge goes from `S` to `T`, i.e. no separation exists.
    """
    network = VertexFlowNetwork(forward, n, s, t)
    if network.has_direct_edge():
        return None
    return network.run(limit)
