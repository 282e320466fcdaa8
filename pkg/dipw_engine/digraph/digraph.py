"""
*Digraph* is the immutable simple directed graph every other dipw module works on.

This file contains the <Digraph> class, the neighborhood and degree queries over vertex sets, the h-semicompleteness
measure, the semicomplete completion and named constructors of small digraph families.
"""

from __future__ import annotations  # allowing future references -> return class under which return value is returned
import typing
import numpy as np
from shared import custom_exception
from shared import param_validators as shared_param_val
from dipw_engine.digraph import vertex_set as vs


Edge = typing.Tuple[int, int]


class Digraph:
    """
    Simple digraph on vertices `0..n-1`: no self-loops and at most one edge per ordered pair. Out- and in-adjacency are
    both kept as per-vertex bitmasks, so that `u` is an in-neighbor of `v` iff `v` is an out-neighbor of `u`.
    Instances are immutable after construction and safe to share between concurrent tasks.

    Attributes:
        _n (int): Vertex count.
        _out (typing.Tuple[int, ...]): <_out[v]> is the bitmask of out-neighbors of `v`.
        _in (typing.Tuple[int, ...]): <_in[v]> is the bitmask of in-neighbors of `v`.
        _edge_count (int): Number of edges.
    """

    __slots__ = ("_n", "_out", "_in", "_edge_count")

    def __init__(self, n: int, edges: typing.Iterable[Edge] = ()):
        """
        Validates the edges and builds both adjacency representations.

        Args:
            n (int): Vertex count.
            edges (typing.Iterable[Edge]): Directed edges `(tail, head)`.

        Exceptions:
            DipwInputError: On negative <n>, out-of-range endpoint, self-loop or duplicate edge.
        """
        shared_param_val.type_check(n, int)
        if n < 0:
            raise custom_exception.DipwInputError(f"Vertex count has to be non-negative, `{n}` was given.")

        out_masks = [0] * n
        in_masks = [0] * n
        edge_count = 0
        for edge in edges:
            tail, head = edge
            for endpoint in (tail, head):
                if isinstance(endpoint, bool) or not isinstance(endpoint, (int, np.integer)):
                    raise custom_exception.DipwInputError(f"Edge `{edge}` has a non-integer endpoint.")
                if not 0 <= endpoint < n:
                    raise custom_exception.DipwInputError(f"Edge `{edge}` is out of range for `{n}` vertices.")
            tail, head = int(tail), int(head)
            if tail == head:
                raise custom_exception.DipwInputError(f"Self-loop `{tail} -> {head}` is not allowed.")
            if (out_masks[tail] >> head) & 1:
                raise custom_exception.DipwInputError(f"Duplicate edge `{tail} -> {head}`.")
            out_masks[tail] |= 1 << head
            in_masks[head] |= 1 << tail
            edge_count += 1

        self._n = n
        self._out = tuple(out_masks)
        self._in = tuple(in_masks)
        self._edge_count = edge_count

    @property
    def n(self) -> int:
        return self._n

    @property
    def vertices(self) -> vs.VertexSet:
        return vs.full(self._n)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def edges(self) -> typing.List[Edge]:
        """
        Returns all edges sorted by `(tail, head)`.

        Returns (typing.List[Edge]): Canonical edge list.
        """
        return [(tail, head) for tail in range(self._n) for head in vs.iter_members(self._out[tail])]

    def has_edge(self, tail: int, head: int) -> bool:
        return bool((self._out[tail] >> head) & 1)

    def are_adjacent(self, u: int, v: int) -> bool:
        return self.has_edge(u, v) or self.has_edge(v, u)

    def out_mask(self, v: int) -> vs.VertexSet:
        return self._out[v]

    def in_mask(self, v: int) -> vs.VertexSet:
        return self._in[v]

    def out_neighbors(self, v: int) -> typing.List[int]:
        return vs.members(self._out[v])

    def in_neighbors(self, v: int) -> typing.List[int]:
        return vs.members(self._in[v])

    def out_degree(self, v: int) -> int:
        return self._out[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self._in[v].bit_count()

    def out_degrees(self) -> np.ndarray:
        return np.fromiter((mask.bit_count() for mask in self._out), dtype=np.int64, count=self._n)

    def in_degrees(self) -> np.ndarray:
        return np.fromiter((mask.bit_count() for mask in self._in), dtype=np.int64, count=self._n)

    def non_neighbors(self, v: int) -> vs.VertexSet:
        """
        Returns vertices `u != v` joined with `v` by no edge in either direction.

        Args:
            v (int): Vertex.

        Returns (vs.VertexSet): Non-neighbors of `v`.
        """
        return vs.full(self._n) & ~(self._out[v] | self._in[v] | (1 << v))

    def closed_out_neighborhood(self, vertices: vs.VertexSet) -> vs.VertexSet:
        """
        Returns `N+[U]`, i.e. <vertices> together with all their out-neighbors.

        Args:
            vertices (vs.VertexSet): Vertex set `U`.

        Returns (vs.VertexSet): `N+[U]`.
        """
        result = vertices
        for v in vs.iter_members(vertices):
            result |= self._out[v]
        return result

    def closed_in_neighborhood(self, vertices: vs.VertexSet) -> vs.VertexSet:
        result = vertices
        for v in vs.iter_members(vertices):
            result |= self._in[v]
        return result

    def out_neighborhood(self, vertices: vs.VertexSet) -> vs.VertexSet:
        return self.closed_out_neighborhood(vertices) & ~vertices

    def in_neighborhood(self, vertices: vs.VertexSet) -> vs.VertexSet:
        return self.closed_in_neighborhood(vertices) & ~vertices

    def d_plus(self, vertices: vs.VertexSet) -> int:
        return self.out_neighborhood(vertices).bit_count()

    def d_minus(self, vertices: vs.VertexSet) -> int:
        return self.in_neighborhood(vertices).bit_count()

    def reverse(self) -> Digraph:
        return Digraph(self._n, ((head, tail) for tail, head in self.edges()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._n == other._n and self._out == other._out

    def __hash__(self) -> int:
        return hash((self._n, self._out))

    def __repr__(self) -> str:
        return f"Digraph(n={self._n}, edges={self.edges()})"


def d_plus(graph: Digraph, vertices: vs.VertexSetLike) -> int:
    """
    Returns the out-degree `d+(U) = |N+(U)|` of a vertex set.

    Args:
        graph (Digraph): Digraph.
        vertices (vs.VertexSetLike): Vertex set `U`, bitmask or iterable of indices.

    Returns (int): Number of vertices outside `U` with an in-neighbor in `U`.

    Exceptions:
        DipwInputError: If `U` has an out-of-range vertex.
    """
    shared_param_val.type_check(graph, Digraph)
    return graph.d_plus(vs.as_vertex_set(vertices, graph.n))


def d_minus(graph: Digraph, vertices: vs.VertexSetLike) -> int:
    """
    Returns the in-degree `d-(U) = |N-(U)|` of a vertex set.

    Args:
        graph (Digraph): Digraph.
        vertices (vs.VertexSetLike): Vertex set `U`, bitmask or iterable of indices.

    Returns (int): Number of vertices outside `U` with an out-neighbor in `U`.

    Exceptions:
        DipwInputError: If `U` has an out-of-range vertex.
    """
    shared_param_val.type_check(graph, Digraph)
    return graph.d_minus(vs.as_vertex_set(vertices, graph.n))


def h_index(graph: Digraph) -> int:
    """
    Returns the smallest `h` such that <graph> is h-semicomplete, i.e. the largest number of non-neighbors of a vertex.

    Args:
        graph (Digraph): Digraph.

    Returns (int): `0` for semicomplete digraphs (and the empty digraph).
    """
    shared_param_val.type_check(graph, Digraph)
    return max((graph.non_neighbors(v).bit_count() for v in range(graph.n)), default=0)


def is_semicomplete(graph: Digraph) -> bool:
    return h_index(graph) == 0


def require_semicomplete(graph: Digraph) -> None:
    """
    Validates that <graph> is semicomplete.

    Args:
        graph (Digraph): Digraph.

    Returns (None):

    Exceptions:
        DipwInputError: If some pair of vertices is non-adjacent.
    """
    h = h_index(graph)
    if h != 0:
        raise custom_exception.DipwInputError(
            f"Digraph has to be semicomplete, but a vertex has `{h}` non-neighbors."
        )


def completion_order(graph: Digraph) -> typing.List[int]:
    """
    Returns vertices sorted by non-decreasing out-degree, ties broken by vertex index.

    Args:
        graph (Digraph): Digraph.

    Returns (typing.List[int]): Vertex order used by <semicomplete_completion()>.
    """
    out_degrees = graph.out_degrees()
    return sorted(range(graph.n), key=lambda v: (int(out_degrees[v]), v))


def semicomplete_completion(graph: Digraph) -> Digraph:
    """
    Completes <graph> into a semicomplete supergraph. With vertices listed by <completion_order()>, every non-adjacent
    pair gets the edge from the later-listed vertex to the earlier-listed one.

    Args:
        graph (Digraph): Digraph.

    Returns (Digraph): Semicomplete supergraph of <graph>. Semicomplete input is returned unchanged.
    """
    shared_param_val.type_check(graph, Digraph)

    rank = [0] * graph.n
    for position, v in enumerate(completion_order(graph)):
        rank[v] = position

    added: typing.List[Edge] = []
    for u in range(graph.n):
        for v in vs.iter_members(graph.non_neighbors(u)):
            if rank[u] > rank[v]:
                added.append((u, v))
    if not added:
        return graph
    return Digraph(graph.n, graph.edges() + added)


def induced_subgraph(graph: Digraph, vertices: vs.VertexSetLike) -> typing.Tuple[Digraph, typing.List[int]]:
    """
    Returns the subgraph induced by <vertices>, relabeled to `0..|U|-1` in increasing order of original index.

    Args:
        graph (Digraph): Digraph.
        vertices (vs.VertexSetLike): Kept vertices.

    Returns (typing.Tuple[Digraph, typing.List[int]]): Induced subgraph and the list mapping new index to old index.
    """
    shared_param_val.type_check(graph, Digraph)
    mask = vs.as_vertex_set(vertices, graph.n)
    kept = vs.members(mask)
    new_index = {old: new for new, old in enumerate(kept)}
    edges = [
        (new_index[tail], new_index[head])
        for tail in kept
        for head in vs.iter_members(graph.out_mask(tail) & mask)
    ]
    return Digraph(len(kept), edges), kept


def edgeless(n: int) -> Digraph:
    return Digraph(n)


def directed_path(n: int) -> Digraph:
    """
    Returns the directed path `0 -> 1 -> ... -> n-1`.

    Args:
        n (int): Vertex count.

    Returns (Digraph): Directed path.
    """
    return Digraph(n, ((v, v + 1) for v in range(n - 1)))


def directed_cycle(n: int) -> Digraph:
    """
    Returns the directed cycle `0 -> 1 -> ... -> n-1 -> 0`.

    Args:
        n (int): Vertex count, at least `3` so the digraph stays simple.

    Returns (Digraph): Directed cycle.

    Exceptions:
        DipwInputError: If <n> is below `3`.
    """
    if n < 3:
        raise custom_exception.DipwInputError(f"Directed cycle needs at least 3 vertices, `{n}` was given.")
    return Digraph(n, ((v, (v + 1) % n) for v in range(n)))


def complete_biorientation(n: int) -> Digraph:
    return Digraph(n, ((u, v) for u in range(n) for v in range(n) if u != v))


def transitive_tournament(n: int) -> Digraph:
    """
    Returns the transitive tournament with edges `u -> v` for all `u < v`, so vertex `0` has out-degree `n-1`.

    Args:
        n (int): Vertex count.

    Returns (Digraph): Transitive tournament.
    """
    return Digraph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))
