"""
*UGraph* is the immutable simple undirected graph of the sampler. It is read and written in the undirected variant of
the edge-list format.
"""

from __future__ import annotations  # allowing future references -> return class under which return value is returned
import typing
import networkx as nx
import numpy as np
from shared import custom_exception
from shared import utils as shared_utils
from shared import param_validators as shared_param_val
from dipw_engine.digraph import edge_list_io
from dipw_engine.digraph import generators
from dipw_engine.digraph import vertex_set as vs
from dipw_engine.digraph.digraph import Digraph, Edge


class UGraph:
    """
    Simple undirected graph on vertices `0..n-1`, neighborhoods kept as per-vertex bitmasks.

    Attributes:
        _n (int): Vertex count.
        _adjacency (typing.Tuple[int, ...]): <_adjacency[v]> is the bitmask of neighbors of `v`.
    """

    __slots__ = ("_n", "_adjacency")

    def __init__(self, n: int, edges: typing.Iterable[Edge] = ()):
        """
        Validates the edges and builds the adjacency.

        Args:
            n (int): Vertex count.
            edges (typing.Iterable[Edge]): Unordered pairs.

        Exceptions:
            DipwInputError: On negative <n>, out-of-range endpoint, self-loop or a repeated pair.
        """
        shared_param_val.type_check(n, int)
        if n < 0:
            raise custom_exception.DipwInputError(f"Vertex count has to be non-negative, `{n}` was given.")

        adjacency = [0] * n
        for edge in edges:
            u, v = (int(endpoint) for endpoint in edge)
            if not (0 <= u < n and 0 <= v < n):
                raise custom_exception.DipwInputError(f"Edge `{edge}` is out of range for `{n}` vertices.")
            if u == v:
                raise custom_exception.DipwInputError(f"Self-loop `{u} {v}` is not allowed.")
            if (adjacency[u] >> v) & 1:
                raise custom_exception.DipwInputError(f"Duplicate edge `{u} {v}`.")
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u

        self._n = n
        self._adjacency = tuple(adjacency)

    @property
    def n(self) -> int:
        return self._n

    @property
    def vertices(self) -> vs.VertexSet:
        return vs.full(self._n)

    @property
    def edge_count(self) -> int:
        return sum(mask.bit_count() for mask in self._adjacency) // 2

    def edges(self) -> typing.List[Edge]:
        return [(u, v) for u in range(self._n) for v in vs.iter_members(self._adjacency[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._adjacency[u] >> v) & 1)

    def neighbors_mask(self, v: int) -> vs.VertexSet:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return self._adjacency[v].bit_count()

    def degrees(self) -> np.ndarray:
        return np.array([mask.bit_count() for mask in self._adjacency], dtype=np.int64)

    def max_degree(self) -> int:
        return max((mask.bit_count() for mask in self._adjacency), default=0)

    def is_independent(self, vertices: vs.VertexSet) -> bool:
        return all(self._adjacency[v] & vertices == 0 for v in vs.iter_members(vertices))

    def edges_between(self, first: vs.VertexSet, second: vs.VertexSet) -> bool:
        return any(self._adjacency[v] & second for v in vs.iter_members(first))

    def induced(self, vertices: vs.VertexSet) -> typing.Tuple[UGraph, typing.List[int]]:
        """
        Returns the subgraph induced by <vertices>, relabeled to `0..|U|-1` in increasing order of original index.

        Args:
            vertices (vs.VertexSet): Kept vertices.

        Returns (typing.Tuple[UGraph, typing.List[int]]): Induced subgraph and the list mapping new to old index.
        """
        kept = vs.members(vertices)
        position = {v: index for index, v in enumerate(kept)}
        edges = [(position[u], position[v]) for u, v in self.edges() if u in position and v in position]
        return UGraph(len(kept), edges), kept

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self._n))
        graph.add_edges_from(self.edges())
        return graph

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UGraph):
            return NotImplemented
        return self._n == other._n and self._adjacency == other._adjacency

    def __hash__(self) -> int:
        return hash((self._n, self._adjacency))

    def __repr__(self) -> str:
        return f"UGraph(n={self._n}, edges={self.edges()})"


def read_ugraph(text: str) -> UGraph:
    """
    Parses an undirected edge list.

    Args:
        text (str): Edge-list text.

    Returns (UGraph): Parsed graph.

    Exceptions:
        GraphFormatError: If the text is malformed.
    """
    n, edges = edge_list_io.parse_edge_list(text, undirected=True)
    return UGraph(n, edges)


def write_ugraph(graph: UGraph) -> str:
    shared_param_val.type_check(graph, UGraph)
    return edge_list_io.format_edge_list(graph.n, graph.edges())


def load_ugraph(file_path: str) -> UGraph:
    return read_ugraph(edge_list_io.load_text(file_path))


def underlying_complement(graph: Digraph) -> UGraph:
    """
    Complement of the underlying undirected graph: `u` and `v` are adjacent iff neither `u -> v` nor `v -> u` is an
    edge. An h-semicomplete digraph gives a graph of maximum degree at most `h`, and its independent sets are exactly
    the vertex sets inducing semicomplete subdigraphs.

    Args:
        graph (Digraph): Digraph.

    Returns (UGraph): Non-adjacency graph.
    """
    shared_param_val.type_check(graph, Digraph)
    return UGraph(graph.n, [(u, v) for u in range(graph.n) for v in vs.iter_members(graph.non_neighbors(u)) if u < v])


def random_bounded_degree_graph(n: int, d: int, seed: int, density: float = 0.75) -> UGraph:
    """
    Random graph of maximum degree at most <d>: a random maximal graph under the degree budget, of which every edge is
    kept with probability <density>.

    Args:
        n (int): Vertex count.
        d (int): Degree bound.
        seed (int): 64-bit seed.
        density (float): Edge keep probability.

    Returns (UGraph): Graph with <max_degree()> at most <d>.
    """
    shared_param_val.non_negative_int_check(n, "n")
    shared_param_val.non_negative_int_check(d, "d")
    shared_param_val.parameter_value_in_range(density, 0.0, 1.0, label="density")

    rng = shared_utils.make_rng(seed)
    pairs = generators.random_bounded_degree_pairs(n, d, rng)
    kept = rng.random(len(pairs)) < density
    return UGraph(n, [pair for pair, keep in zip(pairs, kept) if keep])
