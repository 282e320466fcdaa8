"""
Seeded instance generators. Each generator is a pure function of its arguments, the same seed gives the same digraph
on every run and platform.
"""

import itertools
import typing
import numpy as np
from shared import custom_exception
from shared import utils as shared_utils
from shared import param_validators as shared_param_val
from dipw_engine.digraph.digraph import Digraph, Edge


def random_bounded_degree_pairs(n: int, max_degree: int, rng: np.random.Generator) -> typing.List[Edge]:
    """
    Greedy random selection of unordered pairs with per-vertex budget <max_degree>: all pairs are visited in random
    order and a pair is taken while both endpoints have budget left. The result is a maximal undirected graph of
    maximum degree at most <max_degree>.

    Args:
        n (int): Vertex count.
        max_degree (int): Per-vertex budget.
        rng (np.random.Generator): Random generator.

    Returns (typing.List[Edge]): Selected pairs `(u, v)` with `u < v`, sorted.
    """
    budget = np.full(n, max_degree, dtype=np.int64)
    if n < 2 or max_degree == 0:
        return []
    tails, heads = np.triu_indices(n, k=1)
    selected = []
    for index in rng.permutation(len(tails)):
        u, v = int(tails[index]), int(heads[index])
        if budget[u] > 0 and budget[v] > 0:
            budget[u] -= 1
            budget[v] -= 1
            selected.append((u, v))
    return sorted(selected)


def random_h_semicomplete(n: int, h: int, seed: int) -> Digraph:
    """
    Generates a random h-semicomplete digraph. Every unordered pair is oriented one way, the other way or both ways
    with equal probability. Then both directions are deleted on the pairs of a random graph of maximum degree `h`, so
    no vertex gets more than `h` non-neighbors.

    Args:
        n (int): Vertex count.
        h (int): Allowed number of non-neighbors per vertex.
        seed (int): 64-bit seed.

    Returns (Digraph): Digraph with <h_index()> at most <h>.

    Exceptions:
        DipwInputError: If <h> is not below <n>.
    """
    shared_param_val.non_negative_int_check(n, "n")
    shared_param_val.non_negative_int_check(h, "h")
    if h >= n:
        raise custom_exception.DipwInputError(f"Parameter <h> has to be below <n>, `h={h}` and `n={n}` were given.")

    rng = shared_utils.make_rng(seed)
    tails, heads = np.triu_indices(n, k=1)
    orientation = rng.integers(0, 3, size=len(tails))
    removed = set(random_bounded_degree_pairs(n, h, rng))

    edges: typing.List[Edge] = []
    for u, v, kind in zip(tails.tolist(), heads.tolist(), orientation.tolist()):
        if (u, v) in removed:
            continue
        if kind in (0, 2):
            edges.append((u, v))
        if kind in (1, 2):
            edges.append((v, u))
    return Digraph(n, edges)


def random_digraph(n: int, edge_probability: float, seed: int) -> Digraph:
    """
    Generates a digraph with each ordered pair present independently with probability <edge_probability>.

    Args:
        n (int): Vertex count.
        edge_probability (float): Edge probability.
        seed (int): 64-bit seed.

    Returns (Digraph): Random digraph.
    """
    shared_param_val.non_negative_int_check(n, "n")
    shared_param_val.parameter_value_in_range(edge_probability, 0.0, 1.0, label="edge_probability")

    rng = shared_utils.make_rng(seed)
    present = rng.random((n, n)) < edge_probability
    np.fill_diagonal(present, False)
    tails, heads = np.nonzero(present)
    return Digraph(n, zip(tails.tolist(), heads.tolist()))


def all_digraphs(n: int) -> typing.Iterator[Digraph]:
    """
    Enumerates all `2^(n(n-1))` labeled simple digraphs on <n> vertices.

    Args:
        n (int): Vertex count, small.

    Returns (typing.Iterator[Digraph]): Digraphs in a fixed order.
    """
    shared_param_val.non_negative_int_check(n, "n")
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    for chosen in itertools.product((False, True), repeat=len(pairs)):
        yield Digraph(n, (pair for pair, keep in zip(pairs, chosen) if keep))
