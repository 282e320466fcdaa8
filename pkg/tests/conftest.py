"""
Shared fixtures of the dipw test suite: small named digraphs with known pathwidth and helpers writing them to files.
"""

import typing
import pytest
from dipw_engine.digraph import digraph as dg
from dipw_engine.digraph import edge_list_io
from dipw_engine.digraph.digraph import Digraph


# (name, digraph, pathwidth)
KNOWN_PATHWIDTHS: typing.Final[typing.List[typing.Tuple[str, Digraph, int]]] = [
    ("empty", dg.edgeless(0), 0),
    ("edgeless-4", dg.edgeless(4), 0),
    ("path-5", dg.directed_path(5), 0),
    ("transitive-tournament-5", dg.transitive_tournament(5), 0),
    ("cycle-3", dg.directed_cycle(3), 1),
    ("cycle-6", dg.directed_cycle(6), 1),
    ("biorientation-4", dg.complete_biorientation(4), 3),
    ("biorientation-5", dg.complete_biorientation(5), 4),
]


def spider_counterexample() -> Digraph:
    """
    Semicomplete digraph on `a, b, c, x, y, z, v` (vertices `0..6`): every later vertex points to every earlier one and
    `a, b, c, x, y, z` additionally point to `v`. It carries a `(3, 1, 1)`-spider and has pathwidth `1`.
    """
    edges = [(later, earlier) for later in range(7) for earlier in range(later)]
    edges += [(u, 6) for u in range(6)]
    return Digraph(7, edges)


@pytest.fixture
def write_digraph(tmp_path) -> typing.Callable[[Digraph, str], str]:
    """
    Returns a function saving a digraph as an edge-list file under the test directory and returning its path.
    """

    def write(graph: Digraph, name: str = "graph.dg") -> str:
        path = tmp_path / name
        path.write_text(edge_list_io.write_digraph(graph), encoding="utf-8")
        return str(path)

    return write
