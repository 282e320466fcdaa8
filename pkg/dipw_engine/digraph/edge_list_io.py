"""
Edge-list text format shared by directed and undirected graphs:

```
# optional comment lines
n m
u v
...
```

The first non-comment line holds the vertex count `n` and the edge count `m`, followed by exactly `m` lines with one
edge each, 0-indexed and whitespace separated. In the directed variant the line `u v` is the edge `u -> v`. In the
undirected variant it is the unordered pair `{u, v}` and the pair may not repeat in either orientation.
"""

import typing
from shared import custom_exception
from shared import param_validators as shared_param_val
from dipw_engine.digraph.digraph import Digraph, Edge


COMMENT_PREFIX: typing.Final[str] = "#"


def _content_lines(text: str) -> typing.Iterator[typing.Tuple[int, str]]:
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith(COMMENT_PREFIX):
            yield line_no, stripped


def _parse_int_pair(line: str, line_no: int, what: str) -> typing.Tuple[int, int]:
    fields = line.split()
    if len(fields) != 2:
        raise custom_exception.GraphFormatError(f"expected {what}, got `{line}`", line_no=line_no)
    try:
        first, second = int(fields[0]), int(fields[1])
    except ValueError as value_error:
        raise custom_exception.GraphFormatError(f"expected {what}, got `{line}`", line_no=line_no) from value_error
    if first < 0 or second < 0:
        raise custom_exception.GraphFormatError(f"negative value in `{line}`", line_no=line_no)
    return first, second


def parse_edge_list(text: str, undirected: bool = False) -> typing.Tuple[int, typing.List[Edge]]:
    """
    Parses the edge-list format.

    Args:
        text (str): Edge-list text.
        undirected (bool): Parse unordered pairs instead of directed edges.

    Returns (typing.Tuple[int, typing.List[Edge]]): Vertex count and edges in file order.

    Exceptions:
        GraphFormatError: Missing header, malformed line, self-loop, duplicate edge, index out of range or wrong number
            of edge lines. The message names the offending line.
    """
    shared_param_val.type_check(text, str)
    shared_param_val.type_check(undirected, bool)

    lines = _content_lines(text)
    header = next(lines, None)
    if header is None:
        raise custom_exception.GraphFormatError("missing `n m` header line")
    header_no, header_line = header
    n, m = _parse_int_pair(header_line, header_no, "header `n m`")

    seen: typing.Set[Edge] = set()
    edges: typing.List[Edge] = []
    for line_no, line in lines:
        if len(edges) == m:
            raise custom_exception.GraphFormatError(f"more than the declared {m} edge lines", line_no=line_no)
        u, v = _parse_int_pair(line, line_no, "edge `u v`")
        if u >= n or v >= n:
            raise custom_exception.GraphFormatError(f"vertex index out of range 0..{n - 1} in `{line}`", line_no)
        if u == v:
            raise custom_exception.GraphFormatError(f"self-loop `{line}`", line_no=line_no)
        key = (min(u, v), max(u, v)) if undirected else (u, v)
        if key in seen:
            raise custom_exception.GraphFormatError(f"duplicate edge `{line}`", line_no=line_no)
        seen.add(key)
        edges.append((u, v))

    if len(edges) != m:
        raise custom_exception.GraphFormatError(f"header declares {m} edges, but {len(edges)} were found")
    return n, edges


def format_edge_list(n: int, edges: typing.Sequence[Edge]) -> str:
    lines = [f"{n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def read_digraph(text: str) -> Digraph:
    """
    Parses a directed edge list into a <Digraph>.

    Args:
        text (str): Edge-list text.

    Returns (Digraph): Parsed digraph.

    Exceptions:
        GraphFormatError: If the text is malformed.
    """
    n, edges = parse_edge_list(text, undirected=False)
    return Digraph(n, edges)


def write_digraph(graph: Digraph) -> str:
    """
    Serializes <graph> as a directed edge list with edges sorted by `(tail, head)`.

    Args:
        graph (Digraph): Digraph.

    Returns (str): Edge-list text.
    """
    shared_param_val.type_check(graph, Digraph)
    return format_edge_list(graph.n, graph.edges())


def load_text(file_path: str) -> str:
    """
    Reads a text artifact.

    Args:
        file_path (str): Path to the file.

    Returns (str): File content.

    Exceptions:
        OSError: If the path is not a readable file.
    """
    shared_param_val.file_existence_check(file_path)
    with open(file_path, "r", encoding="utf-8") as file:
        return file.read()


def save_text(file_path: str, text: str) -> None:
    shared_param_val.type_check(file_path, str)
    shared_param_val.type_check(text, str)
    with open(file_path, "w", encoding="utf-8") as file:
        file.write(text)


def load_digraph(file_path: str) -> Digraph:
    return read_digraph(load_text(file_path))
