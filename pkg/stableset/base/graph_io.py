import json
import os

from fractions import Fraction

import networkx as nx

from .errors import GraphFormatError
from .graph import Graph
from .hypergraph import Hypergraph
from .named import named_graph


def _content_lines(text):
    # yields (line number, tokens) skipping blanks and comments
    for num, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if line:
            yield num, line.split()


def _ints(tokens, num):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphFormatError(f"expected integers, got {' '.join(tokens)!r}", line=num) from None


def parse_edge_list(text):
    """
    Parse the edge-list text format.

    The first line holds ``n m``; each of the following `m` lines holds one
    edge ``u v`` with 0-indexed endpoints. ``#`` starts a comment.

    Raises
    ------
    GraphFormatError
        With the offending line number.
    """
    lines = list(_content_lines(text))
    if not lines:
        raise GraphFormatError("empty edge list, expected header 'n m'", line=1)

    num, tokens = lines[0]
    header = _ints(tokens, num)
    if len(header) != 2:
        raise GraphFormatError(f"header must be 'n m', got {' '.join(tokens)!r}", line=num)
    n, m = header

    edges = []
    for num, tokens in lines[1:]:
        pair = _ints(tokens, num)
        if len(pair) != 2:
            raise GraphFormatError(f"edge line must be 'u v', got {' '.join(tokens)!r}", line=num)
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge {(u, v)} has an endpoint outside 0..{n - 1}", line=num)
        if u == v:
            raise GraphFormatError(f"edge {(u, v)} is a self-loop", line=num)
        edges.append((u, v))

    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}", line=lines[0][0])

    return Graph(n, edges)


def format_edge_list(G):
    lines = [f"{G.n} {len(G.edges)}"]
    lines += [f"{u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


def parse_hyperedge_list(text, n=None):
    """
    Parse a hyperedge list: one edge per line as space-separated vertex ids.

    Parameters
    ----------
    text : str
        File contents.
    n : int, default=None
        Vertex count. Inferred as one more than the largest id when None.
    """
    edges = [(num, _ints(tokens, num)) for num, tokens in _content_lines(text)]
    for num, e in edges:
        if any(v < 0 for v in e):
            raise GraphFormatError(f"negative vertex id in {e}", line=num)
    if n is None:
        n = max((max(e) for _, e in edges), default=-1) + 1
    for num, e in edges:
        if max(e) >= n:
            raise GraphFormatError(f"edge {e} has a vertex outside 0..{n - 1}", line=num)
    return Hypergraph(n, [e for _, e in edges])


def from_graph6(data):
    """Decode a single graph6 string (header optional)."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    try:
        return Graph.from_networkx(nx.from_graph6_bytes(data))
    except nx.NetworkXError as e:
        raise GraphFormatError(f"bad graph6 string {data!r} : {e}") from None


def to_graph6(G):
    return nx.to_graph6_bytes(G.to_networkx(), header=False).decode("ascii").strip()


def read_graph6_file(path):
    """Read every graph of a graph6 file, one per line."""
    graphs = []
    with open(path, "rb") as f:
        for num, line in enumerate(f, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                graphs.append(from_graph6(line))
            except GraphFormatError as e:
                raise GraphFormatError(str(e), line=num) from None
    return graphs


def load_graph(source):
    """
    Load a graph from a named builtin, a graph6 file or an edge-list file.

    Parameters
    ----------
    source : str
        ``@name`` for a named graph, a path ending in ``.g6`` or ``.graph6``
        (first graph is used) or a path to an edge list.
    """
    if source.startswith("@"):
        return named_graph(source)

    ext = os.path.splitext(source)[1].lower()
    if ext in (".g6", ".graph6"):
        graphs = read_graph6_file(source)
        if not graphs:
            raise GraphFormatError(f"no graphs in '{source}'")
        return graphs[0]

    with open(source, "r", encoding="utf-8") as f:
        return parse_edge_list(f.read())


def to_dot(G, labels=None, name="G", root=()):
    """
    DOT text for an undirected graph.

    Parameters
    ----------
    G : Graph
        Graph to export.
    labels : sequence of str, default=None
        Node labels. Vertex names (or ids) are used when None.
    name : str, default="G"
        Graph name.
    root : iterable of int, default=()
        Nodes drawn with a double outline.
    """
    if labels is None:
        labels = [G.name(v) for v in G.vertices]
    root = set(root)
    lines = [f"graph {name} {{"]
    for v in G.vertices:
        extra = ", peripheries=2" if v in root else ""
        lines.append(f'  {v} [label="{labels[v]}"{extra}];')
    for u, v in G.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def exact_str(value):
    """Exact decimal string for an int or rational ("-29/1600")."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def dump_json(obj, fp):
    """Write `obj` as JSON with sorted keys so identical runs give identical bytes."""
    json.dump(obj, fp, indent=2, sort_keys=True)
    fp.write("\n")


def dumps_json(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
