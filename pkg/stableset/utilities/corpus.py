"""
Enumeration of small graphs for corpus sweeps.
"""

import itertools
import warnings

import networkx as nx

from stableset.base.graph import Graph
from stableset.base.graph_io import read_graph6_file, to_graph6

#: largest order held by the networkx graph atlas
ATLAS_MAX_N = 7

#: largest order the built-in generator supports
MAX_N = 8


def atlas_graphs(n):
    """All non-isomorphic graphs with exactly `n` vertices, `n` <= 7."""
    if not 0 <= n <= ATLAS_MAX_N:
        raise ValueError(f"the graph atlas covers 0..{ATLAS_MAX_N} vertices, got {n}")
    return [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n]


def augment_by_vertex(graphs, n):
    """
    All non-isomorphic graphs on `n` vertices from those on ``n - 1``.

    Every graph on `n` vertices is some graph on ``n - 1`` vertices plus one
    vertex, so adding a vertex with every possible neighborhood to each input
    graph covers them all. Duplicates are removed by bucketing on the
    Weisfeiler-Lehman hash and testing isomorphism within a bucket.

    Parameters
    ----------
    graphs : iterable of networkx.Graph
        All non-isomorphic graphs on ``n - 1`` vertices, with nodes
        ``0..n-2``.
    n : int

    Returns
    -------
    list of networkx.Graph
    """
    buckets = {}
    out = []
    new = n - 1
    for g in graphs:
        for k in range(n):
            for nbrs in itertools.combinations(range(new), k):
                h = nx.Graph(g)
                h.add_node(new)
                h.add_edges_from((new, u) for u in nbrs)
                key = (h.number_of_edges(), nx.weisfeiler_lehman_graph_hash(h, iterations=3))
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(h, other) for other in bucket):
                    continue
                bucket.append(h)
                out.append(h)
    return out


def graphs_of_order(n):
    """All non-isomorphic graphs on `n` vertices as networkx graphs."""
    if n <= ATLAS_MAX_N:
        return atlas_graphs(n)
    if n == MAX_N:
        return augment_by_vertex(atlas_graphs(ATLAS_MAX_N), n)
    raise ValueError(f"graphs on {n} vertices are not generated, maximum is {MAX_N}")


def iter_graphs(max_n, connected=False, min_n=1, progress_update=None):
    """
    Iterate over the non-isomorphic graphs on ``min_n..max_n`` vertices.

    Parameters
    ----------
    max_n : int
        Largest order, at most 8.
    connected : bool, default=False
        Only yield connected graphs.
    min_n : int, default=1
        Smallest order.
    progress_update : callable, default=None
        Called with ``("corpus", max_n, n, msg)`` before each order.

    Yields
    ------
    tuple
        ``(graph_id, Graph)`` where the id is the graph6 string.
    """
    if max_n > MAX_N:
        raise ValueError(f"max_n = {max_n} is above the supported {MAX_N}")
    for n in range(min_n, max_n + 1):
        if progress_update is not None:
            progress_update("corpus", max_n, n, f"graphs on {n} vertices")
        for g in graphs_of_order(n):
            if connected and not nx.is_connected(g):
                continue
            G = Graph.from_networkx(g)
            yield to_graph6(G), G


def iter_graph6_file(path, connected=False):
    """
    Iterate over the graphs of a graph6 file as ``(graph_id, Graph)``.

    Disconnected graphs are skipped with a warning when `connected` is set.
    """
    for i, G in enumerate(read_graph6_file(path)):
        if connected and not nx.is_connected(G.to_networkx()):
            warnings.warn(f"skipping disconnected graph {i} of '{path}'", category=RuntimeWarning)
            continue
        yield to_graph6(G), G
