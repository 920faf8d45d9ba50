import itertools
import sys
import warnings

import numpy as np

from .graph import Graph, complete_graph, cycle_graph, path_graph, star_graph, wheel_graph

try:
    # try to import importlib.metadata
    from importlib.metadata import entry_points
except ModuleNotFoundError:
    # fall back to importlib_metadata
    from importlib_metadata import entry_points


def _get_entry_points(group):
    if sys.version_info >= (3, 10):
        # use new selection mechanism
        return entry_points(group=group)
    else:
        # use the old way
        return entry_points().get(group, ())


# parameters of the Schläfli graph as a strongly regular graph
SCHLAFLI_PARAMETERS = (27, 16, 10, 8)


def srg_parameters(G):
    """
    Strongly regular parameters of `G`.

    Returns
    -------
    tuple or None
        ``(n, k, lambda, mu)`` or None if `G` is not strongly regular.
    """
    A = np.zeros((G.n, G.n), dtype=np.int64)
    for u, v in G.edges:
        A[u, v] = A[v, u] = 1

    deg = A.sum(axis=1)
    if G.n == 0 or np.any(deg != deg[0]):
        return None

    common = A @ A
    off = ~np.eye(G.n, dtype=bool)
    adjacent = common[(A == 1) & off]
    apart = common[(A == 0) & off]

    if len(set(adjacent.tolist())) > 1 or len(set(apart.tolist())) > 1:
        return None

    lam = int(adjacent[0]) if adjacent.size else 0
    mu = int(apart[0]) if apart.size else 0
    return (G.n, int(deg[0]), lam, mu)


def schlafli_graph():
    """
    Schläfli graph built from the 27 lines on a cubic surface.

    The lines are a1..a6, b1..b6 (a double-six) and c_ij for i < j. Two lines
    are adjacent in the returned graph when they do NOT meet. Lines meet by
    the double-six rules:

    * a_i meets b_j iff i != j
    * a_i or b_i meets c_jk iff i is j or k
    * c_ij meets c_kl iff {i, j} and {k, l} are disjoint

    Returns
    -------
    Graph
        Strongly regular graph with parameters (27, 16, 10, 8).

    Raises
    ------
    RuntimeError
        If the construction fails strongly regular validation.
    """
    lines = [("a", (i,)) for i in range(1, 7)]
    lines += [("b", (i,)) for i in range(1, 7)]
    lines += [("c", pair) for pair in itertools.combinations(range(1, 7), 2)]

    def meets(x, y):
        (kx, ix), (ky, iy) = x, y
        if kx == ky and kx in "ab":
            # lines of one half of the double-six are skew
            return False
        if {kx, ky} == {"a", "b"}:
            return ix != iy
        if kx == "c" and ky == "c":
            return not set(ix) & set(iy)
        # one of a/b with one c line
        single, pair = (ix, iy) if kx != "c" else (iy, ix)
        return single[0] in pair

    names = [k + "".join(str(i) for i in idx) for k, idx in lines]
    edges = [
        (u, v)
        for u, v in itertools.combinations(range(len(lines)), 2)
        if not meets(lines[u], lines[v])
    ]
    G = Graph(len(lines), edges, names=names)

    params = srg_parameters(G)
    if params != SCHLAFLI_PARAMETERS:
        raise RuntimeError(f"Schläfli construction gave parameters {params}, expected {SCHLAFLI_PARAMETERS}")

    return G


def fig_p_graph():
    """
    Triangle abc with a pendant vertex v attached at a.

    Vertex ids are a=0, b=1, c=2, v=3.
    """
    return Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)], names="abcv")


def w6_graph():
    """Wheel on six vertices: rim a-b-c-d-e (ids 0..4) with hub v (id 5)."""
    return wheel_graph(6, names="abcdev")


def c6_graph():
    return cycle_graph(6, names="abcdef")


_builtin = {
    "schlafli": schlafli_graph,
    "c6": c6_graph,
    "w6": w6_graph,
    "claw": lambda: star_graph(3),
    "figP": fig_p_graph,
    "k3": lambda: complete_graph(3),
    "p3": lambda: path_graph(3, names="uvw"),
}


def named_graph_names():
    """Names of built-in graphs followed by plugin graphs."""
    names = list(_builtin)
    for ep in _get_entry_points("stableset.named_graph"):
        if ep.name not in names:
            names.append(ep.name)
    return tuple(names)


def named_graph(name):
    """
    Look up a named graph.

    Built-in names are checked first, then entry points in the
    ``stableset.named_graph`` group. Entry points must resolve to a callable
    returning a :class:`Graph`.

    Parameters
    ----------
    name : str
        Graph name, with or without a leading ``@``.

    Raises
    ------
    ValueError
        If no graph has that name.
    """
    key = name[1:] if name.startswith("@") else name

    if key in _builtin:
        return _builtin[key]()

    for ep in _get_entry_points("stableset.named_graph"):
        if ep.name == key:
            try:
                builder = ep.load()
            except Exception as e:
                warnings.warn(f"Unable to load named graph plugin '{key}' : {e}", category=RuntimeWarning)
                break
            return builder()

    raise ValueError(f"Unknown named graph '{name}', expected one of {named_graph_names()}")
