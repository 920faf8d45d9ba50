import itertools
import numbers

from dataclasses import dataclass, field

import networkx as nx

__all__ = [
    "Graph", "CliqueRef", "LineGraphMap", "Classification",
    "build_graph", "path_graph", "cycle_graph", "complete_graph", "empty_graph",
    "star_graph", "wheel_graph", "random_graph",
    "induced_subgraph", "delete_vertex", "delete_edge", "open_neighborhood",
    "closed_neighborhood", "connected_components", "is_connected", "component_of",
    "max_degree", "min_degree", "is_clique", "clique_ref", "clique_number",
    "line_graph", "clique_vertex_set_Kv", "neighbor_closure_Sv",
    "find_claw", "is_claw_free", "has_triangle", "simplicial_violation",
    "is_simplicial_clique", "candidate_cliques", "find_simplicial_clique",
    "all_simplicial_cliques", "is_simplicial_graph",
    "classify_connected_claw_and_triangle_free", "is_block_graph", "blocks",
]

class Graph:
    """
    Finite simple undirected graph.

    Vertices are the dense integer ids ``0..n-1``. Names are cosmetic and only
    used when printing polynomials, trees and DOT files. Graphs are immutable
    after construction and compare equal when vertex count, edges and names
    agree.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable of pairs, default=()
        Unordered vertex pairs. Duplicate pairs are ignored.
    names : sequence of str, default=None
        Optional name for each vertex.

    Attributes
    ----------
    n : int
        Number of vertices.
    edges : tuple
        Sorted tuple of ``(u, v)`` pairs with ``u < v``.
    names : tuple or None
        Vertex names.

    Raises
    ------
    ValueError
        If an edge has an endpoint outside ``0..n-1`` or is a self-loop.

    Examples
    --------
    Build a triangle.

    >>> G = Graph(3, [(0, 1), (1, 2), (0, 2)])
    >>> G.edges
    ((0, 1), (0, 2), (1, 2))
    """

    def __init__(self, n, edges=(), names=None):
        n = int(n)
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")

        adj = [set() for _ in range(n)]
        for e in edges:
            u, v = (int(x) for x in e)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {(u, v)} has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"edge {(u, v)} is a self-loop")
            adj[u].add(v)
            adj[v].add(u)

        if names is not None:
            names = tuple(str(s) for s in names)
            if len(names) != n:
                raise ValueError(f"got {len(names)} names for {n} vertices")

        self.n = n
        self.names = names
        self._adj = tuple(frozenset(a) for a in adj)
        self._masks = tuple(sum(1 << w for w in a) for a in adj)
        self.edges = tuple(sorted((u, w) for u in range(n) for w in adj[u] if u < w))

    @property
    def vertices(self):
        return range(self.n)

    def neighbors(self, v):
        """Open neighborhood of `v` as a frozenset."""
        return self._adj[v]

    def mask(self, v):
        """Open neighborhood of `v` as a bitmask."""
        return self._masks[v]

    def has_edge(self, u, v):
        return v in self._adj[u]

    def degree(self, v):
        return len(self._adj[v])

    def name(self, v):
        if self.names is None:
            return str(v)
        return self.names[v]

    def to_networkx(self):
        nxg = nx.Graph()
        nxg.add_nodes_from(range(self.n))
        nxg.add_edges_from(self.edges)
        return nxg

    @classmethod
    def from_networkx(cls, nxg, names=None):
        """
        Build a Graph from a networkx graph.

        Nodes are renumbered in sorted order. Unsortable node sets keep the
        networkx iteration order.
        """
        try:
            nodes = sorted(nxg.nodes())
        except TypeError:
            nodes = list(nxg.nodes())
        index = {u: i for i, u in enumerate(nodes)}
        return cls(len(nodes), [(index[u], index[v]) for u, v in nxg.edges()], names=names)

    def _key(self):
        return (self.n, self.edges, self.names)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class CliqueRef:
    """Sorted vertex list of a clique in some host graph."""

    vertices: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(set(int(v) for v in self.vertices))))

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self.vertices


@dataclass(frozen=True)
class LineGraphMap:
    """
    Line graph together with the numbering of host edges.

    Attributes
    ----------
    line_graph : Graph
        L(G). Vertex ``i`` is the ``i``-th host edge in sorted order.
    edge_to_vertex : dict
        Map from host edge ``(u, v)``, ``u < v``, to its line-graph vertex.
    """

    line_graph: Graph
    edge_to_vertex: dict = field(default_factory=dict)

    def vertex_to_edge(self, i):
        return self.line_graph_edges[i]

    @property
    def line_graph_edges(self):
        return tuple(sorted(self.edge_to_vertex, key=self.edge_to_vertex.get))

    def edge_id(self, u, v):
        return self.edge_to_vertex[(min(u, v), max(u, v))]


@dataclass(frozen=True)
class Classification:
    """Result of :func:`classify_connected_claw_and_triangle_free`."""

    kind: str
    order: tuple = ()


def _check_vertex(G, v):
    if not (isinstance(v, numbers.Integral) and 0 <= v < G.n):
        raise ValueError(f"unknown vertex {v!r} for graph on {G.n} vertices")


# --------------------------------[Constructors]--------------------------------


def build_graph(n, edges, names=None):
    """
    Build a simple graph, rejecting malformed edges.

    Parameters
    ----------
    n : int
        Vertex count.
    edges : iterable of pairs
        Unordered pairs, duplicates allowed.
    names : sequence of str, default=None
        Optional vertex names.

    Returns
    -------
    Graph

    Raises
    ------
    ValueError
        Naming the offending pair for an out-of-range endpoint or a self-loop.
    """
    return Graph(n, edges, names=names)


def path_graph(n, names=None):
    return Graph(n, [(i, i + 1) for i in range(n - 1)], names=names)


def cycle_graph(n, names=None):
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)], names=names)


def complete_graph(n, names=None):
    return Graph(n, itertools.combinations(range(n), 2), names=names)


def empty_graph(n, names=None):
    return Graph(n, (), names=names)


def star_graph(n, names=None):
    """K_{1,n}: center 0 with leaves ``1..n``."""
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)], names=names)


def wheel_graph(n, names=None):
    """
    Wheel on `n` vertices.

    The rim is the cycle ``0..n-2`` and the hub is vertex ``n-1``.
    """
    if n < 4:
        raise ValueError(f"a wheel needs at least 4 vertices, got {n}")
    rim = n - 1
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(i, rim) for i in range(rim)]
    return Graph(n, edges, names=names)


def random_graph(n, rng, p=0.5, connected=False):
    """
    Seeded G(n, p) random graph.

    Parameters
    ----------
    n : int
        Vertex count.
    rng : numpy.random.Generator
        Source of randomness.
    p : float, default=0.5
        Edge probability.
    connected : bool, default=False
        Redraw until the graph is connected.
    """
    while True:
        nxg = nx.gnp_random_graph(n, p, seed=int(rng.integers(2**32)))
        if not connected or n == 0 or nx.is_connected(nxg):
            return Graph.from_networkx(nxg)


# ---------------------------------[Operators]---------------------------------


def induced_subgraph(G, S):
    """
    Subgraph induced by the vertex set `S`.

    Vertex ``i`` of the result is the ``i``-th smallest element of `S`; names
    are carried over.
    """
    S = sorted(set(S))
    for v in S:
        _check_vertex(G, v)
    index = {v: i for i, v in enumerate(S)}
    edges = [(index[u], index[v]) for u, v in G.edges if u in index and v in index]
    names = None if G.names is None else [G.names[v] for v in S]
    return Graph(len(S), edges, names=names)


def delete_vertex(G, v):
    _check_vertex(G, v)
    return induced_subgraph(G, [u for u in G.vertices if u != v])


def delete_edge(G, e):
    """Remove edge `e`, keeping every vertex and its id."""
    u, v = sorted(e)
    if not G.has_edge(u, v):
        raise ValueError(f"{(u, v)} is not an edge")
    return Graph(G.n, [f for f in G.edges if f != (u, v)], names=G.names)


def open_neighborhood(G, v):
    _check_vertex(G, v)
    return G.neighbors(v)


def closed_neighborhood(G, v):
    _check_vertex(G, v)
    return G.neighbors(v) | {v}


def connected_components(G):
    """Connected components as sorted tuples, ordered by smallest vertex."""
    return sorted(tuple(sorted(c)) for c in nx.connected_components(G.to_networkx()))


def is_connected(G):
    return G.n > 0 and len(connected_components(G)) == 1


def component_of(G, v):
    _check_vertex(G, v)
    return tuple(sorted(nx.node_connected_component(G.to_networkx(), v)))


def max_degree(G):
    return max((G.degree(v) for v in G.vertices), default=0)


def min_degree(G):
    return min((G.degree(v) for v in G.vertices), default=0)


def is_clique(G, S):
    S = list(S)
    return all(G.has_edge(u, v) for u, v in itertools.combinations(S, 2))


def clique_ref(G, vertices):
    """
    Validated :class:`CliqueRef`.

    Raises
    ------
    ValueError
        If a vertex is unknown or the vertices do not form a clique of `G`.
    """
    K = CliqueRef(vertices)
    for v in K:
        _check_vertex(G, v)
    if not is_clique(G, K):
        raise ValueError(f"{list(K)} is not a clique")
    return K


def clique_number(G):
    """
    Size of a largest clique.

    Uses the branch-and-bound search of :func:`networkx.max_weight_clique`,
    which bounds with a greedy coloring.
    """
    if G.n == 0:
        return 0
    _, size = nx.max_weight_clique(G.to_networkx(), weight=None)
    return size


def line_graph(G):
    """
    Line graph with deterministic vertex numbering.

    Line-graph vertex ``i`` is the ``i``-th edge of ``G.edges``; two line-graph
    vertices are adjacent iff the host edges share an endpoint.

    Returns
    -------
    LineGraphMap
    """
    e2v = {e: i for i, e in enumerate(G.edges)}
    nxl = nx.line_graph(G.to_networkx())
    edges = []
    for a, b in nxl.edges():
        edges.append((e2v[tuple(sorted(a))], e2v[tuple(sorted(b))]))

    if G.names is None:
        names = [f"{u}-{v}" for u, v in G.edges]
    else:
        names = [G.name(u) + G.name(v) for u, v in G.edges]

    return LineGraphMap(Graph(len(G.edges), edges, names=names), e2v)


def clique_vertex_set_Kv(G, v, L):
    """
    Clique K_v of L(G) formed by the edges incident to `v`.

    Parameters
    ----------
    G : Graph
    v : int
        Vertex of `G`.
    L : LineGraphMap
        Line graph of `G`.
    """
    _check_vertex(G, v)
    return CliqueRef(L.edge_id(v, w) for w in G.neighbors(v))


def neighbor_closure_Sv(G, v):
    """
    S_v(G): `G` with the closed neighborhood of `v` completed to a clique.
    """
    closed = sorted(closed_neighborhood(G, v))
    return Graph(G.n, list(G.edges) + list(itertools.combinations(closed, 2)), names=G.names)


# ---------------------------------[Predicates]---------------------------------


def find_claw(G):
    """
    Lexicographically least induced claw.

    Returns
    -------
    tuple or None
        ``(center, leaf, leaf, leaf)`` with increasing leaves, or None if `G`
        is claw-free.
    """
    for c in G.vertices:
        nbrs = sorted(G.neighbors(c))
        for a, b, d in itertools.combinations(nbrs, 3):
            if not (G.has_edge(a, b) or G.has_edge(a, d) or G.has_edge(b, d)):
                return (c, a, b, d)
    return None


def is_claw_free(G):
    return find_claw(G) is None


def has_triangle(G):
    return any(G.mask(u) & G.mask(v) for u, v in G.edges)


def simplicial_violation(G, K):
    """
    First witness that clique `K` is not simplicial.

    Returns
    -------
    tuple or None
        ``(u, a, b)`` where ``a`` and ``b`` are non-adjacent neighbors of
        ``u`` outside `K`, or None if `K` is simplicial.
    """
    K = set(K)
    for u in sorted(K):
        outside = sorted(G.neighbors(u) - K)
        for a, b in itertools.combinations(outside, 2):
            if not G.has_edge(a, b):
                return (u, a, b)
    return None


def is_simplicial_clique(G, K):
    return is_clique(G, K) and simplicial_violation(G, K) is None


def candidate_cliques(G):
    """
    Every nonempty clique of `G`, smallest first then by sorted vertex list.

    Cliques are produced as subsets of the maximal cliques found by
    Bron-Kerbosch enumeration.
    """
    found = set()
    for mc in nx.find_cliques(G.to_networkx()):
        mc = sorted(mc)
        for k in range(1, len(mc) + 1):
            found.update(itertools.combinations(mc, k))
    return sorted(found, key=lambda c: (len(c), c))


def find_simplicial_clique(G):
    """
    First simplicial clique in :func:`candidate_cliques` order.

    Returns
    -------
    CliqueRef or None
    """
    for c in candidate_cliques(G):
        if simplicial_violation(G, c) is None:
            return CliqueRef(c)
    return None


def all_simplicial_cliques(G):
    return [CliqueRef(c) for c in candidate_cliques(G) if simplicial_violation(G, c) is None]


def is_simplicial_graph(G):
    """Claw-free and containing a simplicial clique."""
    return is_claw_free(G) and find_simplicial_clique(G) is not None


def classify_connected_claw_and_triangle_free(G):
    """
    Classify a connected claw-free triangle-free graph.

    Such a graph is a path or a cycle.

    Returns
    -------
    Classification
        ``kind`` is ``"path"`` or ``"cycle"`` with the vertices in traversal
        order, or ``"not-applicable"`` when a hypothesis fails.
    """
    if not is_connected(G) or has_triangle(G) or not is_claw_free(G):
        return Classification("not-applicable")

    ends = [v for v in G.vertices if G.degree(v) <= 1]
    start = min(ends) if ends else 0
    order = [start]
    prev = None
    while True:
        nxt = sorted(w for w in G.neighbors(order[-1]) if w != prev and w not in order)
        if not nxt:
            break
        prev = order[-1]
        order.append(nxt[0])

    if len(order) != G.n:
        raise RuntimeError(f"traversal visited {len(order)} of {G.n} vertices")

    return Classification("path" if ends else "cycle", tuple(order))


def is_block_graph(G):
    """True iff every biconnected component induces a complete graph."""
    for comp in nx.biconnected_components(G.to_networkx()):
        if not is_clique(G, comp):
            return False
    return True


def blocks(G):
    """Biconnected components as sorted tuples in sorted order."""
    return sorted(tuple(sorted(c)) for c in nx.biconnected_components(G.to_networkx()))
