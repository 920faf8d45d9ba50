from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True)
class Hypergraph:
    """
    Finite hypergraph on vertices ``0..n-1``.

    Edges are stored as a sorted tuple of sorted vertex tuples; duplicate
    edges collapse. The empty edge is rejected since it would make every set
    dependent.
    """

    n: int
    edges: tuple = ()

    def __post_init__(self):
        n = int(self.n)
        edges = set()
        for e in self.edges:
            e = tuple(sorted(set(int(v) for v in e)))
            if not e:
                raise ValueError("hypergraph edges must be nonempty")
            bad = [v for v in e if not 0 <= v < n]
            if bad:
                raise ValueError(f"edge {e} has vertices {bad} outside 0..{n - 1}")
            edges.add(e)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(edges, key=lambda e: (len(e), e))))

    @classmethod
    def from_graph(cls, G):
        return cls(G.n, G.edges)

    def is_two_uniform(self):
        return all(len(e) == 2 for e in self.edges)

    def underlying_graph(self):
        """Graph on the same vertices with the size-2 edges."""
        if not self.is_two_uniform():
            raise ValueError("only 2-uniform hypergraphs have an underlying graph")
        return Graph(self.n, self.edges)

    def is_independent(self, S):
        S = set(S)
        return not any(S.issuperset(e) for e in self.edges)


def _drop_comparable(edges):
    # keep only edges that contain no other edge
    return [e for e in edges if not any(f != e and set(f) <= set(e) for f in edges)]


def reduce_hypergraph(H, singletons_first=False):
    """
    Reduce a hypergraph to one with no comparable edges and no size-1 edges.

    Edges containing another edge are deleted, then every vertex covered by a
    size-1 edge is deleted together with every edge through it. The two steps
    repeat until nothing changes. Surviving vertices are renumbered in
    increasing order.

    Parameters
    ----------
    H : Hypergraph
        Hypergraph to reduce.
    singletons_first : bool, default=False
        Run the size-1 step before the comparable-edge step in each round.
        The fixed point does not depend on the order.

    Returns
    -------
    Hypergraph
        The reduced hypergraph.
    """
    vertices = list(range(H.n))
    edges = [tuple(e) for e in H.edges]

    def drop_singletons(vertices, edges):
        dead = {e[0] for e in edges if len(e) == 1}
        if not dead:
            return vertices, edges
        vertices = [v for v in vertices if v not in dead]
        # an edge through a dead vertex can never lie inside an independent set
        edges = [e for e in edges if not dead.intersection(e)]
        return vertices, sorted(set(edges))

    while True:
        before = (len(vertices), sorted(edges))
        if singletons_first:
            vertices, edges = drop_singletons(vertices, edges)
            edges = _drop_comparable(edges)
        else:
            edges = _drop_comparable(edges)
            vertices, edges = drop_singletons(vertices, edges)
        if (len(vertices), sorted(edges)) == before:
            break

    index = {v: i for i, v in enumerate(vertices)}
    return Hypergraph(len(vertices), [tuple(index[v] for v in e) for e in edges])


def random_hypergraph(n, rng, max_edges=6, max_size=4):
    """Seeded random hypergraph with edges of size 1..`max_size`."""
    edges = []
    for _ in range(int(rng.integers(0, max_edges + 1))):
        if n == 0:
            break
        size = int(rng.integers(1, min(max_size, n) + 1))
        edges.append(tuple(rng.choice(n, size=size, replace=False).tolist()))
    return Hypergraph(n, edges)
