"""
Stability decisions for graph and hypergraph independence polynomials.

These are exact structural tests. The probes in :mod:`stableset.stability.probes`
are used to cross-check them.
"""

from stableset.base.graph import is_claw_free, is_clique, is_connected
from stableset.base.hypergraph import reduce_hypergraph


def decide_same_phase_stable_independence(G):
    """
    True iff I(G) is same-phase stable, which holds iff `G` is claw-free.
    """
    return is_claw_free(G)


def decide_real_stable_independence(G):
    """
    True iff I(G) is real stable, for connected `G`.

    A connected graph has a real stable independence polynomial iff it is
    complete.

    Raises
    ------
    ValueError
        If `G` is not connected.
    """
    if not is_connected(G):
        raise ValueError("real stability of I(G) is only decided for connected graphs")
    return is_clique(G, G.vertices)


def find_induced_p3(G):
    """
    First induced path ``(u, v, w)`` on three vertices, or None.

    The middle vertex ``v`` is the smallest possible, then ``u < w``.
    """
    for v in G.vertices:
        nbrs = sorted(G.neighbors(v))
        for i, u in enumerate(nbrs):
            for w in nbrs[i + 1:]:
                if not G.has_edge(u, w):
                    return (u, v, w)
    return None


def decide_hypergraph_same_phase(H):
    """
    True iff the independence polynomial of `H` is same-phase stable.

    After :func:`reduce_hypergraph` every edge must have two vertices and the
    resulting graph must be claw-free.
    """
    R = reduce_hypergraph(H)
    return R.is_two_uniform() and is_claw_free(R.underlying_graph())
