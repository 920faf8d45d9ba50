"""
Exact divisibility certificates for tree polynomials.

For a simplicial clique K of a claw-free graph G, I(G) divides the relative
independence polynomial of the clique tree T⊠_K(G). For any graph G and
vertex v, μ_V(G) divides the relative vertex matching polynomial of the path
tree T_v(G). Each certificate checks both an exact ratio identity and the
exact quotient.
"""

from dataclasses import dataclass

from stableset.base.errors import NotSimplicialClique
from stableset.base.graph import (
    clique_ref,
    clique_vertex_set_Kv,
    is_connected,
    line_graph,
    simplicial_violation,
)
from stableset.poly.graph_polys import (
    edge_to_vertex_substitution,
    independence_poly,
    relative_independence_poly,
    relative_vertex_matching_poly,
    vertex_matching_poly,
)
from stableset.poly.multivariate import exact_divide
from stableset.trees.construct import path_tree, simplicial_clique_tree


@dataclass(frozen=True)
class DivisibilityCertificate:
    """
    Exact evidence that a graph polynomial divides a tree polynomial.

    Attributes
    ----------
    kind : str
        ``"independence"`` or ``"matching"``.
    root : tuple
        The clique ``K`` or the vertex ``(v,)``.
    tree_size : int
        Number of nodes of the tree structure.
    quotient : MultivariatePoly or None
        Exact quotient, None if the division failed.
    ratio_identity : bool
        Whether the cross-multiplied ratio identity holds.
    routes_agree : bool or None
        For ``"matching"``, whether the quotient obtained through the line
        graph's clique tree equals the direct one.
    """

    kind: str
    root: tuple
    tree_size: int
    quotient: object
    ratio_identity: bool
    routes_agree: bool = None

    @property
    def divides(self):
        return self.quotient is not None

    @property
    def holds(self):
        return self.divides and self.ratio_identity and self.routes_agree is not False

    def to_json(self):
        return {
            "kind": self.kind,
            "root": list(self.root),
            "tree_size": self.tree_size,
            "quotient": None if self.quotient is None else self.quotient.to_text(),
            "ratio_identity": self.ratio_identity,
            "divides": self.divides,
            "routes_agree": self.routes_agree,
            "holds": self.holds,
        }


def _require_connected(G):
    if not is_connected(G):
        raise ValueError("divisibility is only certified for connected graphs")


def verify_divisibility(G, K, cap=None):
    """
    Certify that I(G) divides the relative I(T⊠_K(G)).

    Checks ``I(G) I(T - K) = I(T) I(G - K)`` for the relative polynomials of
    ``T = T⊠_K(G)`` and computes the exact quotient ``I(T) / I(G)``.

    Parameters
    ----------
    G : Graph
        Connected claw-free graph.
    K : iterable of int
        Simplicial clique of `G`.
    cap : int, default=None
        Node cap for the clique tree.

    Returns
    -------
    DivisibilityCertificate

    Raises
    ------
    ValueError
        If `G` is not connected or `K` is not a clique.
    NotSimplicialClique
        If `K` is not simplicial.
    ClawPresent
        If `G` has a claw.
    """
    _require_connected(G)
    K = clique_ref(G, K)
    bad = simplicial_violation(G, K)
    if bad is not None:
        u, a, b = bad
        raise NotSimplicialClique(u, (a, b))

    T = simplicial_clique_tree(G, K, cap=cap)
    phi = T.labeling
    root = set(T.root_clique)
    rest = [x for x in T.graph.vertices if x not in root]

    IT = relative_independence_poly(T.graph, phi)
    ITK = relative_independence_poly(T.graph, phi, within=rest)
    IG = independence_poly(G)
    IGK = independence_poly(G, within=[v for v in G.vertices if v not in K])

    return DivisibilityCertificate(
        kind="independence",
        root=tuple(K),
        tree_size=T.size,
        quotient=exact_divide(IT, IG),
        ratio_identity=IG * ITK == IT * IGK,
    )


def verify_godsil_matching_divisibility(G, v, cap=None):
    """
    Certify that μ_V(G) divides the relative μ_V(T_v(G)).

    The quotient is computed twice. Directly, from the relative vertex
    matching polynomial of the path tree. And through the line graph, as the
    quotient of the relative I(T⊠_{K_v}(L(G))) by I(L(G)) mapped to vertex
    variables by ``x_e -> -x_u x_w``. Both must agree.

    Parameters
    ----------
    G : Graph
        Connected graph.
    v : int
        Root vertex.
    cap : int, default=None
        Node cap for the trees.

    Returns
    -------
    DivisibilityCertificate
    """
    _require_connected(G)
    if not 0 <= v < G.n:
        raise ValueError(f"vertex {v} not in graph with {G.n} vertices")

    T = path_tree(G, v, cap=cap)
    phi = T.labeling
    tree = T.tree
    MT = relative_vertex_matching_poly(tree, phi)
    MTv = relative_vertex_matching_poly(tree, phi, within=range(1, T.size))
    MG = vertex_matching_poly(G)
    MGv = vertex_matching_poly(G, within=[u for u in G.vertices if u != v])
    direct = exact_divide(MT, MG)

    L = line_graph(G)
    Kv = clique_vertex_set_Kv(G, v, L)
    S = simplicial_clique_tree(L.line_graph, Kv, cap=cap)
    IS = relative_independence_poly(S.graph, S.labeling)
    via_line = exact_divide(IS, independence_poly(L.line_graph))
    if via_line is not None:
        via_line = edge_to_vertex_substitution(via_line, G, L)

    agree = direct is not None and via_line is not None and direct == via_line

    return DivisibilityCertificate(
        kind="matching",
        root=(v,),
        tree_size=T.size,
        quotient=direct,
        ratio_identity=MG * MTv == MT * MGv,
        routes_agree=agree,
    )
