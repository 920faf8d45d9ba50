"""
Checks that path trees, induced path trees, clique trees and line graphs fit
together.

For a graph G with vertex v and K_v the clique of L(G) made of the edges at v,
three isomorphisms are checked:

* upper: T∠_{K_v}(L(G)) and T_v(G), with tree nodes of T_v(G) relabeled by
  the L(G) vertex of the edge to their parent;
* lower: L(T∠_{K_v}(L(G))) and T⊠_{K_v}(L(G));
* outer: L(T_v(G)) and T⊠_{K_v}(L(G)).
"""

from dataclasses import dataclass

from stableset.base.graph import clique_vertex_set_Kv, line_graph
from stableset.poly.labeling import Labeling

from .canonical import rooted_labeled_isomorphic
from .construct import (
    induced_path_tree_at_clique,
    path_tree,
    simplicial_clique_tree,
    tree_line_graph,
)
from .structures import LabeledTree


@dataclass(frozen=True)
class DiagramReport:
    """Outcome of :func:`verify_commuting_diagram` for one root vertex."""

    vertex: int
    upper: bool
    lower: bool
    outer: bool
    tree_size: int = 0

    @property
    def holds(self):
        return self.upper and self.lower and self.outer

    def to_json(self):
        return {
            "vertex": self.vertex,
            "upper": self.upper,
            "lower": self.lower,
            "outer": self.outer,
            "holds": self.holds,
            "tree_size": self.tree_size,
        }


def edge_relabeled_path_tree(T, L):
    """
    Relabel a path tree by line-graph vertices.

    Every non-root node gets the L(G) vertex of the edge joining it to its
    parent; the root gets ``len(L.line_graph_edges)``, the id of ``*`` in
    L(G)*.

    Parameters
    ----------
    T : LabeledTree
        Path tree of G.
    L : LineGraphMap
        Line graph of G.
    """
    star = L.line_graph.n
    labels = [
        star if p < 0 else L.edge_id(T.labels[p], T.labels[i])
        for i, p in enumerate(T.parent)
    ]
    names = None
    if L.line_graph.names is not None:
        names = list(L.line_graph.names) + ["*"]
    return LabeledTree(T.parent, Labeling(labels, target_names=names))


def verify_commuting_diagram(G, v, cap=None):
    """
    Check the three tree isomorphisms at vertex `v`.

    Parameters
    ----------
    G : Graph
    v : int
        Root vertex.
    cap : int, default=None
        Node cap for each construction.

    Returns
    -------
    DiagramReport

    Raises
    ------
    NodeCapExceeded
        If one of the constructions grows past the cap.
    """
    if not 0 <= v < G.n:
        raise ValueError(f"vertex {v} not in graph with {G.n} vertices")

    L = line_graph(G)
    LG = L.line_graph
    Kv = clique_vertex_set_Kv(G, v, L)

    Tv = path_tree(G, v, cap=cap)
    induced = induced_path_tree_at_clique(LG, Kv, cap=cap)
    clique_tree = simplicial_clique_tree(LG, Kv, cap=cap)

    upper = rooted_labeled_isomorphic(induced, edge_relabeled_path_tree(Tv, L))
    lower = rooted_labeled_isomorphic(tree_line_graph(induced), clique_tree)
    outer = rooted_labeled_isomorphic(
        tree_line_graph(Tv, edge_label=L.edge_id, target_names=LG.names),
        clique_tree,
    )
    return DiagramReport(v, upper, lower, outer, tree_size=Tv.size)
