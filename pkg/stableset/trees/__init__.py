from .structures import CliqueTreeStruct, LabeledTree
from .construct import (
    graph_with_star,
    induced_path_tree,
    induced_path_tree_at_clique,
    path_count,
    path_tree,
    simplicial_clique_tree,
    tree_line_graph,
)
from .canonical import canonical_clique_tree, canonical_tree, rooted_labeled_isomorphic
from .diagram import DiagramReport, edge_relabeled_path_tree, verify_commuting_diagram
