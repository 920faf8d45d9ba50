from dataclasses import dataclass

from stableset.base.graph import CliqueRef, Graph, is_block_graph, is_clique
from stableset.base.graph_io import to_dot
from stableset.poly.labeling import Labeling


@dataclass(frozen=True)
class LabeledTree:
    """
    Rooted tree with a labeling into a source graph.

    Nodes are numbered in preorder with children in increasing label order,
    so the root is node 0.

    Attributes
    ----------
    parent : tuple
        Parent of each node, -1 for the root.
    labeling : Labeling
        Label (source vertex) of each node.
    """

    parent: tuple
    labeling: Labeling

    def __post_init__(self):
        object.__setattr__(self, "parent", tuple(self.parent))
        if len(self.parent) != len(self.labeling):
            raise ValueError(f"{len(self.parent)} nodes but {len(self.labeling)} labels")

    @property
    def root(self):
        return 0

    @property
    def size(self):
        return len(self.parent)

    @property
    def labels(self):
        return self.labeling.map

    @property
    def tree(self):
        edges = [(p, i) for i, p in enumerate(self.parent) if p >= 0]
        names = [self.labeling.label_name(i) for i in range(self.size)]
        return Graph(self.size, edges, names=names)

    def children(self):
        """Children lists indexed by node."""
        kids = [[] for _ in self.parent]
        for i, p in enumerate(self.parent):
            if p >= 0:
                kids[p].append(i)
        return kids

    def root_path(self, node):
        """Labels from the root down to `node`."""
        path = []
        while node >= 0:
            path.append(self.labels[node])
            node = self.parent[node]
        return path[::-1]

    def has_path_property(self, source):
        """
        True iff every root-to-node label sequence is a walk in `source` with
        pairwise distinct labels.
        """
        for node in range(self.size):
            path = self.root_path(node)
            if len(set(path)) != len(path):
                return False
            if not all(source.has_edge(a, b) for a, b in zip(path, path[1:])):
                return False
        return True

    def to_json(self):
        return {
            "parent": list(self.parent),
            "label": list(self.labels),
            "label_name": [self.labeling.label_name(i) for i in range(self.size)],
        }

    def to_dot(self, name="T"):
        return to_dot(self.tree, name=name, root=(0,))


@dataclass(frozen=True)
class CliqueTreeStruct:
    """
    Block graph rooted at a clique, with a labeling into a source graph.

    Attributes
    ----------
    graph : Graph
        The block graph. Node names are label names.
    root_clique : CliqueRef
        Root clique (node ids of `graph`).
    labeling : Labeling
        Label (source vertex) of each node.
    """

    graph: Graph
    root_clique: CliqueRef
    labeling: Labeling

    def __post_init__(self):
        if len(self.labeling) != self.graph.n:
            raise ValueError(f"{self.graph.n} nodes but {len(self.labeling)} labels")
        if not is_clique(self.graph, self.root_clique):
            raise ValueError(f"root {list(self.root_clique)} is not a clique")

    @property
    def size(self):
        return self.graph.n

    @property
    def labels(self):
        return self.labeling.map

    def is_block_graph(self):
        return is_block_graph(self.graph)

    def to_json(self):
        return {
            "label": list(self.labels),
            "label_name": [self.labeling.label_name(i) for i in range(self.size)],
            "edges": [list(e) for e in self.graph.edges],
            "root_clique": list(self.root_clique),
        }

    def to_dot(self, name="T"):
        return to_dot(self.graph, name=name, root=self.root_clique)
