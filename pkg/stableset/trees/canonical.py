"""
Rooted, label-preserving isomorphism by canonical strings.
"""

import networkx as nx

from .structures import CliqueTreeStruct, LabeledTree


def canonical_tree(T):
    """
    Canonical string of a rooted labeled tree.

    A node encodes as ``(label child child ...)`` with the child encodings
    sorted, so two trees get the same string iff they are isomorphic by a
    root and label preserving map.
    """
    if T.size == 0:
        return "()"
    kids = T.children()

    def enc(x):
        inner = "".join(sorted(enc(c) for c in kids[x]))
        return f"({T.labels[x]}{inner})"

    return enc(T.root)


def canonical_clique_tree(S):
    """
    Canonical string of a rooted labeled block graph.

    The block graph is encoded through its block-cut tree: vertex nodes carry
    their label (and a ``*`` mark when they belong to the root clique), block
    nodes group their member vertices. The tree is rooted at the root-clique
    vertex when the root clique has one vertex, and at the block holding the
    root clique otherwise.

    Raises
    ------
    ValueError
        If `S` is not connected, or no block holds the root clique.
    """
    G = S.graph
    if G.n == 0:
        return "{}"
    nxg = G.to_networkx()
    if not nx.is_connected(nxg):
        raise ValueError("clique tree is not connected")

    block_list = [frozenset(b) for b in nx.biconnected_components(nxg)]
    member_of = {v: [] for v in G.vertices}
    for i, b in enumerate(block_list):
        for v in b:
            member_of[v].append(i)

    root = set(S.root_clique)

    def enc_vertex(v, from_block):
        mark = "*" if v in root else ""
        inner = "".join(sorted(enc_block(b, v) for b in member_of[v] if b != from_block))
        return f"[{S.labels[v]}{mark}{inner}]"

    def enc_block(b, from_vertex):
        inner = "".join(sorted(enc_vertex(v, b) for v in block_list[b] if v != from_vertex))
        return "{" + inner + "}"

    if len(root) == 1:
        return enc_vertex(next(iter(root)), None)

    for i, b in enumerate(block_list):
        if root <= b:
            return enc_block(i, None)
    raise ValueError(f"no block holds root clique {sorted(root)}")


def rooted_labeled_isomorphic(A, B):
    """
    True iff `A` and `B` are isomorphic by a map preserving the root (or root
    clique) and the labels.

    Parameters
    ----------
    A, B : LabeledTree or CliqueTreeStruct
        Structures of the same kind.

    Raises
    ------
    TypeError
        If `A` and `B` are of different kinds.
    """
    if isinstance(A, LabeledTree) and isinstance(B, LabeledTree):
        return A.size == B.size and canonical_tree(A) == canonical_tree(B)
    if isinstance(A, CliqueTreeStruct) and isinstance(B, CliqueTreeStruct):
        if A.size != B.size or len(A.root_clique) != len(B.root_clique):
            return False
        return canonical_clique_tree(A) == canonical_clique_tree(B)
    raise TypeError(f"cannot compare {type(A).__name__} with {type(B).__name__}")
