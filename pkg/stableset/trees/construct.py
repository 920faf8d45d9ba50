"""
Path tree, induced path tree and simplicial clique tree constructions.

Every construction numbers its nodes deterministically: children follow the
increasing order of their source vertex so the same graph always produces the
same tree.
"""

import itertools

from stableset.base.config import node_cap
from stableset.base.errors import ClawPresent, NodeCapExceeded, NotSimplicialClique
from stableset.base.graph import CliqueRef, Graph, clique_ref, find_claw, is_block_graph
from stableset.poly.labeling import Labeling

from .structures import CliqueTreeStruct, LabeledTree


def _bits(mask):
    v = 0
    while mask:
        if mask & 1:
            yield v
        mask >>= 1
        v += 1


def _resolve_cap(cap):
    if cap is None:
        return node_cap()
    return int(cap)


# ----------------------------[Path enumeration]----------------------------


def _next_vertices(G, path_last, blocked):
    return list(_bits(G.mask(path_last) & ~blocked))


def _walk(G, v, induced, visit):
    """
    Depth first search over the (induced) paths starting at `v`.

    `visit(depth_parent, w)` is called for every new path end `w` and returns
    the node id to use as the parent of its extensions. Returning None stops
    the search.
    """
    # blocked holds vertices already on the path, plus for induced paths the
    # closed neighborhoods of all path vertices but the last
    def recurse(last, node, on_path, closed_before):
        blocked = closed_before if induced else on_path
        for w in _next_vertices(G, last, blocked):
            child = visit(node, w)
            if child is None:
                return False
            nxt_closed = closed_before | (1 << last) | G.mask(last)
            if not recurse(w, child, on_path | (1 << w), nxt_closed):
                return False
        return True

    recurse(v, 0, 1 << v, 1 << v)


def path_count(G, v, induced=False, limit=None):
    """
    Count the (induced) paths in `G` starting at `v`.

    Parameters
    ----------
    G : Graph
    v : int
        Start vertex.
    induced : bool, default=False
        Count induced paths only.
    limit : int, default=None
        Stop counting once the count exceeds `limit`.

    Returns
    -------
    int
        Path count including the single-vertex path, or ``limit + 1`` if the
        search was cut short.
    """
    count = 1

    def visit(parent, w):
        nonlocal count
        count += 1
        if limit is not None and count > limit:
            return None
        return count - 1

    _walk(G, v, induced, visit)
    return count


def _build_path_tree(G, v, induced, cap, target_names):
    cap = _resolve_cap(cap)
    projected = path_count(G, v, induced=induced, limit=cap)
    if projected > cap:
        raise NodeCapExceeded(projected, cap)

    parent = [-1]
    labels = [v]

    def visit(node, w):
        parent.append(node)
        labels.append(w)
        return len(labels) - 1

    _walk(G, v, induced, visit)

    T = LabeledTree(parent, Labeling(labels, target_names=target_names))
    if not T.labeling.is_homomorphism(T.tree, G):
        raise RuntimeError("tree labeling is not a homomorphism")
    return T


def path_tree(G, v, cap=None):
    """
    Godsil path tree T_v(G).

    Nodes correspond to the paths of `G` starting at `v`; a node's children are
    its one-vertex extensions. Each node is labeled with the last vertex of its
    path.

    Parameters
    ----------
    G : Graph
        Source graph.
    v : int
        Root vertex.
    cap : int, default=None
        Maximum node count. Defaults to the configured `node_cap`.

    Returns
    -------
    LabeledTree

    Raises
    ------
    NodeCapExceeded
        If the tree would have more than `cap` nodes.

    See Also
    --------
    stableset.trees.induced_path_tree : Neighbor-avoiding variant.
    """
    if not 0 <= v < G.n:
        raise ValueError(f"vertex {v} not in graph with {G.n} vertices")
    return _build_path_tree(G, v, False, cap, G.names)


def induced_path_tree(G, v, cap=None):
    """
    Induced path tree T∠_v(G).

    Like :func:`path_tree`, but only induced paths are kept: a path is
    extended by a neighbor of its last vertex that is not adjacent to any
    earlier path vertex.

    Parameters
    ----------
    G : Graph
        Source graph.
    v : int
        Root vertex.
    cap : int, default=None
        Maximum node count. Defaults to the configured `node_cap`.

    Returns
    -------
    LabeledTree
    """
    if not 0 <= v < G.n:
        raise ValueError(f"vertex {v} not in graph with {G.n} vertices")
    return _build_path_tree(G, v, True, cap, G.names)


def graph_with_star(G, K):
    """
    G*: `G` plus a new vertex ``*`` (id ``G.n``) adjacent exactly to `K`.
    """
    K = clique_ref(G, K)
    if G.names is not None:
        names = list(G.names) + ["*"]
    else:
        names = [str(u) for u in G.vertices] + ["*"]
    return Graph(G.n + 1, list(G.edges) + [(k, G.n) for k in K], names=names)


def induced_path_tree_at_clique(G, K, cap=None):
    """
    Induced path tree T∠_K(G) rooted at a clique.

    Built as ``induced_path_tree(G*, *)`` where ``*`` is attached to `K`. The
    root is labeled ``G.n``, the id of ``*`` in G*.

    Parameters
    ----------
    G : Graph
    K : iterable of int
        Clique of `G`. May be empty.
    cap : int, default=None
        Maximum node count.

    Returns
    -------
    LabeledTree
        Labels are vertices of G*.

    Raises
    ------
    ValueError
        If `K` is not a clique of `G`.
    """
    star = graph_with_star(G, K)
    return _build_path_tree(star, G.n, True, cap, star.names)


# -------------------------[Simplicial clique tree]-------------------------


def simplicial_clique_tree(G, K, cap=None):
    """
    Simplicial clique tree T⊠_K(G).

    The root clique is a copy of `K`. Below each ``u`` in `K` hangs
    T⊠_{J_u}(G - K) with ``J_u = N(u) - K``, and ``u`` is joined to every
    vertex of that subtree's root clique. When ``J_u`` is empty nothing is
    attached.

    Parameters
    ----------
    G : Graph
        Claw-free source graph.
    K : iterable of int
        Simplicial clique of `G`. The empty clique gives the empty structure.
    cap : int, default=None
        Maximum node count. Defaults to the configured `node_cap`.

    Returns
    -------
    CliqueTreeStruct

    Raises
    ------
    ClawPresent
        If `G` has an induced claw.
    NotSimplicialClique
        If at some step ``J_u`` is not a clique. The error names ``u`` (a
        vertex of `G`) and a non-adjacent pair.
    NodeCapExceeded
        If the structure grows past `cap` nodes.
    """
    claw = find_claw(G)
    if claw is not None:
        raise ClawPresent(claw)
    K = clique_ref(G, K)
    cap = _resolve_cap(cap)

    labels = []
    edges = []

    def build(avail, clique):
        ids = []
        for u in clique:
            if len(labels) >= cap:
                raise NodeCapExceeded(len(labels) + 1, cap)
            labels.append(u)
            ids.append(len(labels) - 1)
        edges.extend(itertools.combinations(ids, 2))

        rest = avail
        for u in clique:
            rest &= ~(1 << u)
        for u, uid in zip(clique, ids):
            J = list(_bits(G.mask(u) & rest))
            for a, b in itertools.combinations(J, 2):
                if not G.has_edge(a, b):
                    raise NotSimplicialClique(u, (a, b))
            for child in build(rest, J):
                edges.append((uid, child))
        return ids

    full = (1 << G.n) - 1
    root = build(full, list(K))

    names = [G.name(u) for u in labels]
    struct = CliqueTreeStruct(
        Graph(len(labels), edges, names=names),
        CliqueRef(root),
        Labeling(labels, target_names=G.names),
    )
    if not is_block_graph(struct.graph):
        raise RuntimeError(f"clique tree of {list(K)} is not a block graph")
    if not struct.labeling.is_homomorphism(struct.graph, G):
        raise RuntimeError("clique tree labeling is not a homomorphism")
    return struct


# -----------------------------[Tree line graphs]-----------------------------


def _child_label(parent_label, child_label):
    return child_label


def tree_line_graph(T, edge_label=None, target_names=None):
    """
    Line graph of a labeled tree as a rooted clique structure.

    Each tree edge becomes a vertex, identified with its child node. The root
    clique is formed by the edges at the root.

    Parameters
    ----------
    T : LabeledTree
    edge_label : callable, default=None
        ``edge_label(parent_label, child_label)`` gives the label of the edge.
        Defaults to the child's label.
    target_names : sequence of str, default=None
        Names of the label targets. Defaults to those of `T`.

    Returns
    -------
    CliqueTreeStruct
    """
    if edge_label is None:
        edge_label = _child_label
        if target_names is None:
            target_names = T.labeling.target_names

    nodes = [i for i in range(T.size) if T.parent[i] >= 0]
    index = {c: i for i, c in enumerate(nodes)}
    kids = T.children()

    edges = []
    for x in range(T.size):
        incident = [index[c] for c in kids[x]]
        if T.parent[x] >= 0:
            incident.append(index[x])
        edges.extend(itertools.combinations(incident, 2))

    labels = [edge_label(T.labels[T.parent[c]], T.labels[c]) for c in nodes]
    labeling = Labeling(labels, target_names=target_names)
    names = [labeling.label_name(i) for i in range(len(labels))]
    return CliqueTreeStruct(
        Graph(len(nodes), edges, names=names),
        CliqueRef(index[c] for c in kids[0]) if T.size else CliqueRef(),
        labeling,
    )
