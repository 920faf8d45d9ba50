"""
Graph polynomials: independence, vertex matching and edge matching.

All three are multi-affine with one variable per vertex (per edge for the edge
matching polynomial). Variables are the host graph's vertex ids, so
polynomials of induced subgraphs taken with ``within`` live in the same ring
as the polynomial of the whole graph.
"""

import itertools

from functools import lru_cache

from stableset.base.graph import closed_neighborhood, delete_edge, line_graph

from .multivariate import MultivariatePoly
from .univariate import UnivariatePoly


def _bits(mask):
    v = 0
    while mask:
        if mask & 1:
            yield v
        mask >>= 1
        v += 1


def _vertex_mask(G, within):
    if within is None:
        return (1 << G.n) - 1
    mask = 0
    for v in within:
        if not 0 <= v < G.n:
            raise ValueError(f"unknown vertex {v} for graph on {G.n} vertices")
        mask |= 1 << v
    return mask


def _vertex_names(G):
    return {v: G.name(v) for v in G.vertices}


def _poly_from_masks(masks, names):
    terms = {}
    for m, c in masks.items():
        terms[tuple((v, 1) for v in _bits(m))] = c
    return MultivariatePoly._raw({k: c for k, c in terms.items() if c}, names)


def independence_poly(G, within=None):
    """
    Multivariate independence polynomial.

    Sum over independent vertex sets ``S`` of the product of ``x_v`` for
    ``v`` in ``S``. Computed with the vertex-deletion recursion
    ``I(G) = I(G - v) + x_v I(G - N[v])`` memoized on the remaining vertex set
    as a bitmask; the cache lives for one call.

    Parameters
    ----------
    G : Graph
        Host graph.
    within : iterable of int, default=None
        Restrict to the subgraph induced by these vertices. Variables keep the
        host ids.

    Returns
    -------
    MultivariatePoly

    See Also
    --------
    independence_poly_bruteforce : subset enumeration used as an oracle.

    Examples
    --------
    >>> from stableset.base import path_graph
    >>> str(independence_poly(path_graph(3)))
    '1 + x_0 + x_1 + x_2 + x_0 x_2'
    """
    closed = [G.mask(v) | (1 << v) for v in G.vertices]

    @lru_cache(maxsize=None)
    def sets(mask):
        if not mask:
            return (0,)
        low = mask & -mask
        v = low.bit_length() - 1
        without = sets(mask & ~low)
        with_v = sets(mask & ~closed[v])
        return without + tuple(s | low for s in with_v)

    masks = sets(_vertex_mask(G, within))
    return _poly_from_masks({m: 1 for m in masks}, _vertex_names(G))


def independence_poly_bruteforce(G, within=None):
    """Independence polynomial by enumerating every vertex subset."""
    verts = sorted(_bits(_vertex_mask(G, within)))
    if len(verts) > 20:
        raise ValueError(f"subset enumeration limited to 20 vertices, got {len(verts)}")
    found = []
    for k in range(len(verts) + 1):
        for S in itertools.combinations(verts, k):
            if not any(G.has_edge(u, v) for u, v in itertools.combinations(S, 2)):
                found.append(S)
    return MultivariatePoly.from_sets(found, names=_vertex_names(G))


def vertex_matching_poly(G, within=None):
    """
    Vertex matching polynomial.

    Sum over matchings ``M`` of the product of ``-x_u x_v`` over edges of
    ``M``. A monomial records the matched vertex set, so its coefficient is
    ``(-1)^|M|`` times the number of perfect matchings of that set.

    Parameters
    ----------
    G : Graph
        Host graph.
    within : iterable of int, default=None
        Restrict to the subgraph induced by these vertices.

    Returns
    -------
    MultivariatePoly

    See Also
    --------
    vertex_matching_poly_map : same polynomial via the multi-affine part.
    """
    nbr = [G.mask(v) for v in G.vertices]

    @lru_cache(maxsize=None)
    def covers(mask):
        if not mask:
            return {0: 1}
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask & ~low
        out = dict(covers(rest))
        for w in _bits(nbr[v] & rest):
            pair = low | (1 << w)
            for m, c in covers(rest & ~(1 << w)).items():
                out[m | pair] = out.get(m | pair, 0) - c
        return out

    return _poly_from_masks(covers(_vertex_mask(G, within)), _vertex_names(G))


def vertex_matching_diagonal(G):
    """
    Diagonal of the vertex matching polynomial, ``sum of (-1)^k m_k x^(2k)``
    with ``m_k`` the number of ``k``-edge matchings.

    Counts matchings by size without building the multivariate polynomial,
    so it stays cheap on graphs where that polynomial has too many terms.

    Returns
    -------
    UnivariatePoly
    """
    nbr = [G.mask(v) for v in G.vertices]

    @lru_cache(maxsize=None)
    def counts(mask):
        if not mask:
            return (1,)
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask & ~low
        out = list(counts(rest))
        for w in _bits(nbr[v] & rest):
            sub = counts(rest & ~(1 << w))
            if len(out) < len(sub) + 1:
                out.extend([0] * (len(sub) + 1 - len(out)))
            for k, c in enumerate(sub):
                out[k + 1] += c
        return tuple(out)

    coeffs = []
    for k, m in enumerate(counts((1 << G.n) - 1)):
        coeffs.extend([(-1) ** k * m, 0])
    return UnivariatePoly(coeffs)


# --------------------------[Relative polynomials]--------------------------


def _bump(mono, labels):
    acc = dict(mono)
    for t in labels:
        acc[t] = acc.get(t, 0) + 1
    return tuple(sorted(acc.items()))


def _solve_masks(start, deps, combine):
    # memoized recursion over vertex masks, run with an explicit stack so
    # trees deeper than the interpreter recursion limit are fine
    memo = {0: {(): 1}}
    stack = [start]
    while stack:
        m = stack[-1]
        if m in memo:
            stack.pop()
            continue
        needed = deps(m)
        missing = [d for d in needed if d not in memo]
        if missing:
            stack.extend(missing)
            continue
        memo[m] = combine(m, [memo[d] for d in needed])
        stack.pop()
    return memo[start]


def _labeled_result(terms, labeling):
    names = {}
    if labeling.target_names is not None:
        names = dict(enumerate(labeling.target_names))
    return MultivariatePoly._raw({m: c for m, c in terms.items() if c}, names)


def relative_independence_poly(G, labeling, within=None):
    """
    Relative independence polynomial of `G` along `labeling`.

    Equal to ``relative_poly(independence_poly(G, within), labeling)`` but
    aggregates coefficients per labeled monomial at every step of the
    recursion, so it never lists the independent sets of `G`. This keeps tree
    structures with many independent sets tractable.

    Parameters
    ----------
    G : Graph
        Source graph, usually a tree structure.
    labeling : Labeling
        Map from the vertices of `G` into the target graph.
    within : iterable of int, default=None
        Restrict to the subgraph induced by these vertices.

    Returns
    -------
    MultivariatePoly
        Polynomial over the target vertices.
    """
    closed = [G.mask(v) | (1 << v) for v in G.vertices]
    lab = labeling.map

    def deps(mask):
        low = mask & -mask
        v = low.bit_length() - 1
        return [mask & ~low, mask & ~closed[v]]

    def combine(mask, polys):
        v = (mask & -mask).bit_length() - 1
        out = dict(polys[0])
        for m, c in polys[1].items():
            k = _bump(m, (lab[v],))
            out[k] = out.get(k, 0) + c
        return out

    return _labeled_result(_solve_masks(_vertex_mask(G, within), deps, combine), labeling)


def relative_vertex_matching_poly(G, labeling, within=None):
    """
    Relative vertex matching polynomial of `G` along `labeling`.

    See Also
    --------
    relative_independence_poly : same aggregation for independent sets.
    """
    nbr = [G.mask(v) for v in G.vertices]
    lab = labeling.map

    def deps(mask):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask & ~low
        return [rest] + [rest & ~(1 << w) for w in _bits(nbr[v] & rest)]

    def combine(mask, polys):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask & ~low
        out = dict(polys[0])
        for w, sub in zip(_bits(nbr[v] & rest), polys[1:]):
            for m, c in sub.items():
                k = _bump(m, (lab[v], lab[w]))
                out[k] = out.get(k, 0) - c
        return out

    return _labeled_result(_solve_masks(_vertex_mask(G, within), deps, combine), labeling)


def vertex_matching_poly_map(G):
    """
    Vertex matching polynomial as the multi-affine part of the product of
    ``1 - x_u x_v`` over all edges.
    """
    p = MultivariatePoly.constant(1)
    for u, v in G.edges:
        factor = MultivariatePoly({(): 1, ((u, 1), (v, 1)): -1})
        p = (p * factor).multi_affine_part()
    p.names = _vertex_names(G)
    return p


def edge_matching_poly(G, L=None):
    """
    Edge matching polynomial.

    Sum over matchings of the product of ``x_e``. Variable ``e`` is the
    line-graph vertex id of the edge.

    Parameters
    ----------
    G : Graph
        Host graph.
    L : LineGraphMap, default=None
        Line graph of `G`; computed when None.
    """
    if L is None:
        L = line_graph(G)
    nbr = [G.mask(v) for v in G.vertices]

    @lru_cache(maxsize=None)
    def matchings(mask):
        if not mask:
            return (0,)
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask & ~low
        out = matchings(rest)
        for w in _bits(nbr[v] & rest):
            e = 1 << L.edge_id(v, w)
            out = out + tuple(m | e for m in matchings(rest & ~(1 << w)))
        return out

    names = {i: L.line_graph.name(i) for i in L.line_graph.vertices}
    return _poly_from_masks({m: 1 for m in matchings((1 << G.n) - 1)}, names)


def edge_to_vertex_substitution(p, G, L=None):
    """
    Send each edge variable ``x_e``, ``e = uw``, to ``-x_u x_w``.

    Maps the edge matching polynomial (and its relative forms) to the vertex
    matching polynomial.
    """
    if L is None:
        L = line_graph(G)
    images = {i: (-1, ((u, 1), (w, 1))) for (u, w), i in L.edge_to_vertex.items()}
    return p.substitute_monomials(images, names=_vertex_names(G))


def hypergraph_independence_poly(H):
    """
    Independence polynomial of a hypergraph by subset enumeration.

    A set is independent when it contains no edge.

    Raises
    ------
    ValueError
        For more than 20 vertices.
    """
    if H.n > 20:
        raise ValueError(f"subset enumeration limited to 20 vertices, got {H.n}")
    edge_masks = [sum(1 << v for v in e) for e in H.edges]
    found = []
    for S in range(1 << H.n):
        if not any(S & m == m for m in edge_masks):
            found.append(list(_bits(S)))
    return MultivariatePoly.from_sets(found)


def edge_recurrence_rhs(G, e):
    """
    Right side of ``I(G) = I(G - e) - x_u x_w I(G - (N[u] | N[w]))``.
    """
    u, w = sorted(e)
    rest = set(G.vertices) - closed_neighborhood(G, u) - closed_neighborhood(G, w)
    monomial = MultivariatePoly({((u, 1), (w, 1)): 1})
    return independence_poly(delete_edge(G, (u, w))) - monomial * independence_poly(G, within=rest)


def clique_expansion(G, K):
    """
    Parts of ``I(G) = I(G - K) + sum over v in K of x_v I(G - N[v])``.

    Returns
    -------
    tuple
        ``(I(G - K), [(v, I(G - N[v])), ...])``.
    """
    K = sorted(K)
    base = independence_poly(G, within=set(G.vertices) - set(K))
    parts = [(v, independence_poly(G, within=set(G.vertices) - closed_neighborhood(G, v))) for v in K]
    return base, parts
