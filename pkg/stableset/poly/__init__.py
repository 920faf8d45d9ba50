from .univariate import UnivariatePoly, RayDirection, to_fraction
from .multivariate import MultivariatePoly, SplitViolation, TermCapExceeded, exact_divide, set_term_cap, term_cap
from .labeling import Labeling, relative_poly
from .splitting import Splitting, proper_splitting
from .graph_polys import (
    clique_expansion,
    edge_matching_poly,
    edge_recurrence_rhs,
    edge_to_vertex_substitution,
    hypergraph_independence_poly,
    relative_independence_poly,
    relative_vertex_matching_poly,
    independence_poly,
    independence_poly_bruteforce,
    vertex_matching_poly,
    vertex_matching_diagonal,
    vertex_matching_poly_map,
)
from . import closure


def univariate_restriction(p, t):
    """
    Univariate restriction ``p(t z)``.

    Parameters
    ----------
    p : MultivariatePoly
        Polynomial to restrict.
    t : RayDirection
        Positive direction covering every variable of `p`.

    Returns
    -------
    UnivariatePoly

    Raises
    ------
    ValueError
        If `t` has no entry for a variable of `p`.
    """
    return p.restrict(t)
