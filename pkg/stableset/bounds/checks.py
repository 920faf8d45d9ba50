"""
Root bounds for λ₁ and their exact verification.

Every check returns a :class:`BoundEntry`. Its status is decided by exact
rational sign evaluations and Sturm counts, never by floating point. When a
hypothesis of a bound fails the entry is reported `NOT_APPLICABLE`.
"""

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from stableset.base.graph import (
    clique_number,
    delete_edge,
    delete_vertex,
    is_claw_free,
    is_connected,
    is_simplicial_clique,
    is_simplicial_graph,
    max_degree,
    min_degree,
    neighbor_closure_Sv,
)
from stableset.base.named import schlafli_graph
from stableset.poly.graph_polys import independence_poly, vertex_matching_diagonal
from stableset.poly.univariate import UnivariatePoly
from stableset.stability.roots import count_real_roots

from .lambda1 import compare_lambda, lambda1, root_at_least, root_at_most

HOLDS = "holds"
VIOLATED = "violated"
NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class BoundEntry:
    """
    One checked bound.

    Attributes
    ----------
    name : str
    value : Fraction or None
        The rational bound, when there is one.
    status : str
        `HOLDS`, `VIOLATED` or `NOT_APPLICABLE`.
    proof : dict
        Exact evaluations behind the status, as strings. For a
        `NOT_APPLICABLE` entry, the failed hypothesis under ``"reason"``.
    """

    name: str
    value: Fraction = None
    status: str = NOT_APPLICABLE
    proof: dict = field(default_factory=dict)

    @property
    def holds(self):
        """True, False, or None when not applicable."""
        if self.status == NOT_APPLICABLE:
            return None
        return self.status == HOLDS

    def to_json(self):
        return {
            "name": self.name,
            "value": None if self.value is None else str(self.value),
            "status": self.status,
            "proof": dict(self.proof),
        }


def _entry(name, value, holds, proof):
    return BoundEntry(name, value, HOLDS if holds else VIOLATED, proof)


def _not_applicable(name, reason, value=None):
    return BoundEntry(name, value, NOT_APPLICABLE, {"reason": reason})


def simplicial_upper_bound(omega):
    return Fraction(-1, 4 * (omega - 1))


def check_simplicial_upper_bound(G):
    """
    Check ``λ₁(G) <= -1 / (4 (ω - 1))`` for a connected simplicial graph.
    """
    name = "simplicial_upper"
    if not is_connected(G):
        return _not_applicable(name, "graph is not connected")
    if not is_simplicial_graph(G):
        return _not_applicable(name, "graph is not simplicial")
    omega = clique_number(G)
    if omega < 2:
        return _not_applicable(name, "clique number is 1")
    b = simplicial_upper_bound(omega)
    holds, proof = root_at_most(lambda1(G), b)
    return _entry(name, b, holds, proof)


def check_trivial_lower_bound(G):
    """
    Check ``-1 / ω <= λ₁(G)``.

    The proof records ``"equality": "true"`` when λ₁ is exactly -1/ω, as for
    complete graphs.
    """
    name = "trivial_lower"
    if G.n == 0:
        return _not_applicable(name, "graph has no vertices")
    b = Fraction(-1, clique_number(G))
    holds, proof = root_at_least(lambda1(G), b)
    return _entry(name, b, holds, proof)


def _min_degree_vertex(G):
    d = min_degree(G)
    return min(v for v in G.vertices if G.degree(v) == d)


def check_weak_clawfree_bound(G):
    """
    Check ``λ₁(G) <= -1 / (4 max(ω - 1, δ))`` for a connected claw-free graph.

    The chain ``λ₁(G) <= λ₁(S_v(G)) <= bound`` is verified as well, with
    ``v`` the first vertex of minimum degree and ``S_v(G)`` the graph with the
    closed neighborhood of ``v`` made a clique. The entry is `VIOLATED` when
    any link fails or ``{v}`` is not simplicial in a claw-free ``S_v(G)``;
    the failed links are listed under ``"failed"``.
    """
    name = "weak_clawfree"
    if not is_connected(G):
        return _not_applicable(name, "graph is not connected")
    if not is_claw_free(G):
        return _not_applicable(name, "graph has a claw")
    m = max(clique_number(G) - 1, min_degree(G))
    if m < 1:
        return _not_applicable(name, "max(omega - 1, delta) is 0")

    b = Fraction(-1, 4 * m)
    lam = lambda1(G)
    holds, proof = root_at_most(lam, b)

    v = _min_degree_vertex(G)
    S = neighbor_closure_Sv(G, v)
    lam_s = lambda1(S)
    closure_simplicial = is_claw_free(S) and is_simplicial_clique(S, [v])
    chain_lower = compare_lambda(lam, lam_s) <= 0
    chain_upper, _ = root_at_most(lam_s, b)
    proof = dict(proof)
    proof.update(
        {
            "closure_vertex": str(v),
            "closure_simplicial": str(closure_simplicial).lower(),
            "lambda1_below_closure": str(chain_lower).lower(),
            "closure_below_bound": str(chain_upper).lower(),
        }
    )
    failed = [
        key
        for key, ok in (
            ("bound", holds),
            ("closure_simplicial", closure_simplicial),
            ("lambda1_below_closure", chain_lower),
            ("closure_below_bound", chain_upper),
        )
        if not ok
    ]
    if failed:
        proof["failed"] = ",".join(failed)
    return _entry(name, b, not failed, proof)


def even_part_in_square(p):
    """
    ``q`` with ``p(x) = q(x^2)`` for an even polynomial `p`.

    Raises
    ------
    ValueError
        If `p` has an odd-degree term.
    """
    odd = [k for k, c in enumerate(p.coeffs) if k % 2 and c]
    if odd:
        raise ValueError(f"{p} has odd-degree terms {odd}")
    return UnivariatePoly(p.coeffs[::2], var="y")


def check_heilmann_lieb_matching(G):
    """
    Check that no root of the diagonal vertex matching polynomial has modulus
    below ``1 / (2 sqrt(Δ - 1))``.

    With ``y = x^2`` this becomes: the polynomial ``q(y)``, where
    ``diag μ_V(G)(x) = q(x^2)``, has no root in ``(0, 1 / (4 (Δ - 1)))``.
    """
    name = "heilmann_lieb"
    delta = max_degree(G)
    if delta < 2:
        return _not_applicable(name, "maximum degree below 2")
    q = even_part_in_square(vertex_matching_diagonal(G))
    if q.degree < 1:
        return _not_applicable(name, "matching polynomial is constant")
    r2 = Fraction(1, 4 * (delta - 1))
    count = count_real_roots(q, (0, r2)) - (1 if q(r2) == 0 else 0)
    proof = {
        "squared_radius": str(r2),
        "q": str(q),
        "roots_inside": str(count),
    }
    return _entry(name, r2, count == 0, proof)


def check_lambda1_monotone_vertex(G, v):
    """Check ``λ₁(G - v) <= λ₁(G)``."""
    name = "monotone_vertex"
    if G.n < 2:
        return _not_applicable(name, "deleting the vertex leaves no vertices")
    H = delete_vertex(G, v)
    cmp = compare_lambda(lambda1(H), lambda1(G))
    return _entry(name, None, cmp <= 0, {"vertex": str(v), "comparison": str(cmp)})


def check_lambda1_monotone_edge(G, e):
    """Check ``λ₁(G - e) <= λ₁(G)``."""
    name = "monotone_edge"
    u, w = sorted(e)
    if not G.has_edge(u, w):
        return _not_applicable(name, f"{(u, w)} is not an edge")
    H = delete_edge(G, (u, w))
    cmp = compare_lambda(lambda1(H), lambda1(G))
    return _entry(name, None, cmp <= 0, {"edge": f"{u}-{w}", "comparison": str(cmp)})


def lll_modulus_bound(G):
    """
    Local-lemma lower bound ``1 / (e Δ)`` on the modulus of the roots.

    Informational only, returned as a float. None when Δ is 0.
    """
    delta = max_degree(G)
    if delta == 0:
        return None
    return float(1 / (np.e * delta))


# ------------------------------[Bound report]------------------------------


@dataclass(frozen=True)
class BoundReport:
    """
    All bounds for one graph.

    Attributes
    ----------
    graph_id : str
    omega, max_degree, min_degree : int
    lambda1 : RootInterval
    bounds : tuple of BoundEntry
    lll_bound : float or None
        Informational, not certified.
    """

    graph_id: str
    omega: int
    max_degree: int
    min_degree: int
    lambda1: object
    bounds: tuple
    lll_bound: float = None

    @property
    def violations(self):
        return [b for b in self.bounds if b.status == VIOLATED]

    def to_json(self):
        return {
            "graph_id": self.graph_id,
            "omega": self.omega,
            "max_degree": self.max_degree,
            "min_degree": self.min_degree,
            "lambda1": self.lambda1.to_json(),
            "bounds": [b.to_json() for b in self.bounds],
            "lll_bound": self.lll_bound,
        }


def bound_report(G, graph_id="G"):
    """
    Run every λ₁ bound on `G`.

    Parameters
    ----------
    G : Graph
        Graph with at least one vertex.
    graph_id : str, default="G"
        Name used in reports.

    Returns
    -------
    BoundReport
    """
    bounds = (
        check_trivial_lower_bound(G),
        check_simplicial_upper_bound(G),
        check_weak_clawfree_bound(G),
        check_heilmann_lieb_matching(G),
    )
    return BoundReport(
        graph_id=graph_id,
        omega=clique_number(G),
        max_degree=max_degree(G),
        min_degree=min_degree(G),
        lambda1=lambda1(G),
        bounds=bounds,
        lll_bound=lll_modulus_bound(G),
    )


# --------------------------[Schläfli counterexample]--------------------------

SCHLAFLI_DIAGONAL = (1, 27, 135, 45)
SCHLAFLI_OMEGA = 6
SCHLAFLI_POINT = Fraction(-1, 20)
SCHLAFLI_VALUE = Fraction(-29, 1600)


@dataclass(frozen=True)
class CounterexampleReport:
    """
    The Schläfli graph violates the simplicial upper bound.

    Attributes
    ----------
    diagonal : UnivariatePoly
    omega : int
    point : Fraction
        ``-1 / (4 (ω - 1))``.
    value_at_point, value_at_zero : Fraction
        Opposite signs certify a root in ``(point, 0)``.
    lambda1 : RootInterval
    """

    diagonal: UnivariatePoly
    omega: int
    point: Fraction
    value_at_point: Fraction
    value_at_zero: Fraction
    lambda1: object

    @property
    def violated(self):
        return self.value_at_point < 0 < self.value_at_zero

    def to_json(self):
        return {
            "diagonal": str(self.diagonal),
            "omega": self.omega,
            "point": str(self.point),
            "value_at_point": str(self.value_at_point),
            "value_at_zero": str(self.value_at_zero),
            "lambda1": self.lambda1.to_json(),
            "violated": self.violated,
        }


def check_schlafli_counterexample():
    """
    Reproduce the Schläfli graph's violation of the simplicial upper bound.

    Raises
    ------
    RuntimeError
        Naming the differing exact value if any computed quantity differs
        from the known one.
    """
    G = schlafli_graph()
    diag = independence_poly(G).diagonal()
    if diag != UnivariatePoly(SCHLAFLI_DIAGONAL):
        raise RuntimeError(f"Schläfli diagonal is {diag}, expected {UnivariatePoly(SCHLAFLI_DIAGONAL)}")

    omega = clique_number(G)
    if omega != SCHLAFLI_OMEGA:
        raise RuntimeError(f"Schläfli clique number is {omega}, expected {SCHLAFLI_OMEGA}")

    point = simplicial_upper_bound(omega)
    if point != SCHLAFLI_POINT:
        raise RuntimeError(f"bound point is {point}, expected {SCHLAFLI_POINT}")

    value = diag(point)
    if value != SCHLAFLI_VALUE:
        raise RuntimeError(f"I(-1/20) is {value}, expected {SCHLAFLI_VALUE}")

    lam = lambda1(G)
    holds, _ = root_at_most(lam, point)
    if holds:
        raise RuntimeError("lambda1 of the Schläfli graph satisfies the simplicial bound")

    return CounterexampleReport(diag, omega, point, value, diag(0), lam)
