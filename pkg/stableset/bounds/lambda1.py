"""
The root of the diagonal independence polynomial closest to zero.
"""

from dataclasses import dataclass
from fractions import Fraction

from stableset.poly.graph_polys import independence_poly
from stableset.poly.univariate import UnivariatePoly, to_fraction
from stableset.stability.roots import (
    IsolatedRoot,
    compare_roots,
    count_real_roots,
    largest_root_below,
)


class NoNegativeRoot(ValueError):
    """The diagonal polynomial has no negative real root."""


@dataclass(frozen=True)
class RootInterval:
    """
    Rational interval holding exactly one root of `poly`.

    Either ``lo == hi`` and the root is that rational, or the root lies in the
    open interval ``(lo, hi)`` and is the only root there.

    Attributes
    ----------
    lo, hi : Fraction
        Endpoints.
    sign_lo, sign_hi : int
        Exact signs of `poly` at the endpoints.
    poly : UnivariatePoly
        Polynomial whose root is isolated.
    """

    lo: Fraction
    hi: Fraction
    sign_lo: int
    sign_hi: int
    poly: UnivariatePoly

    @property
    def is_exact(self):
        return self.lo == self.hi

    @property
    def width(self):
        return self.hi - self.lo

    def isolated(self):
        """The same root as an :class:`IsolatedRoot` for exact comparisons."""
        return IsolatedRoot(self.lo, self.hi, 1, self.poly.to_sympy().sqf_part())

    def to_json(self):
        return {
            "lo": str(self.lo),
            "hi": str(self.hi),
            "sign_lo": self.sign_lo,
            "sign_hi": self.sign_hi,
            "exact": self.is_exact,
        }


def lambda1_of(diag):
    """
    Largest negative root of a univariate polynomial.

    Raises
    ------
    NoNegativeRoot
        If `diag` has no negative real root.
    """
    r = largest_root_below(diag, 0)
    if r is None:
        raise NoNegativeRoot(f"{diag} has no negative real root")
    return RootInterval(r.lo, r.hi, diag.sign_at(r.lo), diag.sign_at(r.hi), diag)


def lambda1(G):
    """
    λ₁(G), the root of the diagonal of I(G) closest to zero.

    Parameters
    ----------
    G : Graph
        Graph with at least one vertex.

    Returns
    -------
    RootInterval
        Isolating interval of width at most 2**-40.

    Raises
    ------
    ValueError
        If `G` has no vertices.
    NoNegativeRoot
        If the diagonal has no negative root.

    Examples
    --------
    A complete graph on three vertices has λ₁ = -1/3 exactly.

    >>> lambda1(complete_graph(3)).lo
    Fraction(-1, 3)
    """
    if G.n == 0:
        raise ValueError("lambda1 needs a graph with at least one vertex")
    return lambda1_of(independence_poly(G).diagonal())


def compare_lambda(a, b):
    """Exact comparison of two root intervals: -1, 0 or 1."""
    return compare_roots(a.isolated(), b.isolated())


def root_at_most(interval, bound):
    """
    Decide ``λ₁ <= bound`` for a negative rational `bound`.

    λ₁ is the largest negative root, so this holds iff the polynomial has no
    root in ``(bound, 0)``. The Sturm count is cross-checked against the
    interval of λ₁.

    Returns
    -------
    tuple
        ``(holds, proof)`` where `proof` maps names to exact strings.
    """
    bound = to_fraction(bound)
    if bound >= 0:
        raise ValueError(f"bound {bound} is not negative")
    p = interval.poly
    at_zero = p(0)
    count = count_real_roots(p, (bound, 0)) - (1 if at_zero == 0 else 0)
    holds = count == 0

    by_interval = compare_roots(interval.isolated(), _point_root(bound)) <= 0
    if by_interval != holds:
        raise RuntimeError(f"Sturm count and root interval disagree at {bound}")

    value = p(bound)
    proof = {
        "bound": str(bound),
        "value_at_bound": str(value),
        "sign_at_bound": str((value > 0) - (value < 0)),
        "roots_in_gap": str(count),
    }
    return holds, proof


def root_at_least(interval, bound):
    """
    Decide ``λ₁ >= bound`` for a negative rational `bound`.

    Holds iff the polynomial has a root in ``[bound, 0)``.
    """
    bound = to_fraction(bound)
    if bound >= 0:
        raise ValueError(f"bound {bound} is not negative")
    p = interval.poly
    at_zero = p(0)
    count = count_real_roots(p, (bound, 0)) - (1 if at_zero == 0 else 0)
    on_bound = p(bound) == 0
    holds = on_bound or count > 0

    cmp = compare_roots(interval.isolated(), _point_root(bound))
    by_interval = cmp >= 0
    if by_interval != holds:
        raise RuntimeError(f"Sturm count and root interval disagree at {bound}")

    proof = {
        "bound": str(bound),
        "value_at_bound": str(p(bound)),
        "roots_in_range": str(count + (1 if on_bound else 0)),
        "equality": str(cmp == 0).lower(),
    }
    return holds, proof


def _point_root(point):
    # a rational point as the root of z - point
    linear = UnivariatePoly([-point, 1]).to_sympy()
    return IsolatedRoot(point, point, 1, linear)
