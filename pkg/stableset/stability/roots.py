"""
Exact real root counting, isolation and interlacing for univariate
polynomials.

Counting uses Sturm sequences of the square-free part. Isolation starts from
sympy's rational root intervals and refines by Sturm bisection. Roots of two
different polynomials are compared by refining until their intervals are
disjoint, or declared equal when the gcd of the polynomials has a root in the
overlap. No floating point is involved.
"""

from dataclasses import dataclass
from fractions import Fraction

import sympy as sp

from stableset.poly.univariate import UnivariatePoly, Z, to_fraction

#: width of the initial isolating intervals
ISOLATION_EPS = Fraction(1, 2**40)


def _as_sympy(p):
    if isinstance(p, UnivariatePoly):
        return p.to_sympy()
    return sp.Poly(p, Z, domain=sp.QQ)


def _sign(x):
    return (x > 0) - (x < 0)


def _eval(f, x):
    return to_fraction(f.eval(sp.Rational(x.numerator, x.denominator)))


def _sign_changes(signs):
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _chain_signs_at(chain, x):
    if x == float("inf"):
        return [_sign(to_fraction(f.LC())) for f in chain]
    if x == float("-inf"):
        return [_sign(to_fraction(f.LC())) * (-1) ** f.degree() for f in chain]
    return [_sign(_eval(f, x)) for f in chain]


def _distinct_count(f, lo, hi):
    """Distinct roots of square-free `f` in ``(lo, hi]``."""
    if f.degree() <= 0:
        return 0
    chain = sp.sturm(f)
    return _sign_changes(_chain_signs_at(chain, lo)) - _sign_changes(_chain_signs_at(chain, hi))


def _check_nonzero(f):
    if f.is_zero:
        raise ValueError("the zero polynomial has no finite root count")


def count_real_roots(p, interval=None):
    """
    Number of distinct real roots.

    Parameters
    ----------
    p : UnivariatePoly
        Nonzero polynomial.
    interval : tuple, default=None
        ``(lo, hi)`` with rational endpoints; roots are counted in the
        half-open interval ``(lo, hi]``. Either end may be None for an
        unbounded side. The whole real line when omitted.

    Returns
    -------
    int

    Raises
    ------
    ValueError
        For the zero polynomial or an empty interval.

    Examples
    --------
    >>> count_real_roots(UnivariatePoly([1, 4, 3, 1]))
    1
    """
    f = _as_sympy(p)
    _check_nonzero(f)
    lo, hi = interval if interval is not None else (None, None)
    lo = float("-inf") if lo is None else to_fraction(lo)
    hi = float("inf") if hi is None else to_fraction(hi)
    if lo > hi:
        raise ValueError(f"empty interval ({lo}, {hi}]")
    return _distinct_count(f.sqf_part(), lo, hi)


def count_real_roots_with_multiplicity(p, interval=None):
    """Like :func:`count_real_roots`, counting each root with multiplicity."""
    f = _as_sympy(p)
    _check_nonzero(f)
    lo, hi = interval if interval is not None else (None, None)
    lo = float("-inf") if lo is None else to_fraction(lo)
    hi = float("inf") if hi is None else to_fraction(hi)
    _, factors = f.sqf_list()
    return sum(k * _distinct_count(g, lo, hi) for g, k in factors)


@dataclass(frozen=True)
class RealRootednessVerdict:
    """
    Outcome of :func:`is_real_rooted`.

    Attributes
    ----------
    real_rooted : bool
        True iff every root is real.
    real_root_count : int
        Real roots counted with multiplicity.
    degree : int
    """

    real_rooted: bool
    real_root_count: int
    degree: int

    def __bool__(self):
        return self.real_rooted

    def to_json(self):
        return {
            "real_rooted": self.real_rooted,
            "real_root_count": self.real_root_count,
            "degree": self.degree,
        }


def is_real_rooted(p):
    """
    Decide whether all roots of `p` are real.

    Nonzero constants count as real-rooted.

    Raises
    ------
    ValueError
        For the zero polynomial.
    """
    f = _as_sympy(p)
    _check_nonzero(f)
    count = count_real_roots_with_multiplicity(f)
    return RealRootednessVerdict(count == f.degree(), count, f.degree())


# --------------------------------[Isolation]--------------------------------


@dataclass(frozen=True)
class IsolatedRoot:
    """
    Real root of a square-free polynomial inside ``[lo, hi]``.

    When ``lo == hi`` the root is the rational ``lo``. Otherwise it lies in
    the open interval and is the only root of `sqf` there.
    """

    lo: Fraction
    hi: Fraction
    multiplicity: int
    sqf: object

    @property
    def is_exact(self):
        return self.lo == self.hi

    def refine(self):
        """Halve the interval, keeping the root inside."""
        if self.is_exact:
            return self
        mid = (self.lo + self.hi) / 2
        value = _eval(self.sqf, mid)
        if value == 0:
            return IsolatedRoot(mid, mid, self.multiplicity, self.sqf)
        if _distinct_count(self.sqf, self.lo, mid) >= 1:
            return IsolatedRoot(self.lo, mid, self.multiplicity, self.sqf)
        return IsolatedRoot(mid, self.hi, self.multiplicity, self.sqf)

    def as_strings(self):
        return [str(self.lo), str(self.hi)]


def isolate_real_roots(p, eps=ISOLATION_EPS):
    """
    Isolating intervals of the real roots of `p`, in increasing order.

    Parameters
    ----------
    p : UnivariatePoly
        Nonzero polynomial.
    eps : Fraction, default=ISOLATION_EPS
        Maximum interval width.

    Returns
    -------
    list of IsolatedRoot
    """
    f = _as_sympy(p)
    _check_nonzero(f)
    if f.degree() <= 0:
        return []
    sqf = f.sqf_part()
    # linear factors over QQ give the rational roots, which are reported exactly
    rational = [
        -to_fraction(g.nth(0)) / to_fraction(g.LC())
        for g, _ in sqf.factor_list()[1]
        if g.degree() == 1
    ]
    eps = to_fraction(eps)
    out = []
    for (a, b), k in f.intervals(eps=sp.Rational(eps.numerator, eps.denominator)):
        a, b = to_fraction(a), to_fraction(b)
        for r in rational:
            if a <= r <= b:
                a = b = r
                break
        out.append(IsolatedRoot(a, b, int(k), sqf))
    return sorted(out, key=lambda r: (r.lo, r.hi))


def compare_roots(r, s):
    """
    Exact comparison of two isolated roots.

    Returns
    -------
    int
        -1, 0 or 1 as the root of `r` is less than, equal to or greater than
        the root of `s`.
    """
    g = None
    while True:
        if r.hi < s.lo:
            return -1
        if s.hi < r.lo:
            return 1
        if r.is_exact and s.is_exact:
            return 0
        lo, hi = max(r.lo, s.lo), min(r.hi, s.hi)
        if g is None:
            g = sp.gcd(r.sqf, s.sqf)
        if g.degree() > 0 and (_eval(g, lo) == 0 or _distinct_count(g, lo, hi) > 0):
            return 0
        r, s = r.refine(), s.refine()


def _descending_roots(p):
    roots = []
    for r in isolate_real_roots(p):
        roots.extend([r] * r.multiplicity)
    return roots[::-1]


def interlaces(q, p):
    """
    True iff `q` interlaces `p`.

    With the roots of both polynomials in decreasing order and repeated by
    multiplicity, ``p_1 >= q_1 >= p_2 >= q_2 >= ...`` must hold.

    Parameters
    ----------
    q, p : UnivariatePoly
        Real-rooted polynomials, ``deg p - 1 <= deg q <= deg p``.

    Raises
    ------
    ValueError
        If a polynomial is not real-rooted or the degrees do not fit.
    """
    for name, f in (("q", q), ("p", p)):
        if not is_real_rooted(f):
            raise ValueError(f"{name} = {f} is not real-rooted")
    if q.degree not in (p.degree - 1, p.degree):
        raise ValueError(f"degree {q.degree} cannot interlace degree {p.degree}")

    lam = _descending_roots(p)
    gam = _descending_roots(q)
    for i, g in enumerate(gam):
        if compare_roots(lam[i], g) < 0:
            return False
        if i + 1 < len(lam) and compare_roots(g, lam[i + 1]) < 0:
            return False
    return True


def largest_root_below(p, bound):
    """
    Largest real root of `p` that is strictly below `bound`, or None.
    """
    bound = to_fraction(bound)
    roots = [r for r in isolate_real_roots(p) if r.lo < bound]
    for r in reversed(roots):
        if r.lo < bound <= r.hi and _eval(r.sqf, bound) == 0:
            continue
        while r.lo < bound <= r.hi:
            r = r.refine()
        if r.hi < bound:
            return r
    return None
