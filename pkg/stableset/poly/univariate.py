from dataclasses import dataclass, field
from fractions import Fraction

import sympy as sp

# symbol used when handing polynomials to sympy
Z = sp.Symbol("z")


def to_fraction(value):
    """Exact conversion of ints, Fractions and sympy/gmpy rationals."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, sp.Rational):
        return Fraction(int(value.p), int(value.q))
    try:
        return Fraction(int(value.numerator), int(value.denominator))
    except AttributeError:
        pass
    return Fraction(value)


class UnivariatePoly:
    """
    Exact univariate polynomial with rational coefficients.

    Parameters
    ----------
    coeffs : iterable
        Coefficients in ascending degree. Trailing zeros are dropped, so the
        leading coefficient is nonzero unless the polynomial is zero.
    var : str, default="z"
        Variable name used when printing.

    Examples
    --------
    >>> p = UnivariatePoly([1, 4, 3, 1])
    >>> str(p)
    '1 + 4z + 3z^2 + z^3'
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var="z"):
        coeffs = [to_fraction(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self.var = var

    @property
    def degree(self):
        """Degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    @property
    def leading_coeff(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x):
        """Exact Horner evaluation."""
        x = to_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x):
        v = self(x)
        return (v > 0) - (v < 0)

    def derivative(self):
        return UnivariatePoly([k * c for k, c in enumerate(self.coeffs)][1:], var=self.var)

    def __add__(self, other):
        other = _promote(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return UnivariatePoly([x + y for x, y in zip(a, b)], var=self.var)

    __radd__ = __add__

    def __neg__(self):
        return UnivariatePoly([-c for c in self.coeffs], var=self.var)

    def __sub__(self, other):
        return self + (-_promote(other))

    def __mul__(self, other):
        if not isinstance(other, UnivariatePoly):
            other = to_fraction(other)
            return UnivariatePoly([c * other for c in self.coeffs], var=self.var)
        if self.is_zero() or other.is_zero():
            return UnivariatePoly((), var=self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UnivariatePoly(out, var=self.var)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError(f"negative power {k}")
        out = UnivariatePoly([1], var=self.var)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UnivariatePoly([other])
        if not isinstance(other, UnivariatePoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def to_sympy(self):
        """sympy Poly over QQ in the symbol ``z``."""
        if self.is_zero():
            return sp.Poly(0, Z, domain=sp.QQ)
        return sp.Poly(
            [sp.Rational(c.numerator, c.denominator) for c in reversed(self.coeffs)],
            Z,
            domain=sp.QQ,
        )

    @classmethod
    def from_sympy(cls, poly, var="z"):
        return cls([to_fraction(c) for c in reversed(poly.all_coeffs())], var=var)

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = self.var if k == 1 else f"{self.var}^{k}"
                body = power if mag == 1 else f"{mag}{power}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"UnivariatePoly({[str(c) for c in self.coeffs]})"


def _promote(value):
    if isinstance(value, UnivariatePoly):
        return value
    return UnivariatePoly([value])


@dataclass(frozen=True)
class RayDirection:
    """
    Strictly positive direction vector for univariate restrictions.

    Attributes
    ----------
    t : dict
        Map from variable id to a positive rational.
    """

    t: dict = field(default_factory=dict)

    def __post_init__(self):
        t = {v: to_fraction(x) for v, x in self.t.items()}
        bad = {v: x for v, x in t.items() if x <= 0}
        if bad:
            raise ValueError(f"ray entries must be strictly positive, got {bad}")
        object.__setattr__(self, "t", t)

    @classmethod
    def ones(cls, variables):
        return cls({v: Fraction(1) for v in variables})

    def __getitem__(self, v):
        return self.t[v]

    def __contains__(self, v):
        return v in self.t

    def as_strings(self):
        return {str(v): _frac_str(x) for v, x in sorted(self.t.items())}


def _frac_str(x):
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
