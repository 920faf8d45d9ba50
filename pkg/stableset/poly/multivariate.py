from fractions import Fraction

from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyRing

from stableset.base import config

from .univariate import RayDirection, UnivariatePoly, to_fraction

# resolved from the ``term_cap`` config value on first use
_term_cap = None


def term_cap():
    """Largest number of terms a polynomial may store."""
    global _term_cap
    if _term_cap is None:
        _term_cap = config.term_cap()
    return _term_cap


def set_term_cap(cap=None):
    """Use `cap` from now on, or re-read the config on next use when None."""
    global _term_cap
    _term_cap = None if cap is None else int(cap)


class TermCapExceeded(RuntimeError):
    """A polynomial would store more terms than the cap allows."""

    def __init__(self, count, cap):
        self.count = count
        self.cap = cap
        super().__init__(f"polynomial has {count} terms, cap is {cap}")


def _check_term_cap(count):
    cap = term_cap()
    if count > cap:
        raise TermCapExceeded(count, cap)


class SplitViolation(ValueError):
    """A term contains two of the split variables."""

    def __init__(self, term, variables):
        self.term = term
        self.variables = tuple(variables)
        super().__init__(f"term {term} contains split variables {self.variables}")


def _normalize(mono):
    # merge repeated variables and drop zero exponents
    acc = {}
    for v, e in mono:
        acc[v] = acc.get(v, 0) + e
    return tuple(sorted((v, e) for v, e in acc.items() if e))


def _mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    return _normalize(a + b)


def _mono_degree(mono):
    return sum(e for _, e in mono)


def _display_key(mono):
    # ascending degree, then variables in order (x_a x_c before x_a x_d)
    return (_mono_degree(mono), tuple(v for v, e in mono for _ in range(e)))


class MultivariatePoly:
    """
    Sparse multivariate polynomial with integer coefficients.

    Variables are hashable, sortable ids (vertex or edge ids of a host graph).
    A monomial is a sorted tuple of ``(variable, exponent)`` pairs and the
    constant monomial is ``()``. Zero coefficients are never stored.

    Parameters
    ----------
    terms : dict, default=None
        Map from monomial to integer coefficient. Monomials are normalized.
    names : dict, default=None
        Display name per variable. Missing names print as the variable id.

    Raises
    ------
    TermCapExceeded
        If more than :func:`term_cap` terms would be stored.
    """

    __slots__ = ("terms", "names")

    def __init__(self, terms=None, names=None):
        clean = {}
        for mono, c in (terms or {}).items():
            if not c:
                continue
            mono = _normalize(mono)
            clean[mono] = clean.get(mono, 0) + int(c)
        self.terms = {m: c for m, c in clean.items() if c}
        _check_term_cap(len(self.terms))
        self.names = dict(names) if names else {}

    @classmethod
    def _raw(cls, terms, names):
        # terms already normalized and free of zeros
        _check_term_cap(len(terms))
        p = cls.__new__(cls)
        p.terms = terms
        p.names = names
        return p

    @classmethod
    def constant(cls, c):
        return cls({(): c})

    @classmethod
    def variable(cls, v, name=None):
        return cls({((v, 1),): 1}, names=None if name is None else {v: name})

    @classmethod
    def from_sets(cls, sets, names=None, coeff=1):
        """Multi-affine polynomial with one term per variable set."""
        terms = {}
        for s in sets:
            mono = tuple((v, 1) for v in sorted(s))
            terms[mono] = terms.get(mono, 0) + coeff
        return cls._raw({m: c for m, c in terms.items() if c}, dict(names or {}))

    # ------------------------------[Properties]------------------------------

    @property
    def variables(self):
        return tuple(sorted({v for mono in self.terms for v, _ in mono}))

    @property
    def degree(self):
        return max((_mono_degree(m) for m in self.terms), default=-1)

    @property
    def multi_affine(self):
        return all(e == 1 for mono in self.terms for _, e in mono)

    def is_zero(self):
        return not self.terms

    def coeff(self, mono):
        return self.terms.get(_normalize(mono), 0)

    def __len__(self):
        return len(self.terms)

    # ------------------------------[Arithmetic]------------------------------

    def _merged_names(self, other):
        if not other.names:
            return self.names
        names = dict(other.names)
        names.update(self.names)
        return names

    def __add__(self, other):
        other = _promote(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return MultivariatePoly._raw(terms, self._merged_names(other))

    __radd__ = __add__

    def __neg__(self):
        return MultivariatePoly._raw({m: -c for m, c in self.terms.items()}, self.names)

    def __sub__(self, other):
        return self + (-_promote(other))

    def __rsub__(self, other):
        return _promote(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return MultivariatePoly._raw({}, self.names)
            return MultivariatePoly._raw({m: c * other for m, c in self.terms.items()}, self.names)
        other = _promote(other)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                terms[m] = terms.get(m, 0) + c1 * c2
        return MultivariatePoly._raw({m: c for m, c in terms.items() if c}, self._merged_names(other))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError(f"negative power {k}")
        out = MultivariatePoly.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultivariatePoly.constant(other)
        if not isinstance(other, MultivariatePoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # ------------------------------[Operators]------------------------------

    def partial(self, v):
        """Partial derivative with respect to variable `v`."""
        terms = {}
        for mono, c in self.terms.items():
            d = dict(mono)
            e = d.get(v, 0)
            if not e:
                continue
            d[v] = e - 1
            m = tuple(sorted((w, f) for w, f in d.items() if f))
            terms[m] = terms.get(m, 0) + c * e
        return MultivariatePoly._raw({m: c for m, c in terms.items() if c}, self.names)

    def set_zero(self, variables):
        """Evaluate the variables in `variables` at zero."""
        variables = set(variables)
        terms = {m: c for m, c in self.terms.items() if not any(v in variables for v, _ in m)}
        return MultivariatePoly._raw(terms, self.names)

    def evaluate(self, point):
        """
        Exact value at a rational point.

        Parameters
        ----------
        point : dict
            Map from variable to a rational value. Every variable of the
            polynomial must be present.
        """
        total = Fraction(0)
        for mono, c in self.terms.items():
            term = Fraction(c)
            for v, e in mono:
                try:
                    term *= to_fraction(point[v]) ** e
                except KeyError:
                    raise ValueError(f"point has no value for variable {v}") from None
            total += term
        return total

    def rename(self, mapping, names=None):
        """
        Replace each variable ``v`` with ``mapping[v]``.

        Exponents of variables sent to the same target accumulate.

        Raises
        ------
        ValueError
            If a variable has no image.
        """
        missing = [v for v in self.variables if v not in mapping]
        if missing:
            raise ValueError(f"variables {missing} missing from the mapping")
        terms = {}
        for mono, c in self.terms.items():
            m = _normalize(tuple((mapping[v], e) for v, e in mono))
            terms[m] = terms.get(m, 0) + c
        return MultivariatePoly._raw({m: c for m, c in terms.items() if c}, dict(names or {}))

    def substitute_monomials(self, images, names=None):
        """
        Ring map sending each variable to a signed monomial.

        Parameters
        ----------
        images : dict
            Map from variable to ``(sign, monomial)``.
        """
        terms = {}
        for mono, c in self.terms.items():
            out = ()
            sign = 1
            for v, e in mono:
                s, m = images[v]
                sign *= s**e
                out = _mono_mul(out, tuple((w, f * e) for w, f in m))
            terms[out] = terms.get(out, 0) + sign * c
        return MultivariatePoly._raw({m: c for m, c in terms.items() if c}, dict(names or {}))

    def multi_affine_part(self):
        """Drop every term with an exponent above one."""
        return MultivariatePoly._raw(
            {m: c for m, c in self.terms.items() if all(e == 1 for _, e in m)}, self.names
        )

    def restrict(self, t):
        """
        Univariate restriction ``p(t z)``.

        Parameters
        ----------
        t : RayDirection or dict
            Value of each variable's direction. A dict is checked like a
            `RayDirection`.

        Returns
        -------
        UnivariatePoly

        Raises
        ------
        ValueError
            If an entry is not positive or a variable has no entry.
        """
        if not isinstance(t, RayDirection):
            t = RayDirection(t)
        t = t.t
        missing = [v for v in self.variables if v not in t]
        if missing:
            raise ValueError(f"direction missing entries for variables {missing}")
        coeffs = [Fraction(0)] * (self.degree + 1)
        for mono, c in self.terms.items():
            term = Fraction(c)
            for v, e in mono:
                term *= to_fraction(t[v]) ** e
            coeffs[_mono_degree(mono)] += term
        return UnivariatePoly(coeffs)

    def diagonal(self):
        """Restriction along the all-ones direction."""
        coeffs = [0] * (self.degree + 1)
        for mono, c in self.terms.items():
            coeffs[_mono_degree(mono)] += c
        return UnivariatePoly(coeffs)

    # ------------------------------[Display]------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: _display_key(mc[0]))

    def to_text(self, names=None):
        """
        Canonical text: graded order, explicit signs, ``x_name`` variables.

        Examples
        --------
        >>> str(MultivariatePoly({(): 1, ((0, 1), (1, 1)): -1}))
        '1 - x_0 x_1'
        """
        names = {**self.names, **(names or {})}
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            factors = []
            for v, e in mono:
                f = f"x_{names.get(v, v)}"
                factors.append(f if e == 1 else f"{f}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = " ".join(factors)
            else:
                body = f"{mag} " + " ".join(factors)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    __str__ = to_text

    def __repr__(self):
        return f"MultivariatePoly({self.to_text()!r})"


def _promote(value):
    if isinstance(value, MultivariatePoly):
        return value
    if isinstance(value, int):
        return MultivariatePoly.constant(value)
    raise TypeError(f"cannot combine MultivariatePoly with {type(value).__name__}")


def _to_ring(p, ring, index):
    d = {}
    for mono, c in p.terms.items():
        exps = [0] * len(index)
        for v, e in mono:
            exps[index[v]] = e
        d[tuple(exps)] = QQ(c)
    return ring.from_dict(d)


def exact_divide(p, d):
    """
    Exact quotient ``p / d`` over the integers.

    Runs multivariate long division with graded-lex leading terms over the
    rationals, then verifies the quotient by multiplying back.

    Parameters
    ----------
    p : MultivariatePoly
        Dividend.
    d : MultivariatePoly
        Divisor.

    Returns
    -------
    MultivariatePoly or None
        Quotient ``q`` with ``p == d * q``, or None if `d` does not divide `p`
        with an integer quotient.

    Raises
    ------
    ZeroDivisionError
        If `d` is zero.
    """
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return MultivariatePoly._raw({}, p.names)

    variables = sorted(set(p.variables) | set(d.variables))
    if not variables:
        q, r = divmod(p.terms[()], d.terms[()])
        return MultivariatePoly.constant(q) if r == 0 else None

    index = {v: i for i, v in enumerate(variables)}
    ring = PolyRing([f"x{i}" for i in range(len(variables))], QQ, grlex)
    q, r = _to_ring(p, ring, index).div(_to_ring(d, ring, index))
    if r:
        return None

    terms = {}
    for exps, c in q.items():
        c = to_fraction(c)
        if c.denominator != 1:
            return None
        terms[tuple((variables[i], e) for i, e in enumerate(exps) if e)] = c.numerator
    quotient = MultivariatePoly(terms, names=p._merged_names(d))

    if d * quotient != p:
        raise RuntimeError(f"division check failed for ({p}) / ({d})")
    return quotient
