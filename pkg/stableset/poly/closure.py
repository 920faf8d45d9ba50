"""
Operators that preserve same-phase stability of multi-affine polynomials.

They are exercised as property tests: applied to a same-phase stable input,
each result is probed again.
"""

from .multivariate import MultivariatePoly


def product(p, q):
    """Product of polynomials in disjoint variables."""
    shared = set(p.variables) & set(q.variables)
    if shared:
        raise ValueError(f"product needs disjoint variables, both use {sorted(shared)}")
    return p * q


def differentiate(p, v):
    return p.partial(v)


def select(p, v):
    """Variable selection ``z_v * d/dz_v p``."""
    return MultivariatePoly.variable(v) * p.partial(v)


def deselect(p, v):
    """Variable deselection, ``z_v := 0``."""
    return p.set_zero([v])


def invert(p, variables=None):
    """
    Selection inversion ``z_1 ... z_n p(1/z_1, ..., 1/z_n)``.

    Parameters
    ----------
    p : MultivariatePoly
        Multi-affine polynomial.
    variables : iterable, default=None
        Variables ``z_1..z_n``. Defaults to the variables of `p`.
    """
    if not p.multi_affine:
        raise ValueError("inversion needs a multi-affine polynomial")
    variables = sorted(set(p.variables if variables is None else variables))
    missing = set(p.variables) - set(variables)
    if missing:
        raise ValueError(f"variables {sorted(missing)} of the polynomial are not inverted")
    terms = {}
    for mono, c in p.terms.items():
        present = {v for v, _ in mono}
        terms[tuple((v, 1) for v in variables if v not in present)] = c
    return MultivariatePoly(terms, names=p.names)


def project(p, source, target):
    """Projection: identify variable `source` with `target`."""
    mapping = {v: v for v in p.variables}
    mapping[source] = target
    return p.rename(mapping, names=p.names)
