"""
Sampling probes for stability properties of multivariate polynomials.

Each probe checks an exact condition at finitely many seeded sample points. A
refutation carries the failing sample and can be replayed exactly. A
corroboration only says that no sample failed.
"""

import itertools
import math

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from stableset.base.graph import find_claw
from stableset.base.hypergraph import reduce_hypergraph
from stableset.poly.graph_polys import hypergraph_independence_poly, independence_poly
from stableset.poly.univariate import RayDirection, UnivariatePoly, to_fraction

from .roots import is_real_rooted

REFUTED = "RefutedWithWitness"
CORROBORATED = "Corroborated"

#: ray entries are RAY_NUMERATORS / RAY_DENOMINATOR
RAY_DENOMINATOR = 16
RAY_NUMERATORS = (1, 64)

#: point coordinates are POINT_NUMERATORS / POINT_DENOMINATOR
POINT_DENOMINATOR = 8
POINT_NUMERATORS = (-32, 32)


@dataclass(frozen=True)
class ProbeVerdict:
    """
    Outcome of a sampling probe.

    Attributes
    ----------
    outcome : str
        `REFUTED` or `CORROBORATED`.
    witness : dict or None
        The failing sample for a refutation, with rationals as strings.
    samples : int
        Number of samples checked.
    seed : int
        Seed of the sample generator.
    exact_values : dict
        Exact quantities behind the refutation, as strings.
    """

    outcome: str
    witness: dict = None
    samples: int = 0
    seed: int = 0
    exact_values: dict = field(default_factory=dict)

    @property
    def refuted(self):
        return self.outcome == REFUTED

    @property
    def corroborated(self):
        return self.outcome == CORROBORATED

    def to_json(self):
        out = {"outcome": self.outcome, "samples": self.samples, "seed": self.seed}
        if self.witness is not None:
            out["witness"] = self.witness
        out["exact_values"] = dict(self.exact_values)
        return out


def _frac_str(x):
    return str(to_fraction(x))


def _point_strings(point):
    return {str(v): _frac_str(x) for v, x in sorted(point.items())}


def random_ray(variables, rng):
    """Random ray with entries ``k / 16``, ``k`` uniform in ``1..64``."""
    lo, hi = RAY_NUMERATORS
    ks = rng.integers(lo, hi + 1, size=len(variables))
    return RayDirection({v: Fraction(int(k), RAY_DENOMINATOR) for v, k in zip(variables, ks)})


def sample_rays(variables, samples, seed):
    """
    Seeded ray sequence. The first ray is always all ones.
    """
    variables = list(variables)
    rng = np.random.default_rng(seed)
    yield RayDirection.ones(variables)
    for _ in range(samples - 1):
        yield random_ray(variables, rng)


def random_point(variables, rng):
    lo, hi = POINT_NUMERATORS
    ks = rng.integers(lo, hi + 1, size=len(variables))
    return {v: Fraction(int(k), POINT_DENOMINATOR) for v, k in zip(variables, ks)}


def _check_samples(samples):
    if samples < 1:
        raise ValueError(f"need at least one sample, got {samples}")


# -----------------------------[Same-phase stability]-----------------------------


def same_phase_probe(p, samples=25, seed=0):
    """
    Probe same-phase stability of `p`.

    Checks that ``p(t z)`` is real-rooted for seeded positive rays ``t``. The
    all-ones ray is always sample 0.

    Parameters
    ----------
    p : MultivariatePoly
    samples : int, default=25
        Number of rays, at least 1.
    seed : int, default=0
        Seed for the ray generator.

    Returns
    -------
    ProbeVerdict
        A refutation's witness holds the ray ``t`` and the restriction.
    """
    _check_samples(samples)
    for i, t in enumerate(sample_rays(p.variables, samples, seed)):
        restriction = p.restrict(t)
        if restriction.is_zero():
            continue
        verdict = is_real_rooted(restriction)
        if not verdict:
            return ProbeVerdict(
                REFUTED,
                witness={"sample": i, "t": t.as_strings()},
                samples=i + 1,
                seed=seed,
                exact_values={
                    "restriction": str(restriction),
                    "real_root_count": str(verdict.real_root_count),
                    "degree": str(verdict.degree),
                },
            )
    return ProbeVerdict(CORROBORATED, samples=samples, seed=seed)


def claw_witness_restriction(G):
    """
    Deterministic non-real-rooted restriction of I(G) at a claw.

    All variables outside the lexicographically least claw are set to 0 and
    the claw variables are restricted along the all-ones ray.

    Returns
    -------
    tuple or None
        ``(claw, restriction)`` with ``restriction = 1 + 4z + 3z^2 + z^3``, or
        None if `G` is claw-free.
    """
    claw = find_claw(G)
    if claw is None:
        return None
    p = independence_poly(G)
    others = [v for v in G.vertices if v not in claw]
    restriction = p.set_zero(others).restrict(RayDirection.ones(claw))
    if restriction != UnivariatePoly([1, 4, 3, 1]):
        raise RuntimeError(f"claw {claw} restricts to {restriction}")
    return claw, restriction


def hypergraph_witness_restriction(H):
    """
    Deterministic non-real-rooted restriction for a hypergraph whose reduction
    is not a claw-free graph.

    The witness lives on ``R = reduce_hypergraph(H)``. When `R` keeps an edge
    ``e`` of size ``k >= 3``, variables outside ``e`` are set to 0 and those of
    ``e`` follow the all-ones ray, which gives ``(1 + z)^k - z^k``. Otherwise
    the claw witness of the underlying graph of `R` is used.

    Returns
    -------
    tuple or None
        ``(R, vertices, restriction)`` with vertices numbered as in `R`, or
        None if `R` is a claw-free graph.
    """
    R = reduce_hypergraph(H)
    big = [e for e in R.edges if len(e) >= 3]
    if not big:
        found = claw_witness_restriction(R.underlying_graph())
        return None if found is None else (R,) + found

    e = big[0]
    others = [v for v in range(R.n) if v not in e]
    p = hypergraph_independence_poly(R)
    restriction = p.set_zero(others).restrict(RayDirection.ones(e))
    k = len(e)
    if restriction != UnivariatePoly([math.comb(k, i) for i in range(k)]):
        raise RuntimeError(f"edge {e} restricts to {restriction}")
    return R, e, restriction


# -----------------------------[Common interlacing]-----------------------------


def _positive_leading(p):
    return -p if p.leading_coeff < 0 else p


def _weight_vectors(m, samples, rng):
    # uniform weights and every pairwise midpoint come first
    yield [Fraction(1, m)] * m
    for i, j in itertools.combinations(range(m), 2):
        w = [Fraction(0)] * m
        w[i] = w[j] = Fraction(1, 2)
        yield w
    lo, hi = RAY_NUMERATORS
    for _ in range(samples):
        ks = [int(k) for k in rng.integers(lo, hi + 1, size=m)]
        total = sum(ks)
        yield [Fraction(k, total) for k in ks]


def common_interlacing_probe(ps, samples=25, seed=0):
    """
    Probe whether real-rooted polynomials have a common interlacing.

    They do iff every convex combination is real-rooted. Combinations with
    uniform weights, with every pairwise midpoint and with `samples` seeded
    random weights are checked, after scaling each polynomial to a positive
    leading coefficient.

    Parameters
    ----------
    ps : list of UnivariatePoly
        Real-rooted polynomials.
    samples : int, default=25
        Number of random weight vectors.
    seed : int, default=0

    Returns
    -------
    ProbeVerdict
        A refutation's witness holds the weight vector.

    Raises
    ------
    ValueError
        If a member is not real-rooted. The message names its index.
    """
    ps = [_positive_leading(p) for p in ps if not p.is_zero()]
    for i, p in enumerate(ps):
        if not is_real_rooted(p):
            raise ValueError(f"member {i} ({p}) is not real-rooted")

    rng = np.random.default_rng(seed)
    checked = 0
    if len(ps) > 1:
        for weights in _weight_vectors(len(ps), samples, rng):
            checked += 1
            combo = UnivariatePoly([0])
            for w, p in zip(weights, ps):
                combo = combo + p * w
            if not is_real_rooted(combo):
                return ProbeVerdict(
                    REFUTED,
                    witness={"weights": [_frac_str(w) for w in weights]},
                    samples=checked,
                    seed=seed,
                    exact_values={"combination": str(combo)},
                )
    return ProbeVerdict(CORROBORATED, samples=checked, seed=seed)


def same_phase_compatible_probe(ps, ray_samples=25, weight_samples=25, seed=0):
    """
    Probe same-phase compatibility.

    For each seeded ray ``t`` every ``p(t z)`` must be real-rooted and the
    restrictions must pass :func:`common_interlacing_probe`.

    Parameters
    ----------
    ps : list of MultivariatePoly
    ray_samples : int, default=25
    weight_samples : int, default=25
        Random weight vectors per ray.
    seed : int, default=0

    Returns
    -------
    ProbeVerdict
        A refutation's witness holds the ray and either the index of a
        non-real-rooted member or the failing weights.
    """
    _check_samples(ray_samples)
    variables = sorted(set().union(*(p.variables for p in ps))) if ps else []
    rng = np.random.default_rng(seed)
    for i, t in enumerate(sample_rays(variables, ray_samples, seed)):
        restricted = [p.restrict(t) for p in ps]
        for k, r in enumerate(restricted):
            if not r.is_zero() and not is_real_rooted(r):
                return ProbeVerdict(
                    REFUTED,
                    witness={"sample": i, "t": t.as_strings(), "member": k},
                    samples=i + 1,
                    seed=seed,
                    exact_values={"restriction": str(r)},
                )
        inner_seed = int(rng.integers(2**31))
        verdict = common_interlacing_probe(restricted, samples=weight_samples, seed=inner_seed)
        if verdict.refuted:
            witness = {"sample": i, "t": t.as_strings(), "inner_seed": inner_seed}
            witness.update(verdict.witness)
            return ProbeVerdict(
                REFUTED,
                witness=witness,
                samples=i + 1,
                seed=seed,
                exact_values=verdict.exact_values,
            )
    return ProbeVerdict(CORROBORATED, samples=ray_samples, seed=seed)


# ------------------------------[Real stability]------------------------------


def rayleigh_difference(p, point, j, k):
    """
    ``d_j p * d_k p - d_jk p * p`` at `point`, exactly.
    """
    pj = p.partial(j)
    pk = p.partial(k)
    return pj.evaluate(point) * pk.evaluate(point) - pj.partial(k).evaluate(point) * p.evaluate(point)


def strongly_rayleigh_probe(p, points=None, samples=50, seed=0):
    """
    Probe the strong Rayleigh inequalities of a multi-affine polynomial.

    A multi-affine polynomial is real stable iff for every real point and
    every pair of variables ``d_j p * d_k p >= d_jk p * p``.

    Parameters
    ----------
    p : MultivariatePoly
        Multi-affine polynomial.
    points : list of dict, default=None
        Points to check. Seeded random points with coordinates in
        ``[-4, 4]`` (multiples of 1/8) are drawn when None.
    samples : int, default=50
        Number of random points.
    seed : int, default=0

    Returns
    -------
    ProbeVerdict
        A refutation's witness holds the point and the pair ``(j, k)``.

    Raises
    ------
    ValueError
        If `p` is not multi-affine.
    """
    if not p.multi_affine:
        raise ValueError("the strong Rayleigh check needs a multi-affine polynomial")

    variables = p.variables
    if points is None:
        _check_samples(samples)
        rng = np.random.default_rng(seed)
        points = [random_point(variables, rng) for _ in range(samples)]

    pairs = list(itertools.combinations(variables, 2))
    partials = {v: p.partial(v) for v in variables}
    for i, point in enumerate(points):
        values = {v: to_fraction(point.get(v, 0)) for v in variables}
        at = p.evaluate(values)
        first = {v: partials[v].evaluate(values) for v in variables}
        for j, k in pairs:
            lhs = first[j] * first[k]
            rhs = partials[j].partial(k).evaluate(values) * at
            if lhs < rhs:
                return ProbeVerdict(
                    REFUTED,
                    witness={"sample": i, "x": _point_strings(values), "pair": [j, k]},
                    samples=i + 1,
                    seed=seed,
                    exact_values={"lhs": _frac_str(lhs), "rhs": _frac_str(rhs)},
                )
    return ProbeVerdict(CORROBORATED, samples=len(points), seed=seed)


def shifted_restriction(p, t, y):
    """
    ``p(t z + y)`` as a univariate polynomial.

    Parameters
    ----------
    p : MultivariatePoly
    t : RayDirection
        Positive direction.
    y : dict
        Real shift; missing variables shift by 0.
    """
    t = getattr(t, "t", t)
    total = UnivariatePoly([0])
    for mono, c in p.terms.items():
        term = UnivariatePoly([c])
        for v, e in mono:
            term = term * UnivariatePoly([to_fraction(y.get(v, 0)), t[v]]) ** e
        total = total + term
    return total


def shifted_ray_probe(p, samples=25, seed=0):
    """
    Probe real stability through shifted restrictions.

    `p` is real stable iff ``p(t z + y)`` is real-rooted for every positive
    ``t`` and real ``y``. Sample 0 is ``t = 1, y = 0``.

    Returns
    -------
    ProbeVerdict
        A refutation's witness holds ``t`` and ``y``.
    """
    _check_samples(samples)
    variables = p.variables
    rng = np.random.default_rng(seed)
    for i in range(samples):
        if i == 0:
            t = RayDirection.ones(variables)
            y = {v: Fraction(0) for v in variables}
        else:
            t = random_ray(variables, rng)
            y = random_point(variables, rng)
        restriction = shifted_restriction(p, t, y)
        if restriction.is_zero():
            continue
        if not is_real_rooted(restriction):
            return ProbeVerdict(
                REFUTED,
                witness={"sample": i, "t": t.as_strings(), "y": _point_strings(y)},
                samples=i + 1,
                seed=seed,
                exact_values={"restriction": str(restriction)},
            )
    return ProbeVerdict(CORROBORATED, samples=samples, seed=seed)
