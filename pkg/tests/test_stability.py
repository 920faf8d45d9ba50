#!/usr/bin/env python

import unittest

from fractions import Fraction

import numpy as np
import sympy as sp
import xmlrunner

from stableset.base import (
    Hypergraph,
    c6_graph,
    complete_graph,
    empty_graph,
    path_graph,
    star_graph,
)
from stableset.poly import (
    UnivariatePoly,
    hypergraph_independence_poly,
    independence_poly,
    proper_splitting,
)
from stableset.stability import (
    claw_witness_restriction,
    common_interlacing_probe,
    compare_roots,
    count_real_roots,
    count_real_roots_with_multiplicity,
    decide_hypergraph_same_phase,
    decide_real_stable_independence,
    decide_same_phase_stable_independence,
    find_induced_p3,
    hypergraph_witness_restriction,
    interlaces,
    is_real_rooted,
    isolate_real_roots,
    largest_root_below,
    rayleigh_difference,
    same_phase_compatible_probe,
    same_phase_probe,
    shifted_ray_probe,
    strongly_rayleigh_probe,
)

CLAW_DIAGONAL = UnivariatePoly([1, 4, 3, 1])


def roots_product(*roots):
    p = UnivariatePoly([1])
    for r in roots:
        p = p * UnivariatePoly([-r, 1])
    return p


class RootCountTest(unittest.TestCase):
    def test_claw_diagonal(self):
        self.assertEqual(count_real_roots(CLAW_DIAGONAL), 1)
        verdict = is_real_rooted(CLAW_DIAGONAL)
        self.assertFalse(verdict)
        self.assertEqual(verdict.real_root_count, 1)
        self.assertEqual(verdict.degree, 3)

    def test_multiplicity(self):
        p = roots_product(-1, -1, 2)
        self.assertEqual(count_real_roots(p), 2)
        self.assertEqual(count_real_roots_with_multiplicity(p), 3)
        self.assertTrue(is_real_rooted(p))

    def test_interval(self):
        p = roots_product(-1, -3)
        self.assertEqual(count_real_roots(p, (-2, 0)), 1)
        # half-open at the left end
        self.assertEqual(count_real_roots(p, (-3, -1)), 1)
        self.assertEqual(count_real_roots(p, (None, -2)), 1)
        with self.assertRaises(ValueError):
            count_real_roots(p, (1, 0))

    def test_zero(self):
        with self.assertRaises(ValueError):
            is_real_rooted(UnivariatePoly([0]))
        self.assertTrue(is_real_rooted(UnivariatePoly([5])))

    def test_count_matches_sympy_real_roots(self):
        rng = np.random.default_rng(7)
        for _ in range(1000):
            deg = int(rng.integers(1, 13))
            coeffs = [int(c) for c in rng.integers(-20, 21, size=deg + 1)]
            if coeffs[-1] == 0:
                coeffs[-1] = 1
            p = UnivariatePoly(coeffs)
            found = sp.real_roots(p.to_sympy(), multiple=False)
            self.assertEqual(count_real_roots(p), len(found), msg=str(p))
            self.assertEqual(count_real_roots_with_multiplicity(p), sum(m for _, m in found), msg=str(p))

    def test_count_matches_numeric_roots(self):
        # distinct integer roots times quadratics whose roots have |imag| >= sqrt(3)/2
        rng = np.random.default_rng(2024)
        for _ in range(1000):
            k = int(rng.integers(1, 9))
            reals = [int(r) for r in rng.choice(np.arange(-8, 9), size=k, replace=False)]
            p = roots_product(*reals) * int(rng.choice([-3, -1, 1, 2, 5]))
            while p.degree + 2 <= 12 and rng.random() < 0.5:
                a = int(rng.integers(-3, 4))
                p = p * UnivariatePoly([a * a // 4 + 1 + int(rng.integers(0, 4)), a, 1])

            numeric = np.roots([float(c) for c in reversed(p.coeffs)])
            self.assertEqual(sum(1 for r in numeric if abs(r.imag) < 0.25), k, msg=str(p))
            self.assertEqual(count_real_roots(p), k, msg=str(p))


class IsolationTest(unittest.TestCase):
    def test_rational_roots_are_exact(self):
        roots = isolate_real_roots(roots_product(-1, -3))
        self.assertEqual([(r.lo, r.hi) for r in roots], [(-3, -3), (-1, -1)])
        self.assertTrue(all(r.is_exact for r in roots))

    def test_irrational(self):
        roots = isolate_real_roots(UnivariatePoly([-2, 0, 1]))
        self.assertEqual(len(roots), 2)
        neg, pos = roots
        self.assertFalse(pos.is_exact)
        self.assertLess(pos.lo, Fraction(1415, 1000))
        self.assertGreater(pos.hi, Fraction(1414, 1000))
        self.assertEqual(compare_roots(neg, pos), -1)
        self.assertEqual(compare_roots(pos, pos.refine()), 0)

    def test_equal_roots_of_different_polys(self):
        a = isolate_real_roots(UnivariatePoly([-2, 0, 1]))[1]
        b = isolate_real_roots(UnivariatePoly([-2, 0, 1]) * UnivariatePoly([1, 1]))[-1]
        self.assertEqual(compare_roots(a, b), 0)

    def test_largest_root_below(self):
        p = roots_product(-1, -3)
        self.assertEqual(largest_root_below(p, 0).lo, -1)
        self.assertEqual(largest_root_below(p, -1).lo, -3)
        self.assertIsNone(largest_root_below(p, -3))


class InterlacingTest(unittest.TestCase):
    def test_interlaces(self):
        p = roots_product(-1, -3)
        self.assertTrue(interlaces(roots_product(-2), p))
        self.assertTrue(interlaces(roots_product(-1), p))
        self.assertFalse(interlaces(roots_product(-4), p))
        with self.assertRaises(ValueError):
            interlaces(CLAW_DIAGONAL, p)

    def test_common_interlacing(self):
        good = [roots_product(-1, -3), roots_product(-2, -4)]
        self.assertTrue(common_interlacing_probe(good, samples=10).corroborated)
        bad = [roots_product(-1, -2), roots_product(-3, -4)]
        verdict = common_interlacing_probe(bad, samples=10)
        self.assertTrue(verdict.refuted)
        self.assertIn("weights", verdict.witness)
        with self.assertRaises(ValueError):
            common_interlacing_probe([CLAW_DIAGONAL, good[0]])


class ProbeTest(unittest.TestCase):
    def test_same_phase_claw(self):
        verdict = same_phase_probe(independence_poly(star_graph(3)), samples=5)
        self.assertTrue(verdict.refuted)
        self.assertEqual(verdict.witness["sample"], 0)
        self.assertEqual(verdict.exact_values["restriction"], "1 + 4z + 3z^2 + z^3")

    def test_same_phase_c6(self):
        self.assertTrue(same_phase_probe(independence_poly(c6_graph()), samples=10, seed=2).corroborated)
        with self.assertRaises(ValueError):
            same_phase_probe(independence_poly(c6_graph()), samples=0)

    def test_claw_witness(self):
        claw, restriction = claw_witness_restriction(star_graph(3))
        self.assertEqual(claw, (0, 1, 2, 3))
        self.assertEqual(restriction, CLAW_DIAGONAL)
        self.assertIsNone(claw_witness_restriction(c6_graph()))

    def test_compatible_splitting(self):
        split = proper_splitting(independence_poly(c6_graph()), [0, 1])
        verdict = same_phase_compatible_probe(split.polys(), ray_samples=4, weight_samples=4, seed=1)
        self.assertTrue(verdict.corroborated)

    def test_rayleigh_p3(self):
        p = independence_poly(path_graph(3))
        point = {0: -1, 1: 1, 2: -1}
        self.assertEqual(rayleigh_difference(p, point, 0, 2), -1)
        verdict = strongly_rayleigh_probe(p, points=[point])
        self.assertTrue(verdict.refuted)
        self.assertEqual(verdict.witness["pair"], [0, 2])
        self.assertEqual(verdict.exact_values, {"lhs": "0", "rhs": "1"})

    def test_rayleigh_complete(self):
        for n in range(1, 9):
            p = independence_poly(complete_graph(n))
            self.assertTrue(strongly_rayleigh_probe(p, samples=100, seed=n).corroborated, msg=n)

    def test_shifted_ray(self):
        self.assertTrue(shifted_ray_probe(independence_poly(complete_graph(3)), samples=10).corroborated)
        verdict = shifted_ray_probe(independence_poly(star_graph(3)), samples=10)
        self.assertTrue(verdict.refuted)
        self.assertEqual(verdict.witness["sample"], 0)

    def test_to_json(self):
        out = same_phase_probe(independence_poly(star_graph(3)), samples=3).to_json()
        self.assertEqual(out["outcome"], "RefutedWithWitness")
        self.assertEqual(set(out), {"outcome", "samples", "seed", "witness", "exact_values"})


class DecideTest(unittest.TestCase):
    def test_same_phase(self):
        self.assertFalse(decide_same_phase_stable_independence(star_graph(3)))
        self.assertTrue(decide_same_phase_stable_independence(c6_graph()))

    def test_real_stable(self):
        self.assertTrue(decide_real_stable_independence(complete_graph(3)))
        self.assertFalse(decide_real_stable_independence(path_graph(3)))
        with self.assertRaises(ValueError):
            decide_real_stable_independence(empty_graph(2))

    def test_induced_p3(self):
        self.assertEqual(find_induced_p3(path_graph(3)), (0, 1, 2))
        self.assertIsNone(find_induced_p3(complete_graph(4)))


class HypergraphStabilityTest(unittest.TestCase):
    def test_three_edge(self):
        H = Hypergraph(3, [(0, 1, 2)])
        d = hypergraph_independence_poly(H).diagonal()
        self.assertEqual(d, UnivariatePoly([1, 3, 3]))
        self.assertEqual(count_real_roots(d), 0)
        self.assertFalse(decide_hypergraph_same_phase(H))

    def test_graph_hypergraph(self):
        self.assertTrue(decide_hypergraph_same_phase(Hypergraph.from_graph(c6_graph())))
        self.assertFalse(decide_hypergraph_same_phase(Hypergraph.from_graph(star_graph(3))))

    def test_witness_restriction(self):
        # the pair makes the first triple redundant; the 4-edge stays
        H = Hypergraph(6, [(0, 1), (0, 1, 2), (2, 3, 4, 5)])
        R, edge, restriction = hypergraph_witness_restriction(H)
        self.assertEqual(R.edges, ((0, 1), (2, 3, 4, 5)))
        self.assertEqual(edge, (2, 3, 4, 5))
        self.assertEqual(restriction, UnivariatePoly([1, 4, 6, 4]))
        self.assertFalse(is_real_rooted(restriction))

        R, claw, restriction = hypergraph_witness_restriction(Hypergraph.from_graph(star_graph(3)))
        self.assertEqual(claw, (0, 1, 2, 3))
        self.assertEqual(restriction, CLAW_DIAGONAL)

        self.assertIsNone(hypergraph_witness_restriction(Hypergraph.from_graph(c6_graph())))
        self.assertIsNone(hypergraph_witness_restriction(Hypergraph(3, [(0, 1), (0, 1, 2)])))

    def test_reducible(self):
        # the triple contains the pair, so it reduces to a single edge
        H = Hypergraph(3, [(0, 1), (0, 1, 2)])
        self.assertTrue(decide_hypergraph_same_phase(H))
        self.assertTrue(same_phase_probe(hypergraph_independence_poly(H), samples=5).corroborated)


if __name__ == "__main__":
    with open("stability-tests.xml", "wb") as outf:
        unittest.main(
            testRunner=xmlrunner.XMLTestRunner(output=outf),
            failfast=False,
            buffer=False,
            catchbreak=False,
        )
