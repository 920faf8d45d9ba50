#!/usr/bin/env python

import os
import tempfile
import unittest

from fractions import Fraction
from unittest import mock

import numpy as np
import xmlrunner

from stableset.base import (
    c6_graph,
    cycle_graph,
    fig_p_graph,
    path_graph,
    random_graph,
    set_config,
    star_graph,
)
from stableset.poly import (
    Labeling,
    MultivariatePoly,
    RayDirection,
    SplitViolation,
    TermCapExceeded,
    UnivariatePoly,
    clique_expansion,
    closure,
    edge_matching_poly,
    edge_recurrence_rhs,
    edge_to_vertex_substitution,
    exact_divide,
    independence_poly,
    independence_poly_bruteforce,
    proper_splitting,
    relative_independence_poly,
    relative_poly,
    relative_vertex_matching_poly,
    set_term_cap,
    term_cap,
    univariate_restriction,
    vertex_matching_diagonal,
    vertex_matching_poly,
    vertex_matching_poly_map,
)
from stableset.stability import same_phase_probe
from stableset.trees import path_tree, simplicial_clique_tree


class GraphPolyTest(unittest.TestCase):
    def test_independence_c6(self):
        p = independence_poly(c6_graph())
        self.assertEqual(len(p), 18)
        self.assertEqual(p.diagonal(), UnivariatePoly([1, 6, 9, 2]))
        self.assertTrue(str(p).startswith("1 + x_a + x_b"))
        self.assertTrue(str(p).endswith("x_a x_c x_e + x_b x_d x_f"))

    def test_edge_matching_c6(self):
        p = edge_matching_poly(cycle_graph(6))
        self.assertEqual(len(p), 18)
        self.assertEqual(p.diagonal(), UnivariatePoly([1, 6, 9, 2]))

    def test_vertex_matching_c6(self):
        G = cycle_graph(6)
        p = vertex_matching_poly(G)
        # the two perfect matchings share one monomial
        self.assertEqual(len(p), 17)
        self.assertEqual(p.coeff(tuple((v, 1) for v in range(6))), -2)
        self.assertEqual(p.coeff(((0, 1), (1, 1))), -1)
        self.assertEqual(p.diagonal(), UnivariatePoly([1, 0, -6, 0, 9, 0, -2]))
        self.assertEqual(vertex_matching_diagonal(G), p.diagonal())
        self.assertEqual(vertex_matching_poly_map(G), p)
        self.assertEqual(edge_to_vertex_substitution(edge_matching_poly(G), G), p)

    def test_claw_diagonal(self):
        d = independence_poly(star_graph(3)).diagonal()
        self.assertEqual(d, UnivariatePoly([1, 4, 3, 1]))
        self.assertEqual(str(d), "1 + 4z + 3z^2 + z^3")

    def test_bruteforce_agrees(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            G = random_graph(int(rng.integers(1, 9)), rng)
            self.assertEqual(independence_poly(G), independence_poly_bruteforce(G))

    def test_edge_recurrence(self):
        G = fig_p_graph()
        for e in G.edges:
            self.assertEqual(edge_recurrence_rhs(G, e), independence_poly(G))

    def test_edge_recurrence_random(self):
        rng = np.random.default_rng(17)
        cases = 0
        while cases < 500:
            G = random_graph(int(rng.integers(2, 9)), rng)
            edges = sorted(G.edges)
            if not edges:
                continue
            e = edges[int(rng.integers(len(edges)))]
            self.assertEqual(edge_recurrence_rhs(G, e), independence_poly(G), msg=f"{G.edges} at {e}")
            cases += 1

    def test_clique_expansion(self):
        G = fig_p_graph()
        base, parts = clique_expansion(G, [0, 1, 2])
        total = base
        for v, f in parts:
            total = total + MultivariatePoly.variable(v) * f
        self.assertEqual(total, independence_poly(G))

    def test_restriction(self):
        p = independence_poly(star_graph(3))
        t = RayDirection({0: Fraction(1, 2), 1: 1, 2: 1, 3: 1})
        self.assertEqual(univariate_restriction(p, t), UnivariatePoly([1, Fraction(7, 2), 3, 1]))
        with self.assertRaises(ValueError):
            univariate_restriction(p, RayDirection({0: 1}))

    def test_restriction_of_plain_dict(self):
        p = independence_poly(star_graph(3))
        self.assertEqual(p.restrict({0: 1, 1: 1, 2: 1, 3: 1}), UnivariatePoly([1, 4, 3, 1]))
        for bad in (0, -1, Fraction(-1, 2)):
            with self.assertRaises(ValueError):
                p.restrict({0: bad, 1: 1, 2: 1, 3: 1})


class SplittingTest(unittest.TestCase):
    def test_matches_clique_expansion(self):
        G = c6_graph()
        p = independence_poly(G)
        split = proper_splitting(p, [0, 1])
        base, parts = clique_expansion(G, [0, 1])
        self.assertEqual(split.f0, base)
        self.assertEqual([(v, f) for v, f in split.parts], parts)
        self.assertEqual(split.reassemble(), p)

    def test_violation(self):
        p = independence_poly(c6_graph())
        with self.assertRaises(SplitViolation) as cm:
            proper_splitting(p, [0, 2])
        self.assertEqual(cm.exception.variables, (0, 2))

    def test_not_multi_affine(self):
        p = MultivariatePoly({((0, 2),): 1, (): 1})
        with self.assertRaises(ValueError):
            proper_splitting(p, [0])


class ClosureTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.p = independence_poly(c6_graph())

    def assertCorroborated(self, q):
        self.assertTrue(same_phase_probe(q, samples=8, seed=1).corroborated, msg=str(q))

    def test_product(self):
        q = MultivariatePoly({(): 1, ((10, 1),): 1, ((11, 1),): 1})
        self.assertCorroborated(closure.product(self.p, q))
        with self.assertRaises(ValueError):
            closure.product(self.p, self.p)

    def test_differentiate(self):
        self.assertCorroborated(closure.differentiate(self.p, 0))

    def test_select(self):
        self.assertCorroborated(closure.select(self.p, 0))

    def test_deselect(self):
        self.assertCorroborated(closure.deselect(self.p, 0))

    def test_invert(self):
        q = closure.invert(self.p)
        self.assertCorroborated(q)
        self.assertEqual(closure.invert(q), self.p)

    def test_project(self):
        q = closure.project(self.p, 3, 0)
        self.assertEqual(q.coeff(((0, 2),)), 1)
        self.assertCorroborated(q)


class DivisionTest(unittest.TestCase):
    def test_exact_divide(self):
        a = MultivariatePoly({(): 1, ((0, 1),): 1})
        b = MultivariatePoly({(): 1, ((1, 1),): 1})
        self.assertEqual(exact_divide(a * b, a), b)
        self.assertIsNone(exact_divide(b, a))

    def test_univariate_power(self):
        p = UnivariatePoly([1, 1])
        self.assertEqual(p ** 3, UnivariatePoly([1, 3, 3, 1]))
        with self.assertRaises(ValueError):
            p ** -1


class RelativePolyTest(unittest.TestCase):
    def test_path_tree(self):
        T = path_tree(cycle_graph(5), 0)
        tree = T.tree
        self.assertEqual(
            relative_independence_poly(tree, T.labeling),
            relative_poly(independence_poly(tree), T.labeling),
        )
        self.assertEqual(
            relative_vertex_matching_poly(tree, T.labeling, within=range(1, T.size)),
            relative_poly(vertex_matching_poly(tree, within=range(1, T.size)), T.labeling),
        )

    def test_clique_tree(self):
        S = simplicial_clique_tree(fig_p_graph(), [3])
        self.assertEqual(
            relative_independence_poly(S.graph, S.labeling),
            relative_poly(independence_poly(S.graph), S.labeling),
        )

    def test_relabel(self):
        p = independence_poly(cycle_graph(4))
        q = relative_poly(p, Labeling([0, 1, 0, 1]))
        self.assertEqual(q.coeff(((0, 2),)), 1)
        self.assertEqual(q.coeff(((0, 1),)), 2)


class TermCapTest(unittest.TestCase):
    def tearDown(self):
        set_term_cap()

    def test_configured_cap(self):
        with tempfile.TemporaryDirectory() as tmp_dir:
            path = os.path.join(tmp_dir, "config.ini")
            set_config("term_cap", 5, path=path)
            with mock.patch("stableset.base.config.config_path", return_value=path):
                set_term_cap()
                self.assertEqual(term_cap(), 5)
                # 1, x_0, x_1, x_2 and x_0 x_2
                self.assertEqual(len(independence_poly(path_graph(3))), 5)
                with self.assertRaises(TermCapExceeded) as cm:
                    independence_poly(c6_graph())
        self.assertEqual(cm.exception.cap, 5)
        self.assertEqual(cm.exception.count, 18)

    def test_explicit_cap(self):
        set_term_cap(3)
        with self.assertRaises(TermCapExceeded):
            MultivariatePoly({(): 1, ((0, 1),): 1, ((1, 1),): 1, ((0, 1), (1, 1)): 1})
        set_term_cap(4)
        self.assertEqual(len(MultivariatePoly({(): 1, ((0, 1),): 1, ((1, 1),): 1, ((0, 1), (1, 1)): 1})), 4)


if __name__ == "__main__":
    with open("poly-tests.xml", "wb") as outf:
        unittest.main(
            testRunner=xmlrunner.XMLTestRunner(output=outf),
            failfast=False,
            buffer=False,
            catchbreak=False,
        )
