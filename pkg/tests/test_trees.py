#!/usr/bin/env python

import unittest

import numpy as np
import xmlrunner

from stableset.base import (
    ClawPresent,
    NodeCapExceeded,
    NotSimplicialClique,
    c6_graph,
    complete_graph,
    cycle_graph,
    fig_p_graph,
    random_graph,
    star_graph,
    to_graph6,
    w6_graph,
)
from stableset.trees import (
    canonical_tree,
    graph_with_star,
    induced_path_tree,
    induced_path_tree_at_clique,
    path_count,
    path_tree,
    rooted_labeled_isomorphic,
    simplicial_clique_tree,
    tree_line_graph,
    verify_commuting_diagram,
)
from stableset.utilities import iter_graphs


class PathTreeTest(unittest.TestCase):
    def test_fig_p(self):
        G = fig_p_graph()
        T = path_tree(G, 3)
        self.assertEqual(T.size, 6)
        self.assertEqual(canonical_tree(T), "(3(0(1(2))(2(1))))")
        self.assertTrue(T.has_path_property(G))
        self.assertEqual(T.to_json()["label_name"][0], "v")

    def test_counts(self):
        self.assertEqual(path_count(cycle_graph(5), 0), 9)
        self.assertEqual(path_count(complete_graph(4), 0), 16)
        self.assertEqual(path_tree(complete_graph(4), 0).size, 16)
        self.assertEqual(induced_path_tree(cycle_graph(5), 0).size, 7)
        self.assertEqual(path_count(cycle_graph(5), 0, induced=True), 7)

    def test_bad_root(self):
        with self.assertRaises(ValueError):
            path_tree(cycle_graph(5), 5)

    def test_node_cap(self):
        with self.assertRaises(NodeCapExceeded) as cm:
            path_tree(complete_graph(5), 0, cap=10)
        self.assertEqual(cm.exception.cap, 10)
        self.assertGreater(cm.exception.count, 10)

    def test_isomorphism_ignores_numbering(self):
        G = cycle_graph(5)
        self.assertTrue(rooted_labeled_isomorphic(path_tree(G, 0), path_tree(G, 0)))
        # a different root gives different labels
        self.assertFalse(rooted_labeled_isomorphic(path_tree(G, 0), path_tree(G, 1)))


class CliqueTreeTest(unittest.TestCase):
    def test_w6(self):
        G = w6_graph()
        induced = induced_path_tree_at_clique(G, [0, 1])
        clique_tree = simplicial_clique_tree(G, [0, 1])
        self.assertEqual(induced.size, 15)
        self.assertEqual(clique_tree.size, 14)
        self.assertTrue(clique_tree.is_block_graph())
        self.assertTrue(rooted_labeled_isomorphic(tree_line_graph(induced), clique_tree))

    def test_graph_with_star(self):
        star = graph_with_star(w6_graph(), [0, 1])
        self.assertEqual(star.n, 7)
        self.assertEqual(sorted(star.neighbors(6)), [0, 1])
        self.assertEqual(star.name(6), "*")
        with self.assertRaises(ValueError):
            graph_with_star(w6_graph(), [0, 2])

    def test_not_simplicial(self):
        with self.assertRaises(NotSimplicialClique) as cm:
            simplicial_clique_tree(c6_graph(), [0])
        self.assertEqual(cm.exception.u, 0)
        self.assertEqual(cm.exception.pair, (1, 5))

    def test_claw(self):
        with self.assertRaises(ClawPresent) as cm:
            simplicial_clique_tree(star_graph(3), [1])
        self.assertEqual(cm.exception.claw, (0, 1, 2, 3))

    def test_to_json(self):
        S = simplicial_clique_tree(fig_p_graph(), [3])
        out = S.to_json()
        self.assertEqual(set(out), {"label", "label_name", "edges", "root_clique"})
        self.assertEqual(out["root_clique"], [0])
        self.assertEqual(out["label_name"][0], "v")


class DiagramTest(unittest.TestCase):
    def test_fig_p(self):
        G = fig_p_graph()
        for v in G.vertices:
            report = verify_commuting_diagram(G, v)
            self.assertTrue(report.holds, msg=report.to_json())

    def test_connected_corpus(self):
        for graph_id, G in iter_graphs(5, connected=True):
            for v in G.vertices:
                report = verify_commuting_diagram(G, v)
                self.assertTrue(report.holds, msg=f"{graph_id}: {report.to_json()}")

    def test_random_connected(self):
        rng = np.random.default_rng(5)
        for _ in range(200):
            G = random_graph(int(rng.integers(2, 9)), rng, connected=True)
            for v in G.vertices:
                report = verify_commuting_diagram(G, v)
                self.assertTrue(report.holds, msg=f"{to_graph6(G)} at {v}: {report.to_json()}")


if __name__ == "__main__":
    with open("trees-tests.xml", "wb") as outf:
        unittest.main(
            testRunner=xmlrunner.XMLTestRunner(output=outf),
            failfast=False,
            buffer=False,
            catchbreak=False,
        )
