#!/usr/bin/env python

import os
import tempfile
import unittest

import numpy as np
import xmlrunner

from stableset.base import (
    ClawPresent,
    Graph,
    GraphFormatError,
    Hypergraph,
    all_simplicial_cliques,
    classify_connected_claw_and_triangle_free,
    clique_number,
    complete_graph,
    cycle_graph,
    fig_p_graph,
    find_claw,
    from_graph6,
    is_block_graph,
    is_claw_free,
    is_simplicial_graph,
    line_graph,
    load_graph,
    named_graph,
    neighbor_closure_Sv,
    parse_edge_list,
    parse_hyperedge_list,
    path_graph,
    random_hypergraph,
    reduce_hypergraph,
    schlafli_graph,
    srg_parameters,
    star_graph,
    to_graph6,
    w6_graph,
)
from stableset.base.graph import simplicial_violation


class GraphTest(unittest.TestCase):
    def test_bad_edges(self):
        with self.assertRaises(ValueError):
            Graph(3, [(0, 0)])
        with self.assertRaises(ValueError):
            Graph(3, [(0, 3)])

    def test_duplicate_edges_collapse(self):
        G = Graph(3, [(0, 1), (1, 0), (1, 2)])
        self.assertEqual(G.edges, ((0, 1), (1, 2)))

    def test_claw(self):
        self.assertEqual(find_claw(star_graph(3)), (0, 1, 2, 3))
        self.assertIsNone(find_claw(cycle_graph(6)))
        self.assertTrue(is_claw_free(w6_graph()))

    def test_line_graph(self):
        L = line_graph(fig_p_graph())
        self.assertEqual(L.line_graph.names, ("ab", "ac", "av", "bc"))
        # av and bc are the only disjoint pair of edges
        self.assertFalse(L.line_graph.has_edge(L.edge_id(0, 3), L.edge_id(1, 2)))
        self.assertEqual(len(L.line_graph.edges), 5)
        self.assertTrue(is_claw_free(L.line_graph))

    def test_simplicial(self):
        G = fig_p_graph()
        self.assertTrue(is_simplicial_graph(G))
        self.assertIn((3,), [tuple(K) for K in all_simplicial_cliques(G)])
        self.assertEqual(simplicial_violation(cycle_graph(6), [0]), (0, 1, 5))

    def test_neighbor_closure(self):
        S = neighbor_closure_Sv(path_graph(3), 1)
        self.assertEqual(S.edges, ((0, 1), (0, 2), (1, 2)))

    def test_classify(self):
        c = classify_connected_claw_and_triangle_free(cycle_graph(5))
        self.assertEqual(c.kind, "cycle")
        self.assertEqual(c.order, (0, 1, 2, 3, 4))
        self.assertEqual(classify_connected_claw_and_triangle_free(path_graph(4)).kind, "path")
        self.assertEqual(classify_connected_claw_and_triangle_free(star_graph(3)).kind, "not-applicable")

    def test_block_graph(self):
        self.assertTrue(is_block_graph(fig_p_graph()))
        self.assertFalse(is_block_graph(cycle_graph(4)))


class SchlafliTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.G = schlafli_graph()

    def test_parameters(self):
        self.assertEqual(srg_parameters(self.G), (27, 16, 10, 8))

    def test_structure(self):
        self.assertEqual(clique_number(self.G), 6)
        self.assertTrue(is_claw_free(self.G))
        self.assertFalse(is_simplicial_graph(self.G))

    def test_named(self):
        self.assertEqual(named_graph("@schlafli"), self.G)


class GraphIOTest(unittest.TestCase):
    def test_edge_list(self):
        G = parse_edge_list("# triangle\n3 3\n0 1\n1 2\n0 2\n")
        self.assertEqual(G, complete_graph(3))

    def test_edge_list_errors(self):
        with self.assertRaises(GraphFormatError) as cm:
            parse_edge_list("2 1\n0 5\n")
        self.assertEqual(cm.exception.line, 2)

        with self.assertRaises(GraphFormatError) as cm:
            parse_edge_list("3 2\n0 1\n")
        self.assertEqual(cm.exception.line, 1)

        with self.assertRaises(GraphFormatError) as cm:
            parse_edge_list("3 1\n0 x\n")
        self.assertEqual(cm.exception.line, 2)

    def test_graph6(self):
        G = cycle_graph(5)
        self.assertEqual(from_graph6(to_graph6(G)).edges, G.edges)

    def test_load_graph(self):
        with tempfile.TemporaryDirectory() as tmp_dir:
            path = os.path.join(tmp_dir, "k1.edges")
            with open(path, "w") as f:
                f.write("1 0\n")
            self.assertEqual(load_graph(path).n, 1)

            path = os.path.join(tmp_dir, "c5.g6")
            with open(path, "w") as f:
                f.write(to_graph6(cycle_graph(5)) + "\n")
            self.assertEqual(load_graph(path).edges, cycle_graph(5).edges)

        with self.assertRaises(ValueError):
            load_graph("@no-such-graph")

    def test_hyperedge_list(self):
        H = parse_hyperedge_list("0 1 2\n")
        self.assertEqual(H.n, 3)
        self.assertEqual(H.edges, ((0, 1, 2),))
        with self.assertRaises(GraphFormatError):
            parse_hyperedge_list("0 -1\n")


class HypergraphTest(unittest.TestCase):
    def test_empty_edge(self):
        with self.assertRaises(ValueError):
            Hypergraph(2, [()])

    def test_reduce_comparable(self):
        R = reduce_hypergraph(Hypergraph(3, [(0, 1), (0, 1, 2)]))
        self.assertEqual(R.edges, ((0, 1),))

    def test_reduce_singletons(self):
        R = reduce_hypergraph(Hypergraph(3, [(0,), (0, 1), (1, 2)]))
        self.assertEqual(R.n, 2)
        self.assertEqual(R.edges, ((0, 1),))

    def test_reduce_confluence(self):
        rng = np.random.default_rng(0)
        for _ in range(200):
            H = random_hypergraph(int(rng.integers(1, 11)), rng)
            self.assertEqual(
                reduce_hypergraph(H),
                reduce_hypergraph(H, singletons_first=True),
                msg=str(H),
            )

    def test_claw_present_error(self):
        e = ClawPresent((0, 1, 2, 3))
        self.assertEqual(e.claw, (0, 1, 2, 3))
        self.assertIsInstance(e, ValueError)


if __name__ == "__main__":
    with open("graph-tests.xml", "wb") as outf:
        unittest.main(
            testRunner=xmlrunner.XMLTestRunner(output=outf),
            failfast=False,
            buffer=False,
            catchbreak=False,
        )
