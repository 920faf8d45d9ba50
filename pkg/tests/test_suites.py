#!/usr/bin/env python

import json
import os
import tempfile
import unittest

import networkx as nx
import pandas as pd
import xmlrunner

from stableset.base import cycle_graph, empty_graph, to_graph6
from stableset.base.terminal_user import quiet_progress_update
from stableset.base.write_log import read_entries
from stableset.utilities import (
    Bounds,
    Diagram,
    Divisibility,
    StabilityIffClawfree,
    atlas_graphs,
    augment_by_vertex,
    graphs_of_order,
    iter_graphs,
    run_suites,
)


class CorpusTest(unittest.TestCase):
    def test_counts(self):
        self.assertEqual(len(list(iter_graphs(4))), 18)
        self.assertEqual(len(list(iter_graphs(4, connected=True))), 10)
        self.assertEqual(len(list(iter_graphs(5, min_n=5))), 34)
        self.assertEqual(len(list(iter_graphs(5, connected=True, min_n=5))), 21)

    def test_augment_matches_atlas(self):
        grown = augment_by_vertex(atlas_graphs(4), 5)
        self.assertEqual(len(grown), 34)
        for g in atlas_graphs(5):
            self.assertTrue(any(nx.is_isomorphic(g, h) for h in grown))

    def test_limits(self):
        with self.assertRaises(ValueError):
            graphs_of_order(9)
        with self.assertRaises(ValueError):
            list(iter_graphs(9))

    def test_progress(self):
        calls = []

        def progress(prog_type, num_trials, current_trial, msg=""):
            calls.append((prog_type, num_trials, current_trial))
            return True

        list(iter_graphs(3, progress_update=progress))
        self.assertEqual(calls, [("corpus", 3, 1), ("corpus", 3, 2), ("corpus", 3, 3)])


class SuiteTest(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)
        self.outdir = self.tmp.name

    def make(self, cls, **kwargs):
        return cls(
            max_n=4,
            jobs=1,
            seed=1,
            samples=5,
            points=10,
            outdir=self.outdir,
            progress_update=quiet_progress_update,
            **kwargs,
        )

    def test_stability(self):
        report = self.make(StabilityIffClawfree).run()
        self.assertTrue(report.ok)
        self.assertEqual(report.graphs, 18)
        # one same-phase check per graph and one real-stability check per connected graph
        self.assertEqual(report.checks, 28)

    def test_diagram(self):
        report = self.make(Diagram).run()
        self.assertTrue(report.ok)
        self.assertEqual(report.graphs, 10)
        self.assertEqual(report.checks, 33)

    def test_divisibility(self):
        report = self.make(Divisibility, matching_max_n=4).run()
        self.assertTrue(report.ok, msg=report.violations)
        self.assertEqual(report.graphs, 10)
        self.assertEqual(report.settings["matching_max_n"], 4)

    def test_bounds(self):
        report = self.make(Bounds, deletions=20).run()
        self.assertTrue(report.ok, msg=report.violations)
        self.assertEqual(report.settings["deletions"], 20)

    def test_bounds_deletions_are_seeded(self):
        a = self.make(Bounds, deletions=20).run()
        b = self.make(Bounds, deletions=20).run()
        self.assertEqual(a.checks, b.checks)

    def test_process_pool(self):
        serial = self.make(Diagram).run()
        suite = self.make(Diagram)
        suite.jobs = 2
        pooled = suite.run()
        self.assertEqual(serial.to_json(), pooled.to_json())

    def test_log(self):
        report = self.make(StabilityIffClawfree).run()
        entries = read_entries(self.outdir)
        self.assertEqual(len(entries), 1)
        entry = entries[0]
        self.assertEqual(entry["test"], "stability-iff-clawfree")
        self.assertTrue(entry["complete"])
        self.assertEqual(entry["post_notes"], report.summary() + "\n")
        self.assertIn("max_n = 4", entry["Arguments"])

    def test_report_files(self):
        report = self.make(Diagram).run()
        json_path = os.path.join(self.outdir, "diagram.json")
        csv_path = os.path.join(self.outdir, "diagram.csv")
        report.write(json_path, csv_path)

        with open(json_path) as f:
            out = json.load(f)
        self.assertEqual(out["suite"], "diagram")
        self.assertEqual(out["graphs"], 10)
        self.assertEqual(out["violations"], [])
        self.assertEqual(out["offending_graphs"], [])

        df = pd.read_csv(csv_path)
        self.assertEqual(len(df), 10)
        self.assertEqual(list(df["n"]), sorted(df["n"]))
        self.assertEqual(df["checks"].sum(), 33)

    def test_graph6_file(self):
        path = os.path.join(self.outdir, "mixed.g6")
        with open(path, "w") as f:
            f.write(to_graph6(cycle_graph(5)) + "\n")
            f.write(to_graph6(empty_graph(2)) + "\n")
        suite = self.make(Diagram, graph6_file=path)
        with self.assertWarns(RuntimeWarning):
            report = suite.run()
        self.assertEqual(report.graphs, 1)
        self.assertEqual(report.checks, 5)

    def test_node_cap_skips(self):
        with self.assertWarns(RuntimeWarning):
            report = self.make(Diagram, node_cap=3).run()
        self.assertTrue(report.skipped)
        self.assertTrue(report.ok)

    def test_bad_settings(self):
        with self.assertRaises(TypeError):
            StabilityIffClawfree(bogus=1)
        with self.assertRaises(ValueError):
            StabilityIffClawfree(max_n=9, outdir=self.outdir, progress_update=quiet_progress_update).run()
        with self.assertRaises(ValueError):
            run_suites(["no-such-suite"])

    def test_run_suites(self):
        reports = run_suites(
            ["all"],
            max_n=3,
            jobs=1,
            samples=3,
            points=5,
            deletions=5,
            outdir=self.outdir,
            progress_update=quiet_progress_update,
        )
        self.assertEqual(
            [r.suite for r in reports],
            ["stability-iff-clawfree", "diagram", "divisibility", "bounds"],
        )
        self.assertTrue(all(r.ok for r in reports))
        self.assertEqual(len(read_entries(self.outdir)), 4)


if __name__ == "__main__":
    with open("suites-tests.xml", "wb") as outf:
        unittest.main(
            testRunner=xmlrunner.XMLTestRunner(output=outf),
            failfast=False,
            buffer=False,
            catchbreak=False,
        )
