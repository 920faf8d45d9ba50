"""
Corpus suites that sweep every small graph and cross-check theorems against
exact computations.

Each suite is a class in the style of a measurement: settings are attributes
that can be given as keyword arguments, progress goes through a
``progress_update`` callback and every run is logged with
:mod:`stableset.base.write_log`. Per-graph work is done by module level
functions so it can be handed to a process pool.
"""

import concurrent.futures
import datetime
import os
import traceback
import warnings

import numpy as np
import pandas as pd

import stableset.base.write_log as write_log

from stableset.base.config import load_config
from stableset.base.errors import NodeCapExceeded
from stableset.base.graph import (
    all_simplicial_cliques,
    is_claw_free,
    is_connected,
)
from stableset.base.graph_io import dump_json, format_edge_list, from_graph6, to_graph6
from stableset.base.terminal_user import terminal_progress_update
from stableset.bounds.checks import (
    bound_report,
    check_lambda1_monotone_edge,
    check_lambda1_monotone_vertex,
)
from stableset.bounds.divisibility import (
    verify_divisibility,
    verify_godsil_matching_divisibility,
)
from stableset.poly.graph_polys import independence_poly
from stableset.stability.decide import (
    decide_real_stable_independence,
    decide_same_phase_stable_independence,
    find_induced_p3,
)
from stableset.stability.probes import (
    claw_witness_restriction,
    same_phase_probe,
    strongly_rayleigh_probe,
)
from stableset.stability.roots import is_real_rooted
from stableset.trees.diagram import verify_commuting_diagram

from .corpus import MAX_N, iter_graph6_file, iter_graphs


def _violation(check, **detail):
    return {"check": check, **{k: v for k, v in sorted(detail.items())}}


def _skipped(graph_id, err):
    return {"graph_id": graph_id, "reason": str(err)}


# ---------------------------[Per-graph workers]---------------------------


def stability_worker(job):
    """
    Compare the claw-free decision with the same-phase probe, and the
    completeness decision with the strong Rayleigh probe.
    """
    graph_id, G, opts = job
    violations = []
    checks = 1

    p = independence_poly(G)
    decided = decide_same_phase_stable_independence(G)
    if decided:
        probe = same_phase_probe(p, samples=opts["samples"], seed=opts["seed"])
        if probe.refuted:
            violations.append(_violation("same_phase", decided=True, probe=probe.to_json()))
    else:
        claw, restriction = claw_witness_restriction(G)
        if is_real_rooted(restriction):
            violations.append(_violation("same_phase", decided=False, claw=list(claw)))

    if is_connected(G):
        checks += 1
        if decide_real_stable_independence(G):
            probe = strongly_rayleigh_probe(p, samples=opts["points"], seed=opts["seed"])
            if probe.refuted:
                violations.append(_violation("real_stable", decided=True, probe=probe.to_json()))
        else:
            u, v, w = find_induced_p3(G)
            point = {x: 0 for x in G.vertices}
            point.update({u: -1, v: 1, w: -1})
            probe = strongly_rayleigh_probe(p, points=[point])
            if not probe.refuted:
                violations.append(_violation("real_stable", decided=False, p3=[u, v, w]))

    return {"graph_id": graph_id, "n": G.n, "checks": checks, "violations": violations}


def diagram_worker(job):
    """Check the tree isomorphisms at every vertex of a connected graph."""
    graph_id, G, opts = job
    violations = []
    checks = 0
    for v in G.vertices:
        report = verify_commuting_diagram(G, v, cap=opts["node_cap"])
        checks += 1
        if not report.holds:
            violations.append(_violation("diagram", report=report.to_json()))
    return {"graph_id": graph_id, "n": G.n, "checks": checks, "violations": violations}


def divisibility_worker(job):
    """
    Certify divisibility at every simplicial clique of a claw-free graph, and
    the matching divisibility at every vertex of small graphs.
    """
    graph_id, G, opts = job
    violations = []
    checks = 0
    if is_claw_free(G):
        for K in all_simplicial_cliques(G):
            cert = verify_divisibility(G, K, cap=opts["node_cap"])
            checks += 1
            if not cert.holds:
                violations.append(_violation("divisibility", certificate=cert.to_json()))
    if G.n <= opts["matching_max_n"]:
        for v in G.vertices:
            cert = verify_godsil_matching_divisibility(G, v, cap=opts["node_cap"])
            checks += 1
            if not cert.holds:
                violations.append(_violation("matching_divisibility", certificate=cert.to_json()))
    return {"graph_id": graph_id, "n": G.n, "checks": checks, "violations": violations}


def bounds_worker(job):
    """Run every λ₁ bound and the seeded deletions assigned to this graph."""
    graph_id, G, opts = job
    report = bound_report(G, graph_id=graph_id)
    entries = list(report.bounds)

    rng = np.random.default_rng([opts["seed"], opts["index"]])
    for _ in range(opts["deletions"]):
        if G.edges and rng.integers(2):
            e = G.edges[int(rng.integers(len(G.edges)))]
            entries.append(check_lambda1_monotone_edge(G, e))
        else:
            entries.append(check_lambda1_monotone_vertex(G, int(rng.integers(G.n))))

    violations = [_violation("bound", entry=b.to_json()) for b in entries if b.holds is False]
    checks = sum(1 for b in entries if b.holds is not None)
    return {"graph_id": graph_id, "n": G.n, "checks": checks, "violations": violations}


def _guarded(worker):
    # a node cap hit skips the graph instead of failing the sweep
    def run(job):
        try:
            return worker(job)
        except NodeCapExceeded as e:
            graph_id, G, _ = job
            return {"graph_id": graph_id, "n": G.n, "checks": 0, "violations": [], "skipped": str(e)}

    return run


def _run_job(args):
    name, job = args
    return _guarded(WORKERS[name])(job)


WORKERS = {
    "stability-iff-clawfree": stability_worker,
    "diagram": diagram_worker,
    "divisibility": divisibility_worker,
    "bounds": bounds_worker,
}


# --------------------------------[Suites]--------------------------------


class Suite:
    """
    Sweep a corpus of graphs with one theorem check.

    Attributes
    ----------
    max_n : int
        Largest graph order, at most 8.
    min_n : int
        Smallest graph order.
    graph6_file : str or None
        Read graphs from this graph6 file instead of enumerating them.
    seed : int
        Seed for every sampled probe.
    samples : int
        Rays per same-phase probe.
    points : int
        Points per strong Rayleigh probe.
    jobs : int
        Worker processes. 0 uses every core, 1 runs in this process.
    node_cap : int or None
        Cap on tree constructions.
    outdir : str
        Directory for the run log.
    progress_update : callable
        Progress callback, see :func:`terminal_progress_update`.
    """

    #: name used in logs and reports
    measurement_name = "suite"

    #: only connected graphs are swept
    connected_only = False

    no_log = ()

    def __init__(self, **kwargs):
        defaults = load_config()
        self.max_n = 6
        self.min_n = 1
        self.graph6_file = None
        self.seed = defaults["seed"]
        self.samples = defaults["samples"]
        self.points = defaults["points"]
        self.jobs = defaults["jobs"]
        self.node_cap = None
        self.outdir = ""
        self.progress_update = terminal_progress_update
        self.info = {}

        for k, v in kwargs.items():
            if hasattr(self, k):
                setattr(self, k, v)
            else:
                raise TypeError(f"{k} is not a valid keyword argument")

    def param_check(self):
        if self.max_n > MAX_N:
            raise ValueError(f"max_n = {self.max_n} is above the supported {MAX_N}")
        if self.min_n < 1 or self.min_n > self.max_n:
            raise ValueError(f"min_n = {self.min_n} must be in 1..max_n")
        if self.jobs < 0:
            raise ValueError(f"jobs must be 0 or positive, got {self.jobs}")

    def worker_options(self):
        return {
            "seed": self.seed,
            "samples": self.samples,
            "points": self.points,
            "node_cap": self.node_cap,
        }

    def graphs(self):
        """List of ``(graph_id, Graph)`` to sweep."""
        if self.graph6_file:
            return list(iter_graph6_file(self.graph6_file, connected=self.connected_only))
        return list(
            iter_graphs(
                self.max_n,
                connected=self.connected_only,
                min_n=self.min_n,
                progress_update=self.progress_update,
            )
        )

    def jobs_for(self, graphs):
        opts = self.worker_options()
        return [(gid, G, dict(opts, index=i)) for i, (gid, G) in enumerate(graphs)]

    def _results(self, jobs):
        items = [(self.measurement_name, job) for job in jobs]
        if self.jobs == 1:
            yield from map(_run_job, items)
            return
        workers = self.jobs or os.cpu_count()
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
            yield from executor.map(_run_job, items, chunksize=8)

    def run(self):
        """
        Run the suite.

        Returns
        -------
        SuiteReport
        """
        self.param_check()

        # -------------------------[Get Test Start Time]-------------------------

        self.info["Tstart"] = datetime.datetime.now()
        self.info["test"] = self.measurement_name

        # ---------------------------[Fill log entries]---------------------------

        self.info.update(write_log.fill_log(self))

        if self.outdir:
            os.makedirs(self.outdir, exist_ok=True)
        write_log.pre(info=self.info, outdir=self.outdir)

        try:
            graphs = self.graphs()
            jobs = self.jobs_for(graphs)
            results = []
            for i, res in enumerate(self._results(jobs)):

                # -----------------------[Update progress]-------------------------

                if not self.progress_update("suite", len(jobs), i, msg=self.measurement_name):
                    raise SystemExit("Exit from user")

                if res.get("skipped"):
                    warnings.warn(f"skipped {res['graph_id']} : {res['skipped']}", category=RuntimeWarning)
                for v in res["violations"]:
                    self.progress_update("check-fail", len(jobs), i, msg=f"{res['graph_id']} {v['check']}")
                results.append(res)

            report = SuiteReport.from_results(self, results)
            self.info["Post Test Notes"] = report.summary()
        except BaseException:
            self.info["Error Notes"] = traceback.format_exc()
            raise
        finally:
            write_log.post(info=self.info, outdir=self.outdir)

        return report


class StabilityIffClawfree(Suite):
    measurement_name = "stability-iff-clawfree"


class Diagram(Suite):
    measurement_name = "diagram"
    connected_only = True


class Divisibility(Suite):
    """
    Divisibility certificates on connected graphs.

    Attributes
    ----------
    matching_max_n : int
        Largest order for the matching divisibility check, which builds a
        full path tree per vertex.
    """

    measurement_name = "divisibility"
    connected_only = True

    def __init__(self, **kwargs):
        self.matching_max_n = 5
        super().__init__(**kwargs)

    def worker_options(self):
        return dict(super().worker_options(), matching_max_n=self.matching_max_n)


class Bounds(Suite):
    """
    λ₁ bounds on every graph plus seeded deletion monotonicity.

    Attributes
    ----------
    deletions : int
        Total number of seeded vertex or edge deletions, spread over the
        corpus.
    """

    measurement_name = "bounds"

    def __init__(self, **kwargs):
        self.deletions = 500
        super().__init__(**kwargs)

    def jobs_for(self, graphs):
        jobs = super().jobs_for(graphs)
        counts = np.zeros(len(jobs), dtype=int)
        if jobs:
            rng = np.random.default_rng(self.seed)
            for i in rng.integers(len(jobs), size=self.deletions):
                counts[i] += 1
        for (_, _, opts), c in zip(jobs, counts):
            opts["deletions"] = int(c)
        return jobs


SUITES = {
    cls.measurement_name: cls
    for cls in (StabilityIffClawfree, Diagram, Divisibility, Bounds)
}


# ------------------------------[Suite report]------------------------------


class SuiteReport:
    """
    Aggregate outcome of a suite run.

    Results are sorted by graph order then graph6 id so reports do not
    depend on the number of worker processes.
    """

    def __init__(self, suite, settings, results, version):
        self.suite = suite
        self.settings = settings
        self.results = sorted(results, key=lambda r: (r["n"], r["graph_id"]))
        self.version = version

    @classmethod
    def from_results(cls, suite, results):
        settings = {
            "max_n": suite.max_n,
            "min_n": suite.min_n,
            "seed": suite.seed,
            "samples": suite.samples,
            "points": suite.points,
            "graph6_file": suite.graph6_file,
        }
        for extra in ("matching_max_n", "deletions"):
            if hasattr(suite, extra):
                settings[extra] = getattr(suite, extra)
        return cls(suite.measurement_name, settings, results, write_log._version)

    @property
    def graphs(self):
        return len(self.results)

    @property
    def checks(self):
        return sum(r["checks"] for r in self.results)

    @property
    def violations(self):
        return [dict(v, graph_id=r["graph_id"]) for r in self.results for v in r["violations"]]

    @property
    def skipped(self):
        return [_skipped(r["graph_id"], r["skipped"]) for r in self.results if r.get("skipped")]

    @property
    def ok(self):
        return not self.violations

    def offending_graphs(self):
        """graph6 and edge-list text of every graph with a violation."""
        out = []
        for r in self.results:
            if r["violations"]:
                G = from_graph6(r["graph_id"])
                out.append({"graph6": to_graph6(G), "edge_list": format_edge_list(G)})
        return out

    def summary(self):
        return (
            f"{self.suite}: {self.graphs} graphs, {self.checks} checks, "
            f"{len(self.violations)} violations, {len(self.skipped)} skipped"
        )

    def to_json(self):
        return {
            "suite": self.suite,
            "version": self.version,
            "settings": self.settings,
            "graphs": self.graphs,
            "checks": self.checks,
            "violations": self.violations,
            "offending_graphs": self.offending_graphs(),
            "skipped": self.skipped,
        }

    def to_frame(self):
        """One row per graph."""
        return pd.DataFrame(
            {
                "suite": [self.suite] * len(self.results),
                "graph_id": [r["graph_id"] for r in self.results],
                "n": [r["n"] for r in self.results],
                "checks": [r["checks"] for r in self.results],
                "violations": [len(r["violations"]) for r in self.results],
                "skipped": [bool(r.get("skipped")) for r in self.results],
            }
        )

    def write(self, json_path, csv_path=None):
        """
        Write the JSON report and, when `csv_path` is given, the per-graph CSV
        summary.
        """
        with open(json_path, "w", encoding="utf-8") as f:
            dump_json(self.to_json(), f)
        if csv_path is not None:
            self.to_frame().to_csv(csv_path, index=False)


def run_suites(names, **kwargs):
    """
    Run several suites with the same settings.

    Parameters
    ----------
    names : list of str
        Suite names, or ``["all"]``.
    **kwargs
        Passed to each suite. Settings a suite does not know are dropped, so
        ``deletions`` only reaches the bounds suite.

    Returns
    -------
    list of SuiteReport
    """
    if list(names) == ["all"]:
        names = list(SUITES)
    reports = []
    for name in names:
        try:
            cls = SUITES[name]
        except KeyError:
            raise ValueError(f"Unknown suite '{name}', expected one of {tuple(SUITES)} or 'all'") from None
        suite = cls()
        for k, v in kwargs.items():
            if hasattr(suite, k):
                setattr(suite, k, v)
        reports.append(suite.run())
    return reports
