"""Tests for :mod:`echoloc.controllers`."""

import os
import tempfile
from dataclasses import replace
from unittest import TestCase

from echoloc.controllers import counting, graphs, location, traces
from echoloc.domain import (
    GraphOperator,
    Jump,
    LocationStatus,
    RunConfig,
)
from echoloc.errors import ValidationError
from echoloc.serialize import as_json
from echoloc.services.graphs import enumerate_trees


class ScratchTestCase(TestCase):
    """Test case with a scratch directory."""

    def setUp(self):
        """Create the directory."""
        self.directory = tempfile.TemporaryDirectory()
        self.addCleanup(self.directory.cleanup)

    def write(self, name, text):
        """Write a scratch file and return its path."""
        path = os.path.join(self.directory.name, name)
        with open(path, "w") as f:
            f.write(text)
        return path


class TestCountingControllers(TestCase):
    """Test :mod:`.controllers.counting`."""

    def test_spectrum(self):
        """The square has two distinct frequencies below 8."""
        blocks = counting.spectrum(
            RunConfig("spectrum", model="square", cutoff=8.0)
        )
        self.assertEqual([b.multiplicity for b in blocks], [1, 2])

    def test_count(self):
        """Counting functions record their model and point."""
        cf = counting.count(RunConfig("count", model="square",
                                      point=(0.2, 0.4), cutoff=30.0))
        self.assertEqual(cf.model, "square")
        self.assertEqual(cf.point, (0.2, 0.4))
        self.assertTrue(cf)

    def test_missing_settings(self):
        """Model, point and cutoff are required."""
        for run in (RunConfig("count", point=(0.2, 0.4), cutoff=30.0),
                    RunConfig("count", model="square", cutoff=30.0),
                    RunConfig("count", model="square", point=(0.2, 0.4))):
            with self.assertRaises(ValidationError):
                counting.count(run)

    def test_timbre(self):
        """The timbre has one entry per jump."""
        run = RunConfig("timbre", model="square", point=(0.2, 0.4),
                        cutoff=30.0)
        self.assertEqual(len(counting.timbre(run)), len(counting.count(run)))

    def test_kuznecov2(self):
        """The two-point sum of a point with itself is four times N_x."""
        run = RunConfig("kuznecov2", model="square", point=(0.2, 0.4),
                        cutoff=20.0)
        double = counting.kuznecov2(run, (0.2, 0.4))
        single = counting.count(run)
        self.assertAlmostEqual(double.total, 4 * single.total, places=9)
        self.assertEqual(double.second_point, (0.2, 0.4))
        with self.assertRaises(ValidationError):
            counting.kuznecov2(run, ())


class TestCompareController(ScratchTestCase):
    """Test :func:`.controllers.counting.compare_to`."""

    def setUp(self):
        """Store the counting function of a square point."""
        super().setUp()
        stored = counting.count(RunConfig("count", model="square",
                                          point=(0.2, 0.4), cutoff=30.0))
        self.target = self.write("cf.json", as_json(stored))

    def test_same_point(self):
        """The same point matches, at the stored cutoff by default."""
        run = RunConfig("count", model="square", point=(0.2, 0.4))
        self.assertTrue(counting.compare_to(run, self.target).equal)

    def test_weight_tolerance(self):
        """A nearby point differs unless the weight slack is loose."""
        point = (0.2, 0.4 + 1e-6)
        strict = counting.compare_to(
            RunConfig("count", model="square", point=point), self.target
        )
        self.assertFalse(strict.equal)
        self.assertFalse(strict.frequency_mismatch)
        loose = counting.compare_to(
            RunConfig("count", model="square", point=point, weight_tol=1.0),
            self.target,
        )
        self.assertTrue(loose.equal)


class TestTraceControllers(ScratchTestCase):
    """Test :mod:`.controllers.traces`."""

    def test_heat(self):
        """One result per time, with a controlled tail."""
        run = RunConfig("heat", model="sphere", point=(1.1, 2.3),
                        cutoff=100.0)
        results = traces.heat(run, [0.05, 0.1])
        self.assertEqual([r.t for r in results], [0.05, 0.1])
        for result in results:
            self.assertLessEqual(result.tail_bound, 1e-12 * result.value)

    def test_heat_from_target(self):
        """A stored counting function can be transformed."""
        run = RunConfig("count", model="sphere", point=(1.1, 2.3),
                        cutoff=100.0)
        path = self.write("cf.json", as_json(counting.count(run)))
        direct = traces.heat(run, [0.05])
        stored = traces.heat(RunConfig("heat"), [0.05], target=path)
        self.assertEqual(stored, direct)

    def test_heat_needs_times(self):
        """At least one time is needed."""
        with self.assertRaises(ValidationError):
            traces.heat(RunConfig("heat"), [])

    def test_curvature(self):
        """The unit sphere has scalar curvature 2."""
        estimate = traces.curvature(
            RunConfig("curvature", model="sphere", point=(1.1, 2.3))
        )
        self.assertAlmostEqual(estimate.scalar_curvature, 2.0, delta=0.05)
        self.assertGreater(estimate.cutoff, 0)

    def test_wave(self):
        """A string point at 0.3 loops back at times 0.6 and 1.4."""
        run = RunConfig("wave", model="interval:a=1", point=(0.3,),
                        cutoff=200.0, threads=2)
        trace = traces.wave(run, 0.2, 1.8, 0.005)
        self.assertEqual(len(trace.samples), 321)
        self.assertAlmostEqual(trace.sigma, 200 / 3)
        self.assertEqual(len(trace.looping_times), 2)
        self.assertAlmostEqual(trace.looping_times[0], 0.6, delta=0.01)
        self.assertAlmostEqual(trace.looping_times[1], 1.4, delta=0.01)

    def test_wave_bad_grid(self):
        """The time step is positive."""
        run = RunConfig("wave", model="interval:a=1", point=(0.3,),
                        cutoff=200.0)
        with self.assertRaises(ValidationError):
            traces.wave(run, 0.2, 1.8, 0.0)


class TestLocationController(ScratchTestCase):
    """Test :mod:`.controllers.location`."""

    def test_round_trip(self):
        """A stored counting function leads back to its point."""
        run = RunConfig("count", model="square", point=(0.2, 0.4),
                        cutoff=30.0)
        path = self.write("cf.json", as_json(counting.count(run)))
        for model in ("square", None):
            report = location.locate(RunConfig("locate", model=model), path)
            self.assertEqual(report.status, LocationStatus.unique_orbit)
            self.assertTrue(any(
                max(abs(a - b) for a, b in zip(c.point, (0.2, 0.4))) < 1e-9
                for c in report.candidates
            ))

    def test_frequency_tolerance(self):
        """The run's frequency slack reaches the matcher."""
        cf = counting.count(RunConfig("count", model="square",
                                      point=(0.2, 0.4), cutoff=30.0))
        detuned = replace(cf, jumps=tuple(
            Jump(j.frequency * (1 - 1e-7), j.weight) for j in cf.jumps
        ))
        path = self.write("detuned.json", as_json(detuned))
        strict = location.locate(RunConfig("locate"), path)
        self.assertEqual(strict.status, LocationStatus.no_match)
        loose = location.locate(RunConfig("locate", frequency_tol=1e-6),
                                path)
        self.assertEqual(loose.status, LocationStatus.unique_orbit)


class TestGraphController(ScratchTestCase):
    """Test :mod:`.controllers.graphs`."""

    def test_counting_functions(self):
        """One counting function per vertex, or for the one asked for."""
        path = self.write("p3.g6", "Bg\n")
        functions = graphs.graph(RunConfig("graph"), path)
        self.assertEqual(len(functions), 3)
        self.assertEqual(functions[0].model, "graph:Bg")
        (single,) = graphs.graph(RunConfig("graph"), path, vertex=1)
        self.assertEqual(single, functions[1])

    def test_failures(self):
        """Trees on nine vertices include an echolocation failure."""
        path = self.write("trees9.g6", "".join(
            f"{tree.name}\n" for tree in enumerate_trees(9)
        ))
        reports = graphs.graph(RunConfig("graph"), path,
                               GraphOperator.adjacency, find_failures=True)
        self.assertTrue(reports)

    def test_failures_skip_malformed_line(self):
        """A bad line between good ones does not stop the search."""
        good = ["HhE?GC@", "HhE?GCA", "HhE?GCC", "HhE?GE?"]
        clean = self.write("clean.g6", "\n".join(good) + "\n")
        mixed = self.write("mixed.g6", "\n".join(
            good[:1] + ["\"H??\""] + good[1:]
        ) + "\n")
        run = RunConfig("graph")
        expected = graphs.graph(run, clean, GraphOperator.adjacency,
                                find_failures=True)
        with self.assertLogs("echoloc.services.graphs.io", "WARNING"):
            reports = graphs.graph(run, mixed, GraphOperator.adjacency,
                                   find_failures=True)
        self.assertEqual(reports, expected)
        self.assertIn("HhE?GCC", [report.graph6 for report in reports])

    def test_random_sample(self):
        """A seeded sample replaces the input file."""
        first = graphs.graph(RunConfig("graph", seed=4), sample=(3, 5),
                             vertex=0)
        again = graphs.graph(RunConfig("graph", seed=4), sample=(3, 5),
                             vertex=0)
        self.assertEqual(len(first), 3)
        self.assertEqual(first, again)

    def test_needs_one_source(self):
        """Exactly one of a file and a sample is required."""
        path = self.write("p3.g6", "Bg\n")
        with self.assertRaises(ValidationError):
            graphs.graph(RunConfig("graph"))
        with self.assertRaises(ValidationError):
            graphs.graph(RunConfig("graph"), path, sample=(3, 5))
