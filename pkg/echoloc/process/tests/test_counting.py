"""Tests for :mod:`echoloc.process.counting`."""

import math
from unittest import TestCase

import numpy as np

from echoloc.domain import Jump, CountingFunction, parse_model_spec
from echoloc.errors import MismatchedCutoffs, OutOfRange
from echoloc.process import counting
from echoloc.services.models import InvalidPoint, enumerate_blocks, \
    isometry_orbit

STRING = parse_model_spec("interval:a=1")
SQUARE = parse_model_spec("square")


class TestCountingFunction(TestCase):
    """Test :func:`.counting.counting_function`."""

    def test_string_midpoint(self):
        """Even modes vanish at the midpoint of the string."""
        cf = counting.counting_function(STRING, (0.5,), 10)
        self.assertEqual(len(cf), 2)
        self.assertAlmostEqual(cf.jumps[0].frequency, math.pi)
        self.assertAlmostEqual(cf.jumps[1].frequency, 3 * math.pi)
        for jump in cf.jumps:
            self.assertAlmostEqual(jump.weight, 2.0, places=12)
        self.assertEqual(len(cf.suppressed), 1)
        self.assertAlmostEqual(cf.suppressed[0], 2 * math.pi)

    def test_square_single_jump(self):
        """At (1/3, 1/3) the first jump of the square is 9/4."""
        cutoff = math.pi * math.sqrt(2)
        cf = counting.counting_function(SQUARE, (1 / 3, 1 / 3), cutoff)
        self.assertEqual(len(cf), 1)
        self.assertAlmostEqual(cf.jumps[0].weight, 9 / 4, places=12)

    def test_below_first_frequency(self):
        """Nothing is heard below the first frequency."""
        cf = counting.counting_function(SQUARE, (0.3, 0.4), 4.0)
        self.assertFalse(cf)
        self.assertEqual(counting.evaluate(cf, 4.0), 0.0)

    def test_jumps_are_positive_and_increasing(self):
        """Kept jumps have positive weights at increasing frequencies."""
        cf = counting.counting_function(
            parse_model_spec("rect:b=0.5"), (0.37, 0.21), 60
        )
        self.assertTrue(np.all(np.diff(cf.frequencies) > 0))
        self.assertTrue(np.all(cf.weights > 0))
        self.assertLessEqual(cf.frequencies[-1], 60)

    def test_invalid_point(self):
        """Points outside the chart are refused."""
        with self.assertRaises(InvalidPoint):
            counting.counting_function(STRING, (1.5,), 10)
        with self.assertRaises(InvalidPoint):
            counting.counting_function(SQUARE, (0.5,), 10)

    def test_records_model_and_point(self):
        """The counting function remembers where it was heard."""
        cf = counting.counting_function(SQUARE, (0.2, 0.4), 10)
        self.assertEqual(cf.model, "square")
        self.assertEqual(cf.point, (0.2, 0.4))
        self.assertEqual(cf.cutoff, 10.0)

    def test_pointwise_weyl_law(self):
        """N_x(200) on the square is close to 200**2 / (4 pi)."""
        cf = counting.counting_function(SQUARE, (0.37, 0.61), 200)
        expected = 1 / (4 * math.pi)
        self.assertLessEqual(
            abs(cf.total / 200 ** 2 - expected), 0.05 * expected
        )

    def test_sphere_full_degrees(self):
        """On the sphere N_x(sqrt(L (L+1))) is (L+1)**2 / (4 pi)."""
        cf = counting.counting_function(
            parse_model_spec("sphere"), (1.1, 2.3), 100
        )
        self.assertAlmostEqual(cf.total, 100 ** 2 / (4 * math.pi), places=8)


class TestIsometryInvariance(TestCase):
    """Counting functions agree across an isometry orbit."""

    def assert_orbit_invariant(self, model, point, cutoff):
        """Compare the function at every orbit image with the original."""
        orbit = isometry_orbit(model, point)
        reference = counting.counting_function(model, point, cutoff)
        for image in orbit.points:
            with self.subTest(image=image):
                cf = counting.counting_function(model, image, cutoff)
                self.assertTrue(
                    counting.compare(reference, cf, weight_tol=1e-10).equal
                )
        return orbit

    def test_rectangle(self):
        """Reflections of the half-height rectangle."""
        orbit = self.assert_orbit_invariant(
            parse_model_spec("rect:b=0.5"), (1 / 3, 1 / 4), 40
        )
        self.assertGreaterEqual(len(orbit), 2)

    def test_square(self):
        """All eight symmetries of the square."""
        orbit = self.assert_orbit_invariant(SQUARE, (0.2, 0.37), 40)
        self.assertEqual(len(orbit), 8)


class TestSuppression(TestCase):
    """Test :func:`.counting.assemble`."""

    def test_nodal_zero(self):
        """Weights far below the running mean are suppressed."""
        jumps, suppressed = counting.assemble(
            [(1.0, 2.0), (2.0, 1e-20), (3.0, 4.0), (4.0, -1e-17)]
        )
        self.assertEqual(jumps, (Jump(1.0, 2.0), Jump(3.0, 4.0)))
        self.assertEqual(suppressed, (2.0, 4.0))

    def test_relative_to_mean(self):
        """The threshold scales with large weights."""
        jumps, suppressed = counting.assemble(
            [(1.0, 1e6), (2.0, 1e-9)], threshold=1e-14
        )
        self.assertEqual(len(jumps), 1)
        self.assertEqual(suppressed, (2.0,))

    def test_small_first_weight_kept(self):
        """A small but genuine first weight is kept."""
        jumps, suppressed = counting.assemble([(1.0, 1e-6)])
        self.assertEqual(len(jumps), 1)
        self.assertEqual(suppressed, ())


class TestEvaluate(TestCase):
    """Test :func:`.counting.evaluate`."""

    def setUp(self):
        """Midpoint of the unit string up to 10."""
        self.cf = counting.counting_function(STRING, (0.5,), 10)

    def test_right_continuous(self):
        """The jump at a frequency is included at that frequency."""
        self.assertAlmostEqual(counting.evaluate(self.cf, math.pi), 2.0)
        self.assertEqual(counting.evaluate(self.cf, math.pi - 1e-9), 0.0)
        self.assertAlmostEqual(counting.evaluate(self.cf, 10), 4.0)

    def test_nondecreasing(self):
        """N_x never decreases in the frequency."""
        cf = counting.counting_function(SQUARE, (0.37, 0.61), 60)
        values = [counting.evaluate(cf, f) for f in np.linspace(0, 60, 601)]
        self.assertTrue(np.all(np.diff(values) >= 0))
        self.assertAlmostEqual(values[-1], cf.total, places=9)

    def test_negative(self):
        """N_x vanishes on the negative axis."""
        self.assertEqual(counting.evaluate(self.cf, -1), 0.0)

    def test_beyond_cutoff(self):
        """The tail is never extrapolated."""
        with self.assertRaises(OutOfRange):
            counting.evaluate(self.cf, 10.5)

    def test_complete(self):
        """Complete counting functions can be evaluated anywhere."""
        cf = CountingFunction((Jump(0.0, 0.5), Jump(2.0, 0.5)), 2.0, "graph:x",
                              complete=True)
        self.assertEqual(counting.evaluate(cf, 100.0), 1.0)

    def test_square_center(self):
        """The square center hears a jump of 4 at pi sqrt 2."""
        cf = counting.counting_function(SQUARE, (0.5, 0.5), 5)
        self.assertAlmostEqual(
            counting.evaluate(cf, math.pi * math.sqrt(2)), 4.0, places=12
        )


class TestTimbre(TestCase):
    """Test :func:`.counting.timbre`."""

    def test_string_midpoint(self):
        """Amplitudes are square roots of the jumps."""
        cf = counting.counting_function(STRING, (0.5,), 10)
        entries = counting.timbre(cf).entries
        self.assertEqual(len(entries), 2)
        for entry in entries:
            self.assertAlmostEqual(entry.amplitude, math.sqrt(2))

    def test_empty(self):
        """No jumps, no timbre."""
        cf = CountingFunction((), 1.0, "square")
        self.assertEqual(len(counting.timbre(cf)), 0)

    def test_unit_weights(self):
        """Unit weights are fixed by the square root."""
        cf = CountingFunction((Jump(1.0, 1.0), Jump(2.0, 1.0)), 2.0, "x")
        self.assertEqual(
            [e.amplitude for e in counting.timbre(cf).entries], [1.0, 1.0]
        )


class TestTwoPoint(TestCase):
    """Test :func:`.counting.two_point_counting`."""

    def test_diagonal(self):
        """Doubling a point quadruples every jump."""
        point = (0.23, 0.71)
        single = counting.counting_function(SQUARE, point, 30)
        double = counting.two_point_counting(SQUARE, point, point, 30)
        self.assertEqual(len(single), len(double))
        for one, two in zip(single.jumps, double.jumps):
            self.assertEqual(one.frequency, two.frequency)
            self.assertAlmostEqual(two.weight, 4 * one.weight, places=10)

    def test_symmetric(self):
        """Swapping the points changes nothing."""
        x, y = (0.23, 0.71), (0.6, 0.15)
        forward = counting.two_point_counting(SQUARE, x, y, 25)
        backward = counting.two_point_counting(SQUARE, y, x, 25)
        self.assertTrue(counting.compare(forward, backward).equal)

    def test_cancellation(self):
        """The second string mode is odd about the midpoint."""
        cf = counting.two_point_counting(STRING, (0.25,), (0.75,), 7)
        self.assertEqual(len(cf.suppressed), 1)
        self.assertAlmostEqual(cf.suppressed[0], 2 * math.pi)
        self.assertEqual(len(cf), 1)
        self.assertAlmostEqual(cf.jumps[0].frequency, math.pi)
        self.assertAlmostEqual(cf.jumps[0].weight, 4.0)

    def test_nonnegative(self):
        """Two-point jumps are squared norms."""
        blocks = enumerate_blocks(SQUARE, 30)
        cf = counting.two_point_counting(SQUARE, (0.1, 0.2), (0.8, 0.3), 30)
        self.assertLessEqual(len(cf) + len(cf.suppressed), len(blocks))
        self.assertTrue(np.all(cf.weights >= 0))


class TestCompare(TestCase):
    """Test :func:`.counting.compare`."""

    def test_self(self):
        """A counting function equals itself."""
        cf = counting.counting_function(STRING, (0.3,), 40)
        self.assertTrue(counting.compare(cf, cf).equal)

    def test_reflection(self):
        """Mirror points of the string are homophonic."""
        left = counting.counting_function(STRING, (0.3,), 40)
        right = counting.counting_function(STRING, (0.7,), 40)
        self.assertTrue(counting.compare(left, right).equal)

    def test_first_discrepancy(self):
        """Nearby points already differ at the first frequency."""
        left = counting.counting_function(STRING, (0.3,), 40)
        right = counting.counting_function(STRING, (0.31,), 40)
        report = counting.compare(left, right)
        self.assertFalse(report.equal)
        self.assertAlmostEqual(report.frequency, math.pi)
        self.assertAlmostEqual(
            report.difference,
            abs(2 * math.sin(0.3 * math.pi) ** 2
                - 2 * math.sin(0.31 * math.pi) ** 2),
        )
        self.assertFalse(report.frequency_mismatch)

    def test_unmatched_frequency(self):
        """A jump heard on one side only is reported."""
        left = CountingFunction((Jump(1.0, 1.0), Jump(2.0, 1.0)), 3.0, "x")
        right = CountingFunction((Jump(1.0, 1.0),), 3.0, "x")
        report = counting.compare(left, right)
        self.assertFalse(report.equal)
        self.assertEqual(report.frequency, 2.0)
        self.assertTrue(report.frequency_mismatch)

    def test_mismatched_cutoffs(self):
        """Counting functions over different ranges cannot be compared."""
        left = counting.counting_function(STRING, (0.3,), 40)
        right = counting.counting_function(STRING, (0.3,), 41)
        with self.assertRaises(MismatchedCutoffs):
            counting.compare(left, right)
