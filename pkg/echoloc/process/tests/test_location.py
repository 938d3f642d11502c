"""Tests for :mod:`echoloc.process.location`."""

from dataclasses import replace
from unittest import TestCase, mock

import numpy as np

from echoloc.domain import CountingFunction, Jump, LocationStatus, \
    parse_model_spec
from echoloc.errors import EmptyInput
from echoloc.process import counting, inversion, location

SQUARE = parse_model_spec("square")


def contains(report, point, tol=1e-6):
    """Whether some candidate of ``report`` is within ``tol`` of ``point``."""
    return any(
        max(abs(a - b) for a, b in zip(candidate.point, point)) <= tol
        for candidate in report.candidates
    )


class TestGenericLocate(TestCase):
    """Test :func:`.location.generic_locate`."""

    def test_square(self):
        """A generic square point is found with all its images."""
        target = counting.counting_function(SQUARE, (0.2, 0.4), 30)
        report = location.generic_locate(SQUARE, target)
        self.assertEqual(report.status, LocationStatus.unique_orbit)
        self.assertTrue(contains(report, (0.2, 0.4)))
        self.assertLessEqual(report.best.residual, 1e-6)
        self.assertEqual(len(report.candidates), 8)

    def test_timbre_target(self):
        """Timbres are squared back into weights."""
        cf = counting.counting_function(SQUARE, (0.2, 0.4), 30)
        report = location.generic_locate(SQUARE, counting.timbre(cf))
        self.assertEqual(report.status, LocationStatus.unique_orbit)
        self.assertTrue(contains(report, (0.2, 0.4)))

    def test_torus(self):
        """Every point of the torus sounds the same."""
        torus = parse_model_spec("torus")
        target = counting.counting_function(torus, (1.0, 2.5), 10)
        report = location.generic_locate(torus, target)
        self.assertEqual(report.status, LocationStatus.all_points)

    def test_sphere(self):
        """Every point of the sphere sounds the same."""
        sphere = parse_model_spec("sphere")
        target = counting.counting_function(sphere, (0.3, 2.5), 10)
        report = location.generic_locate(sphere, target)
        self.assertEqual(report.status, LocationStatus.all_points)

    def test_other_model(self):
        """A string target is not heard on the square."""
        target = counting.counting_function(
            parse_model_spec("interval:a=1"), (0.3,), 30
        )
        report = location.generic_locate(SQUARE, target)
        self.assertEqual(report.status, LocationStatus.no_match)
        self.assertEqual(report.orbits, ())

    def test_disk_radius(self):
        """On the disk only the radius is recovered."""
        disk = parse_model_spec("disk")
        target = counting.counting_function(disk, (0.45, 1.0), 15)
        report = location.generic_locate(disk, target)
        self.assertEqual(report.status, LocationStatus.unique_orbit)
        self.assertAlmostEqual(report.best.point[0], 0.45, places=6)
        self.assertEqual(report.best.point[1], 0.0)

    def test_neumann_rectangle(self):
        """Free rectangles go through the scan."""
        model = parse_model_spec("rect:b=0.5,bc=neumann")
        target = counting.counting_function(model, (0.3, 0.1), 25)
        report = location.generic_locate(model, target)
        self.assertIn(report.status, (LocationStatus.unique_orbit,
                                      LocationStatus.multiple_orbits))
        self.assertTrue(contains(report, (0.3, 0.1)))

    def test_empty(self):
        """An empty target cannot be located."""
        with self.assertRaises(EmptyInput):
            location.generic_locate(
                SQUARE, CountingFunction((), 5.0, "square")
            )

    def test_agrees_with_closed_form(self):
        """The scan and the quadratic inversion find the same orbit."""
        rng = np.random.default_rng(5)
        for x, y in rng.uniform(0.05, 0.95, (20, 2)):
            target = counting.counting_function(SQUARE, (x, y), 20)
            scanned = location.generic_locate(SQUARE, target)
            closed = inversion.locate_on_square(
                target.jumps[0].weight,
                counting.evaluate(target, 7.03) - target.jumps[0].weight,
            )
            self.assertLessEqual(scanned.best.residual, 1e-6)
            self.assertTrue(contains(scanned, closed.best.point))

    def test_thread_independent(self):
        """Reports do not depend on the number of workers."""
        target = counting.counting_function(SQUARE, (0.15, 0.35), 20)
        one = location.generic_locate(SQUARE, target, threads=1)
        four = location.generic_locate(SQUARE, target, threads=4)
        self.assertEqual(one, four)


class TestLocate(TestCase):
    """Test :func:`.location.locate`."""

    def test_closed_form_route(self):
        """Dirichlet squares never reach the scan."""
        target = counting.counting_function(SQUARE, (0.2, 0.4), 30)
        with mock.patch.object(location, "generic_locate") as generic:
            report = location.locate(SQUARE, target)
            generic.assert_not_called()
        self.assertEqual(report.status, LocationStatus.unique_orbit)
        self.assertTrue(contains(report, (0.2, 0.4), 1e-9))
        self.assertLessEqual(report.best.residual, 1e-8)

    def test_interval(self):
        """Strings are inverted from the first jump."""
        model = parse_model_spec("interval:a=2")
        target = counting.counting_function(model, (0.7,), 20)
        report = location.locate(model, target)
        self.assertEqual(report.status, LocationStatus.unique_orbit)
        self.assertTrue(contains(report, (0.7,), 1e-9))
        self.assertTrue(contains(report, (1.3,), 1e-9))

    def test_rectangle(self):
        """Rectangles are inverted from the two lowest jumps."""
        model = parse_model_spec("rect:b=0.5")
        target = counting.counting_function(model, (0.25, 0.125), 30)
        report = location.locate(model, target)
        self.assertEqual(report.status, LocationStatus.unique_orbit)
        self.assertTrue(contains(report, (0.25, 0.125), 1e-9))

    def test_nodal_target(self):
        """A suppressed second jump still has a closed form at the center."""
        target = counting.counting_function(SQUARE, (0.5, 0.5), 20)
        report = location.locate(SQUARE, target)
        self.assertEqual(report.status, LocationStatus.unique_orbit)
        self.assertTrue(contains(report, (0.5, 0.5), 1e-6))

    def test_disk_falls_back(self):
        """Models without a closed form go to the scan."""
        disk = parse_model_spec("disk")
        target = counting.counting_function(disk, (0.3, 0.0), 12)
        with mock.patch.object(location, "generic_locate") as generic:
            location.locate(disk, target)
            generic.assert_called_once()

    def test_other_model(self):
        """Foreign frequencies give no match."""
        target = counting.counting_function(
            parse_model_spec("interval:a=1"), (0.3,), 30
        )
        report = location.locate(SQUARE, target)
        self.assertEqual(report.status, LocationStatus.no_match)

    def test_frequency_tolerance(self):
        """Slightly detuned frequencies match only under a looser tolerance."""
        exact = counting.counting_function(SQUARE, (0.2, 0.4), 30)
        detuned = replace(exact, jumps=tuple(
            Jump(jump.frequency * (1 - 1e-7), jump.weight)
            for jump in exact.jumps
        ))
        strict = location.locate(SQUARE, detuned, frequency_tol=1e-9)
        self.assertEqual(strict.status, LocationStatus.no_match)
        loose = location.locate(SQUARE, detuned, frequency_tol=1e-6)
        self.assertEqual(loose.status, LocationStatus.unique_orbit)
        self.assertTrue(contains(loose, (0.2, 0.4), 1e-9))
