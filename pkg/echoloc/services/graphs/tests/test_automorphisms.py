"""Tests for :mod:`echoloc.services.graphs.automorphisms`."""

from unittest import TestCase

import networkx as nx
import numpy as np

from echoloc.domain import Graph
from echoloc.services.graphs import (
    GraphTooLarge,
    automorphism_orbits,
    parse_graph6,
    refine_colors,
    similar,
    to_networkx,
)


def from_networkx(graph):
    """Domain graph of a networkx graph on ``0 .. n - 1``."""
    return Graph(nx.to_numpy_array(graph, nodelist=range(len(graph)),
                                   dtype=np.int64))


class TestAutomorphismOrbits(TestCase):
    """Test :func:`.automorphism_orbits`."""

    def test_path(self):
        """The ends of the path swap."""
        self.assertEqual(automorphism_orbits(parse_graph6("Bg")),
                         ((0, 2), (1,)))

    def test_diamond(self):
        """K4 minus an edge has two orbits of size two."""
        graph = nx.complete_graph(4)
        graph.remove_edge(0, 1)
        self.assertEqual(automorphism_orbits(from_networkx(graph)),
                         ((0, 1), (2, 3)))

    def test_vertex_transitive(self):
        """Petersen and cycle graphs have one orbit."""
        for graph in (nx.petersen_graph(), nx.cycle_graph(7)):
            self.assertEqual(automorphism_orbits(from_networkx(graph)),
                             (tuple(range(len(graph))),))

    def test_asymmetric_regular(self):
        """Refinement cannot split the Frucht graph; the search does."""
        graph = from_networkx(nx.frucht_graph())
        self.assertEqual(len(set(refine_colors(to_networkx(graph))
                                 .values())), 1)
        self.assertEqual(automorphism_orbits(graph),
                         tuple((v,) for v in range(12)))

    def test_matches_brute_force(self):
        """Orbits agree with those of the full automorphism group."""
        rng = np.random.default_rng(5)
        for _ in range(10):
            graph = nx.gnp_random_graph(7, 0.4,
                                        seed=int(rng.integers(1 << 30)))
            images = {v: {v} for v in graph}
            for mapping in nx.algorithms.isomorphism.GraphMatcher(
                    graph, graph).isomorphisms_iter():
                for v, w in mapping.items():
                    images[v].add(w)
            expected = {tuple(sorted(orbit)) for orbit in images.values()}
            orbits = automorphism_orbits(from_networkx(graph))
            self.assertEqual(set(orbits), expected)

    def test_too_large(self):
        """The exhaustive search has a size limit."""
        with self.assertRaises(GraphTooLarge):
            automorphism_orbits(from_networkx(nx.path_graph(17)))


class TestRefineColors(TestCase):
    """Test :func:`.refine_colors`."""

    def test_path(self):
        """Distance from the ends separates the vertices of a path."""
        colors = refine_colors(nx.path_graph(5))
        self.assertEqual(colors[0], colors[4])
        self.assertEqual(colors[1], colors[3])
        self.assertEqual(len(set(colors.values())), 3)


class TestSimilar(TestCase):
    """Test :func:`.similar`."""

    def test_similar(self):
        """Vertices are similar when they share an orbit."""
        orbits = ((0, 2), (1,))
        self.assertTrue(similar(orbits, 0, 2))
        self.assertFalse(similar(orbits, 0, 1))
