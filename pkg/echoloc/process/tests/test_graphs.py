"""Tests for :mod:`echoloc.process.graphs`."""

import itertools
from unittest import TestCase

import networkx as nx
import numpy as np

from echoloc.domain import Graph, GraphOperator
from echoloc.errors import ValidationError
from echoloc.process import counting, graphs
from echoloc.services.graphs import (
    automorphism_orbits,
    enumerate_trees,
    parse_graph6,
    similar,
    spectrum,
    walk_moments,
)

P3 = parse_graph6("Bg")


def from_networkx(graph):
    """Domain graph of a networkx graph on ``0 .. n - 1``."""
    return Graph(nx.to_numpy_array(graph, nodelist=range(len(graph)),
                                   dtype=np.int64))


def random_connected(count, seed, max_order=7):
    """Random connected graphs on 2 to ``max_order`` vertices."""
    rng = np.random.default_rng(seed)
    found = []
    while len(found) < count:
        candidate = nx.gnp_random_graph(
            int(rng.integers(2, max_order + 1)), float(rng.uniform(0.3, 0.8)),
            seed=int(rng.integers(1 << 30)),
        )
        if nx.is_connected(candidate):
            found.append(from_networkx(candidate))
    return found


def cubic_graphs():
    """Connected cubic graphs on up to 10 vertices."""
    found = [g for g in nx.graph_atlas_g()
             if len(g) and nx.is_connected(g)
             and all(d == 3 for _, d in g.degree)]
    found += [nx.cubical_graph(), nx.petersen_graph(),
              nx.circular_ladder_graph(5)]
    rng = np.random.default_rng(17)
    while len(found) < 12:
        candidate = nx.random_regular_graph(
            3, int(rng.choice([8, 10])), seed=int(rng.integers(1 << 30))
        )
        if nx.is_connected(candidate):
            found.append(candidate)
    return [from_networkx(g) for g in found if len(g) <= 10]


class TestVertexCountingFunction(TestCase):
    """Test :func:`.graphs.vertex_counting_function`."""

    def test_path_end(self):
        """The end of the path has heard 3/4 of itself past 1."""
        cf = graphs.vertex_counting_function(spectrum(P3), 0)
        self.assertAlmostEqual(counting.evaluate(cf, 1.5), 0.75, places=12)
        self.assertAlmostEqual(counting.evaluate(cf, 2.5), 1.0, places=12)
        self.assertAlmostEqual(counting.evaluate(cf, 50.0), 1.0, places=12)
        self.assertTrue(cf.complete)
        self.assertEqual(cf.model, "graph:Bg")
        self.assertEqual(cf.point, (0.0,))

    def test_path_center(self):
        """The center misses the middle eigenvalue."""
        cf = graphs.vertex_counting_function(spectrum(P3), 1)
        self.assertEqual(len(cf), 2)
        self.assertEqual(len(cf.suppressed), 1)

    def test_symmetric_ends(self):
        """The ends of the path are homophonic."""
        result = spectrum(P3)
        first = graphs.vertex_counting_function(result, 0)
        last = graphs.vertex_counting_function(result, 2)
        self.assertTrue(counting.compare(first, last).equal)
        middle = graphs.vertex_counting_function(result, 1)
        self.assertFalse(counting.compare(first, middle).equal)

    def test_adjacency_negative_frequencies(self):
        """Adjacency eigenvalues may be negative."""
        cf = graphs.vertex_counting_function(
            spectrum(P3, GraphOperator.adjacency), 0
        )
        self.assertLess(cf.jumps[0].frequency, 0)
        self.assertAlmostEqual(cf.total, 1.0, places=12)

    def test_bad_vertex(self):
        """Vertices are checked."""
        with self.assertRaises(ValidationError):
            graphs.vertex_counting_function(spectrum(P3), 3)


class TestCospectralPairs(TestCase):
    """Test :func:`.graphs.cospectral_vertex_pairs`."""

    def test_path(self):
        """The ends of the path are cospectral."""
        for operator in GraphOperator:
            self.assertEqual(graphs.cospectral_vertex_pairs(P3, operator),
                             [(0, 2)])

    def test_complete_graph(self):
        """All vertices of a complete graph are cospectral."""
        graph = from_networkx(nx.complete_graph(5))
        self.assertEqual(graphs.cospectral_vertex_pairs(graph),
                         list(itertools.combinations(range(5), 2)))

    def test_similar_implies_cospectral(self):
        """Automorphic pairs are always reported."""
        for graph in random_connected(30, seed=19):
            orbits = automorphism_orbits(graph)
            for operator in GraphOperator:
                pairs = set(graphs.cospectral_vertex_pairs(graph, operator))
                for orbit in orbits:
                    for pair in itertools.combinations(orbit, 2):
                        self.assertIn(pair, pairs)

    def test_regular_graphs(self):
        """On regular graphs both operators give the same pairs."""
        for graph in cubic_graphs():
            self.assertEqual(
                graphs.cospectral_vertex_pairs(graph,
                                               GraphOperator.adjacency),
                graphs.cospectral_vertex_pairs(
                    graph, GraphOperator.normalized_laplacian
                ),
            )

    def test_float_and_exact_agree(self):
        """Counting functions match exactly when walk moments do."""
        corpus = random_connected(500, seed=23) + [
            tree for n in range(2, 9) for tree in enumerate_trees(n)
        ]
        for graph in corpus:
            for operator in GraphOperator:
                result = spectrum(graph, operator)
                cfs = [graphs.vertex_counting_function(result, v)
                       for v in range(graph.n)]
                moments = [walk_moments(graph, v, graph.n - 1, operator)
                           for v in range(graph.n)]
                for u, v in itertools.combinations(range(graph.n), 2):
                    heard = counting.compare(cfs[u], cfs[v],
                                             weight_tol=1e-9).equal
                    self.assertEqual(heard, moments[u] == moments[v],
                                     f"{graph.name} {operator} {u} {v}")


class TestEcholocationFailures(TestCase):
    """Test :func:`.graphs.find_echolocation_failures`."""

    def test_nine_vertex_tree(self):
        """Some tree on nine vertices has non-similar cospectral vertices."""
        reports = list(graphs.find_echolocation_failures(
            enumerate_trees(9), GraphOperator.adjacency
        ))
        self.assertTrue(reports)
        for report in reports:
            self.assertEqual(parse_graph6(report.graph6).n, 9)
            for u, v in report.pairs:
                self.assertFalse(similar(report.orbits, u, v))

    def test_small_trees(self):
        """The search over small trees is stable under threading."""
        corpus = [t for n in range(1, 9) for t in enumerate_trees(n)]
        for operator in GraphOperator:
            single = list(graphs.find_echolocation_failures(
                corpus, operator, threads=1
            ))
            parallel = list(graphs.find_echolocation_failures(
                corpus, operator, threads=4
            ))
            self.assertEqual(single, parallel)

    def test_vertex_transitive(self):
        """One orbit leaves nothing to fail."""
        graph = from_networkx(nx.petersen_graph())
        self.assertEqual(
            list(graphs.find_echolocation_failures([graph])), []
        )

    def test_bad_graph_skipped(self):
        """A graph that cannot be analysed is logged and skipped."""
        with self.assertLogs("echoloc.process.graphs", "WARNING"):
            reports = list(graphs.find_echolocation_failures(
                [parse_graph6("B_"), P3]
            ))
        self.assertEqual(reports, [])

    def test_order_preserved(self):
        """Failures come out in input order."""
        trees = list(enumerate_trees(9))
        reports = list(graphs.find_echolocation_failures(
            trees + trees, GraphOperator.adjacency, threads=3
        ))
        half = len(reports) // 2
        self.assertEqual(reports[:half], reports[half:])
        names = [t.name for t in trees]
        positions = [names.index(r.name) for r in reports[:half]]
        self.assertEqual(positions, sorted(positions))
