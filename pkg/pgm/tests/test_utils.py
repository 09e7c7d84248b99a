from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase
from scipy.stats import chisquare

from graphs.exceptions import CapacityError, DimensionError, InvalidParameterError
from graphs.models import DirectedGraph
from graphs.utils import (
    complete_graph,
    enumerate_graphs,
    enumerate_permutations,
    is_permutation_graph,
    permutation_to_graph,
    zero_graph,
)
from permanent.utils import cycle_polynomial
from pgm.exceptions import UnknownSupportFamilyError
from pgm.models import PgmParams, SupportFamily
from pgm.utils import (
    PgmSampler,
    check_support_conditions,
    degree_pmf,
    degree_pmf_bruteforce,
    edge_cycle_census,
    erdos_renyi_pmf,
    exchangeability_check,
    expected_edges,
    expected_edges_bruteforce,
    normalizer,
    normalizer_bruteforce,
    normalizer_closed_form,
    pmf,
    sample,
    sample_batch,
    total_variation_to_erdos_renyi,
    unnormalized_weight,
)

ALPHAS = (Fraction(1, 2), Fraction(1), Fraction(3))
BETAS = (Fraction(1, 3), Fraction(1), Fraction(2))


class TestNormalizer(SimpleTestCase):
    def test_known_values(self):
        """
        Test z_2 at alpha = beta = 1 and z_3 at alpha = 2, beta = 1/2
        """
        self.assertEqual(normalizer(PgmParams(2, 1, 1)), 8)
        self.assertEqual(normalizer(PgmParams(3, 2, Fraction(1, 2))), Fraction(2187, 64))

    def test_closed_form_matches_enumeration(self):
        """
        Test the closed form against the sum of beta^#G per_alpha(G) over all graphs for n <= 4
        """
        for n in (1, 2, 3, 4):
            for alpha in ALPHAS:
                for beta in BETAS:
                    p = PgmParams(n, alpha, beta)
                    self.assertEqual(normalizer_closed_form(p), normalizer_bruteforce(p))

    def test_closed_form_off_the_grid(self):
        """
        Test the closed form over the 65536 4-graphs at alpha = 7/3, beta = 2/5
        """
        p = PgmParams(4, Fraction(7, 3), Fraction(2, 5))
        self.assertEqual(normalizer_closed_form(p), normalizer_bruteforce(p))

    def test_census(self):
        """
        Test that the census covers every graph once
        """
        census = edge_cycle_census(3, SupportFamily.ALL)
        self.assertEqual(sum(census.values()), 512)
        self.assertIs(census, edge_cycle_census(3, SupportFamily.ALL))

    def test_permutation_families(self):
        """
        Test z over the permutation families: beta^n times the Ewens weights
        """
        p = PgmParams(3, 2, 3)
        self.assertEqual(normalizer(p, SupportFamily.PERMUTATIONS), 27 * 2 * 3 * 4)
        self.assertEqual(normalizer(p, SupportFamily.SINGLE_CYCLE), 2 * 2 * 27)
        self.assertEqual(normalizer(p, SupportFamily.FIXED_POINT_FREE), 2 * 2 * 27)

    def test_empty_family(self):
        """
        Test that a family without permutations has no normalizer
        """
        with self.assertRaises(InvalidParameterError):
            normalizer(PgmParams(1, 1, 1), SupportFamily.FIXED_POINT_FREE)

    def test_unknown_family(self):
        """
        Test that only the shipped families are accepted
        """
        with self.assertRaises(UnknownSupportFamilyError):
            normalizer(PgmParams(2, 1, 1), "trees")

    def test_capacity(self):
        """
        Test that enumerating all 5-graphs needs allow_large
        """
        with self.assertRaises(CapacityError):
            normalizer_bruteforce(PgmParams(5, 1, 1))


class TestPmf(SimpleTestCase):
    def test_sums_to_one(self):
        """
        Test that P_n is a distribution for n <= 3 over all graphs and over the families
        """
        for n in (1, 2, 3):
            for alpha in ALPHAS:
                for beta in BETAS:
                    p = PgmParams(n, alpha, beta)
                    self.assertEqual(sum(pmf(graph, p) for graph in enumerate_graphs(n)), 1)
            p = PgmParams(n, Fraction(3, 2), Fraction(2, 3))
            for tag in (SupportFamily.PERMUTATIONS, SupportFamily.PARTITIONS):
                family = SupportFamily.get(tag)
                self.assertEqual(sum(pmf(graph, p, family) for graph in family.members(n)), 1)

    def test_sums_to_one_at_four(self):
        """
        Test that P_4 is a distribution, summing pmf over one graph per (cycle polynomial, #G) class
        """
        classes = {}
        for graph in enumerate_graphs(4):
            key = (cycle_polynomial(graph), graph.edge_count)
            classes.setdefault(key, [graph, 0])[1] += 1
        self.assertEqual(sum(count for _, count in classes.values()), 2**16)
        for alpha in ALPHAS:
            for beta in BETAS:
                p = PgmParams(4, alpha, beta)
                self.assertEqual(sum(count * pmf(graph, p) for graph, count in classes.values()), 1)

    def test_graphs_without_permutations(self):
        """
        Test that a graph containing no permutation has probability zero
        """
        p = PgmParams(3, 1, 1)
        self.assertEqual(pmf(zero_graph(3), p), 0)
        self.assertEqual(pmf(complete_graph(3), p, SupportFamily.PERMUTATIONS), 0)

    def test_complete_graph(self):
        """
        Test P(J_2) = beta^4 (alpha + alpha^2) / z_2
        """
        p = PgmParams(2, 1, 1)
        self.assertEqual(pmf(complete_graph(2), p), Fraction(2, 8))
        self.assertEqual(unnormalized_weight(complete_graph(2), p), 2)

    def test_size_mismatch(self):
        """
        Test that the graph must have n vertices
        """
        with self.assertRaises(DimensionError):
            pmf(zero_graph(2), PgmParams(3, 1, 1))

    def test_parameters(self):
        """
        Test that alpha and beta must be positive
        """
        with self.assertRaises(InvalidParameterError):
            PgmParams(2, 0, 1)
        with self.assertRaises(InvalidParameterError):
            PgmParams(2, 1, -1)
        with self.assertRaises(InvalidParameterError):
            PgmParams(0, 1, 1)
        self.assertEqual(PgmParams(2, 1, 3).edge_probability, Fraction(3, 4))


class TestDegree(SimpleTestCase):
    def test_binomial_law(self):
        """
        Test that the out-degree minus one is Binomial(n - 1, beta / (1 + beta))
        """
        self.assertEqual(degree_pmf(3, 1, 0), Fraction(1, 4))
        self.assertEqual(degree_pmf(3, 1, 1), Fraction(1, 2))
        self.assertEqual(sum(degree_pmf(20, Fraction(2, 7), k) for k in range(20)), 1)

    def test_matches_enumeration(self):
        """
        Test the degree law against the enumeration of all graphs for n <= 4
        """
        for n in (1, 2, 3, 4):
            for alpha in ALPHAS:
                for beta in BETAS:
                    p = PgmParams(n, alpha, beta)
                    for k in range(n):
                        self.assertEqual(degree_pmf_bruteforce(p, k), degree_pmf(n, beta, k))

    def test_range(self):
        """
        Test the argument checks
        """
        with self.assertRaises(InvalidParameterError):
            degree_pmf(3, 1, 3)
        with self.assertRaises(InvalidParameterError):
            degree_pmf(3, 0, 1)

    def test_expected_edges(self):
        """
        Test E[#G] = n + (n^2 - n) beta / (1 + beta) against the enumeration for n <= 4
        """
        self.assertEqual(expected_edges(2, 1), 3)
        for n in (1, 2, 3, 4):
            for alpha in ALPHAS:
                for beta in BETAS:
                    p = PgmParams(n, alpha, beta)
                    self.assertEqual(expected_edges_bruteforce(p), expected_edges(n, beta))


class TestErdosRenyi(SimpleTestCase):
    def test_pmf(self):
        """
        Test that Erdos-Renyi is a distribution
        """
        self.assertEqual(sum(erdos_renyi_pmf(graph, Fraction(1, 3)) for graph in enumerate_graphs(2)), 1)

    def test_distance(self):
        """
        Test that the model is not Erdos-Renyi: graphs without permutations carry ER mass
        """
        p = PgmParams(2, 1, 1)
        distance = total_variation_to_erdos_renyi(p)
        self.assertGreater(distance, 0)
        self.assertLess(distance, 1)
        empty_mass = sum(
            erdos_renyi_pmf(graph, p.edge_probability)
            for graph in enumerate_graphs(2)
            if not pmf(graph, p)
        )
        self.assertGreaterEqual(distance, empty_mass)


class TestSampler(SimpleTestCase):
    def test_seeded(self):
        """
        Test that a seed fixes the draws
        """
        p = PgmParams(6, 1, 1)
        self.assertEqual(sample_batch(p, 7, 5), sample_batch(p, 7, 5))
        self.assertEqual(sample(p, 7), PgmSampler(p, 7).graph())

    def test_draws_contain_a_permutation(self):
        """
        Test that every draw carries the edges of its permutation
        """
        cells = PgmSampler(PgmParams(5, 2, Fraction(1, 4)), 3).adjacency(200)
        self.assertTrue((cells.sum(axis=2) >= 1).all())
        self.assertTrue((cells.sum(axis=1) >= 1).all())

    def test_codes_follow_enumeration_order(self):
        """
        Test that a code decodes to the same graph as its draw
        """
        p = PgmParams(3, 1, 1)
        graphs = PgmSampler(p, 9).graphs(50)
        codes = PgmSampler(p, 9).codes(50)
        for graph, code in zip(graphs, codes):
            decoded = DirectedGraph(3, tuple(int(code) >> (3 * i) & 7 for i in range(3)))
            self.assertEqual(decoded, graph)

    def test_goodness_of_fit(self):
        """
        Test the sampler against the exact law on 3-graphs with a chi-square test
        """
        p = PgmParams(3, 1, 1)
        samples = 1_000_000
        codes = PgmSampler(p, 2024).codes(samples)
        counts = np.bincount(codes, minlength=512)
        graphs = list(enumerate_graphs(3))
        probabilities = [pmf(graph, p) for graph in graphs]
        support = [code for code, probability in enumerate(probabilities) if probability]
        self.assertEqual(int(counts.sum() - counts[support].sum()), 0)
        observed = counts[support]
        expected = np.array([float(probabilities[code]) for code in support]) * samples
        self.assertGreater(chisquare(observed, expected).pvalue, 1e-3)

    def test_mean_edge_count_at_fifty(self):
        """
        Test the mean edge count against n + (n^2 - n) beta / (1 + beta) at n = 50
        """
        p = PgmParams(50, 1, 1)
        counts = PgmSampler(p, 1).edge_counts(2_000)
        self.assertAlmostEqual(float(counts.mean()), float(expected_edges(50, 1)), delta=5)


class TestExchangeability(SimpleTestCase):
    def test_model_is_exchangeable(self):
        """
        Test that relabelling vertices keeps the probability of every 3-graph
        """
        self.assertTrue(exchangeability_check(PgmParams(3, 2, Fraction(1, 3)), trials=4, seed=1))

    def test_broken_weight_is_caught(self):
        """
        Test that a weight depending on vertex labels is rejected
        """
        weight = lambda graph, p: Fraction(graph.rows[0] + 1)  # noqa: E731
        self.assertFalse(exchangeability_check(PgmParams(3, 1, 1), trials=6, seed=2, weight=weight))

    def test_capacity(self):
        """
        Test that exchangeability over all 5-graphs needs allow_large
        """
        with self.assertRaises(CapacityError):
            exchangeability_check(PgmParams(5, 1, 1), trials=1)


class TestSupportConditions(SimpleTestCase):
    def test_shipped_families(self):
        """
        Test that every shipped family is closed under conjugation and holds a permutation at n = 3
        """
        for tag in SupportFamily.choices():
            conditions = check_support_conditions(tag, 3)
            self.assertTrue(conditions.holds, tag)

    def test_labelled_family_fails(self):
        """
        Test that a family singling out vertex 1 is not closed under conjugation
        """
        family = SupportFamily(
            "first-vertex-fixed",
            lambda graph: is_permutation_graph(graph) and graph.has_edge(0, 0),
            lambda n: (permutation_to_graph(sigma) for sigma in _first_fixed(n)),
        )
        conditions = check_support_conditions(family, 3)
        self.assertFalse(conditions.closed_under_conjugation)
        self.assertTrue(conditions.contains_permutation)
        self.assertFalse(conditions.holds)

    def test_empty_family(self):
        """
        Test the second condition on a family without permutations at n = 1
        """
        conditions = check_support_conditions(SupportFamily.FIXED_POINT_FREE, 1)
        self.assertFalse(conditions.contains_permutation)


def _first_fixed(n):
    return (sigma for sigma in enumerate_permutations(n) if sigma(0) == 0)
