from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from graphs.exceptions import CapacityError, DimensionError, GraphFormatError
from graphs.formats import parse_graph_rows
from graphs.models import DirectedGraph
from graphs.utils import complete_graph, cycle_graph, enumerate_graphs, identity_graph, zero_graph
from graphs.tests.test_models import graphs
from permanent.models import CyclePolynomial, RealMatrix
from permanent.utils import (
    alpha_permanent_bruteforce,
    contains_some_permutation,
    cycle_polynomial,
    evaluate,
    rational_determinant,
    ryser_permanent,
    select_engine,
    stirling_cycle_numbers,
)

G1 = parse_graph_rows(["0100", "1010", "0101", "1010"])

ORACLE_ALPHAS = (Fraction(1, 2), Fraction(1), Fraction(2), Fraction(7, 3))
rationals = st.fractions(min_value=-3, max_value=3, max_denominator=5)


class TestCyclePolynomial(SimpleTestCase):
    def test_g1(self):
        """
        Test that G1 contains one permutation with one cycle and one with two
        """
        polynomial = cycle_polynomial(G1)
        self.assertEqual(polynomial.coeffs, (1, 1, 0, 0))
        self.assertEqual(evaluate(polynomial, 2), 6)
        self.assertEqual(polynomial.permutation_count, 2)

    def test_small_graphs(self):
        """
        Test the identity, the n-cycle and the empty graph
        """
        self.assertEqual(cycle_polynomial(identity_graph(3)).coeffs, (0, 0, 1))
        self.assertEqual(cycle_polynomial(cycle_graph(5)).coeffs, (1, 0, 0, 0, 0))
        self.assertTrue(cycle_polynomial(zero_graph(3)).is_zero())
        self.assertEqual(cycle_polynomial(DirectedGraph(1, (1,))).coeffs, (1,))

    def test_complete_graph_gives_stirling_numbers(self):
        """
        Test that J_n yields the unsigned Stirling numbers of the first kind
        """
        self.assertEqual(stirling_cycle_numbers(4), (6, 11, 6, 1))
        for n in range(1, 8):
            self.assertEqual(cycle_polynomial(complete_graph(n)).coeffs, stirling_cycle_numbers(n))

    def assertMatchesOracle(self, graph):
        polynomial = cycle_polynomial(graph)
        matrix = RealMatrix.from_graph(graph)
        for alpha in ORACLE_ALPHAS:
            self.assertEqual(evaluate(polynomial, alpha), alpha_permanent_bruteforce(matrix, alpha), graph)

    def test_matches_factorial_oracle_on_small_graphs(self):
        """
        Test the DP against the sum over all n! permutations on every graph with n <= 3
        """
        for n in (1, 2, 3):
            for graph in enumerate_graphs(n):
                self.assertMatchesOracle(graph)

    def test_matches_factorial_oracle_on_random_graphs(self):
        """
        Test the DP against the factorial oracle on 500 random graphs with 4 to 6 vertices
        """
        rng = np.random.default_rng(456)
        for index in range(500):
            n = 4 + index % 3
            self.assertMatchesOracle(DirectedGraph.from_matrix(rng.integers(0, 2, (n, n)).tolist()))

    @settings(deadline=None, max_examples=40)
    @given(graphs(max_n=6), rationals)
    def test_matches_factorial_oracle_at_any_rational(self, graph, alpha):
        """
        Test the DP against the factorial oracle at rationals of either sign
        """
        self.assertEqual(
            evaluate(cycle_polynomial(graph), alpha),
            alpha_permanent_bruteforce(RealMatrix.from_graph(graph), alpha),
        )

    @settings(deadline=None, max_examples=40)
    @given(graphs(max_n=9))
    def test_engines_agree(self, graph):
        """
        Test that the numpy kernel returns the pure-Python coefficients
        """
        self.assertEqual(
            cycle_polynomial(graph, engine="numpy"), cycle_polynomial(graph, engine="python")
        )

    @settings(deadline=None, max_examples=60)
    @given(graphs(max_n=7))
    def test_ryser_counts_the_permutations(self, graph):
        """
        Test that per_1(G) is the ordinary permanent
        """
        self.assertEqual(cycle_polynomial(graph).permutation_count, ryser_permanent(graph))
        self.assertEqual(contains_some_permutation(graph), ryser_permanent(graph) > 0)

    def test_minus_one_gives_the_determinant(self):
        """
        Test per_{-1}(G) = (-1)^n det(G) on 200 random boolean matrices with n <= 8
        """
        rng = np.random.default_rng(200)
        for index in range(200):
            n = 1 + index % 8
            matrix = rng.integers(0, 2, (n, n)).tolist()
            self.assertEqual(
                evaluate(cycle_polynomial(DirectedGraph.from_matrix(matrix)), -1),
                (-1) ** n * rational_determinant(matrix),
            )

    def test_dense_graph_at_sixteen(self):
        """
        Test the vectorised kernel on a random dense 16-graph against Ryser
        """
        rng = np.random.default_rng(16)
        matrix = (rng.random((16, 16)) < 0.7).astype(int).tolist()
        graph = DirectedGraph.from_matrix(matrix)
        polynomial = cycle_polynomial(graph)
        self.assertEqual(polynomial.permutation_count, ryser_permanent(graph))

    def test_capacity(self):
        """
        Test the size limits of the DP and the oracle
        """
        with self.assertRaises(CapacityError):
            cycle_polynomial(complete_graph(19))
        with self.assertRaises(CapacityError):
            alpha_permanent_bruteforce(RealMatrix.from_graph(complete_graph(11)), 1)

    def test_unknown_engine(self):
        """
        Test that only the python and numpy engines exist
        """
        with self.assertRaises(ValueError):
            cycle_polynomial(G1, engine="gpu")

    def test_engine_selection(self):
        """
        Test that the int64 kernel only runs where n! fits in int64
        """
        self.assertEqual(select_engine(10), "python")
        self.assertEqual(select_engine(11), "numpy")
        self.assertEqual(select_engine(20), "numpy")
        self.assertEqual(select_engine(21), "python")
        self.assertEqual(select_engine(21, "python"), "python")
        with self.assertRaises(CapacityError):
            select_engine(21, "numpy")
        with self.assertRaises(CapacityError):
            cycle_polynomial(complete_graph(21), allow_large=True, engine="numpy")


class TestAlphaPermanent(SimpleTestCase):
    def test_real_matrix(self):
        """
        Test per_alpha on a rational matrix: alpha^2 * 1 * 4 + alpha * 2 * 3
        """
        matrix = RealMatrix.from_rows([[1, 2], [3, 4]])
        self.assertEqual(alpha_permanent_bruteforce(matrix, Fraction(1, 2)), 4)
        self.assertEqual(alpha_permanent_bruteforce(matrix, 1), 10)

    def test_evaluate_is_a_plain_polynomial(self):
        """
        Test evaluation at zero and negative points
        """
        polynomial = CyclePolynomial(3, (2, 3, 1))
        self.assertEqual(evaluate(polynomial, 0), 0)
        self.assertEqual(evaluate(polynomial, -1), -2 + 3 - 1)
        self.assertEqual(evaluate(polynomial, Fraction(1, 2)), Fraction(1) + Fraction(3, 4) + Fraction(1, 8))

    def test_determinant(self):
        """
        Test the exact determinant of a rational matrix
        """
        self.assertEqual(rational_determinant([[Fraction(1, 2), 1], [3, 4]]), -1)


class TestModels(SimpleTestCase):
    def test_cycle_polynomial_validation(self):
        """
        Test that coefficients must be n nonnegative counts of at most n! permutations
        """
        with self.assertRaises(DimensionError):
            CyclePolynomial(3, (1, 1))
        with self.assertRaises(GraphFormatError):
            CyclePolynomial(2, (-1, 1))
        with self.assertRaises(GraphFormatError):
            CyclePolynomial(2, (2, 1))
        self.assertEqual(CyclePolynomial(2, (1, 1))[2], 1)
        self.assertEqual(CyclePolynomial(2, (1, 1))[5], 0)
        self.assertEqual(str(CyclePolynomial(3, (2, 0, 1))), "2*a^1 + 1*a^3")

    def test_square_matrix(self):
        """
        Test that a real matrix must be square
        """
        with self.assertRaises(DimensionError):
            RealMatrix.from_rows([[1, 2]])
