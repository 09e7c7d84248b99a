from fractions import Fraction
from pathlib import Path

from django.conf import settings
from django.test import SimpleTestCase
from hypothesis import given, settings as hypothesis_settings, strategies as st

from graphs.exceptions import CapacityError, DimensionError, GraphFormatError
from graphs.formats import (
    format_graph,
    format_rational,
    parse_graph,
    parse_graph_rows,
    parse_permutation,
    parse_rational,
    parse_star_matrices,
    read_graph_file,
)
from graphs.models import DirectedGraph, Partition, Permutation


@st.composite
def graphs(draw, max_n=5):
    n = draw(st.integers(min_value=1, max_value=max_n))
    rows = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=n, max_size=n))
    return DirectedGraph(n, tuple(rows))


class TestDirectedGraph(SimpleTestCase):
    def test_fixture_graph_matches_rows(self):
        """
        Test that the G1 fixture reads as the rows 0100/1010/0101/1010
        """
        graph = read_graph_file(Path(settings.PERMGRAPH["FIXTURES_DIR"]) / "g1.txt")
        self.assertEqual(graph.row_strings(), ["0100", "1010", "0101", "1010"])
        self.assertEqual(graph.edge_count, 7)
        self.assertEqual(graph.out_degree(1), 2)
        self.assertEqual(graph.column(0), 0b1010)

    def test_size_limits(self):
        """
        Test that graphs need between 1 and 64 vertices
        """
        with self.assertRaises(CapacityError):
            DirectedGraph(0, ())
        with self.assertRaises(CapacityError):
            DirectedGraph(65, (0,) * 65)
        self.assertEqual(DirectedGraph(64, (0,) * 64).edge_count, 0)

    def test_rows_must_fit(self):
        """
        Test that rows outside the vertex range or of the wrong count are rejected
        """
        with self.assertRaises(GraphFormatError):
            DirectedGraph(2, (4, 0))
        with self.assertRaises(DimensionError):
            DirectedGraph(2, (1,))

    def test_matrix_roundtrip(self):
        """
        Test building a graph from a 0/1 matrix
        """
        graph = DirectedGraph.from_matrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
        self.assertEqual(graph.rows, (0b010, 0b100, 0b001))
        self.assertEqual(graph.to_matrix(), [[0, 1, 0], [0, 0, 1], [1, 0, 0]])

    @hypothesis_settings(deadline=None, max_examples=50)
    @given(graphs())
    def test_text_format_roundtrip(self, graph):
        """
        Test that formatting then parsing gives back the same graph, hex rows included
        """
        self.assertEqual(parse_graph(format_graph(graph)), graph)
        self.assertEqual(parse_graph(format_graph(graph, hex_rows=True)), graph)


class TestGraphFormats(SimpleTestCase):
    def test_bad_rows(self):
        """
        Test the errors for malformed graph text
        """
        with self.assertRaises(GraphFormatError):
            parse_graph("")
        with self.assertRaises(GraphFormatError):
            parse_graph("two\n01\n10")
        with self.assertRaises(GraphFormatError):
            parse_graph_rows(["012", "000", "000"])
        with self.assertRaises(GraphFormatError):
            parse_graph("3\n010\n001")

    def test_missing_file(self):
        """
        Test that an unreadable graph file is a format error
        """
        with self.assertRaises(GraphFormatError):
            read_graph_file("/nonexistent/graph.txt")

    def test_hex_rows(self):
        """
        Test that 0x rows are bitmasks with bit j the edge i -> j
        """
        self.assertEqual(parse_graph_rows(["0x2", "0x1"]).row_strings(), ["01", "10"])

    def test_rationals(self):
        """
        Test exact parsing and the p/q rendering of rationals
        """
        self.assertEqual(parse_rational("7/3"), Fraction(7, 3))
        self.assertEqual(parse_rational("1.5"), Fraction(3, 2))
        self.assertEqual(parse_rational(2), Fraction(2))
        self.assertEqual(format_rational(Fraction(8)), "8/1")
        self.assertEqual(format_rational(Fraction(-2, 4)), "-1/2")
        for bad in ("abc", "1/0", 0.5, True):
            with self.assertRaises(GraphFormatError):
                parse_rational(bad)

    def test_permutation_notations(self):
        """
        Test one-line and cycle notation, 1-indexed
        """
        self.assertEqual(parse_permutation("(123)(4)").images, (1, 2, 0, 3))
        self.assertEqual(parse_permutation("(1 2)(3 4)").images, (1, 0, 3, 2))
        self.assertEqual(parse_permutation("2 3 1").images, (1, 2, 0))
        self.assertEqual(parse_permutation("(12)", n=3).images, (1, 0, 2))
        with self.assertRaises(GraphFormatError):
            parse_permutation("(12")
        with self.assertRaises(GraphFormatError):
            parse_permutation("1 1 2")

    def test_star_matrices(self):
        """
        Test reading blank-line separated star matrices with comments
        """
        text = "# two families\n\n*1\n10\n\n\n0 0\n0 *\n"
        self.assertEqual(parse_star_matrices(text), [("*1", "10"), ("00", "0*")])
        with self.assertRaises(GraphFormatError):
            parse_star_matrices("*2\n10")
        with self.assertRaises(GraphFormatError):
            parse_star_matrices("*1\n1")


class TestPermutation(SimpleTestCase):
    def test_cycles(self):
        """
        Test the cycle decomposition and its notation
        """
        sigma = Permutation.from_cycles(4, [[0, 1], [2, 3]])
        self.assertEqual(str(sigma), "(1 2)(3 4)")
        self.assertEqual(sigma.cycle_count, 2)
        self.assertEqual(Permutation.identity(3).cycle_count, 3)
        self.assertEqual(str(parse_permutation("(1 3 2)")), "(1 3 2)")

    def test_inverse_and_compose(self):
        """
        Test that sigma composed with its inverse is the identity
        """
        sigma = parse_permutation("(1 2 3)(4 5)")
        self.assertEqual(sigma.compose(sigma.inverse()), Permutation.identity(5))
        self.assertEqual(sigma.compose(sigma)(0), 2)

    def test_conjugation_keeps_cycle_type(self):
        """
        Test that conjugating keeps the cycle lengths
        """
        sigma = parse_permutation("(1 2 3)(4 5)")
        tau = parse_permutation("(1 5)(2 4 3)")
        lengths = sorted(len(cycle) for cycle in sigma.conjugate_by(tau).cycles)
        self.assertEqual(lengths, [2, 3])

    def test_not_a_bijection(self):
        """
        Test that a repeated image is rejected
        """
        with self.assertRaises(GraphFormatError):
            Permutation((0, 0, 1))
        with self.assertRaises(DimensionError):
            Permutation.identity(2).compose(Permutation.identity(3))


class TestPartition(SimpleTestCase):
    def test_blocks(self):
        """
        Test restricted growth strings and block notation
        """
        partition = Partition.from_blocks(3, [[2, 0], [1]])
        self.assertEqual(partition.labels, (0, 1, 0))
        self.assertEqual(str(partition), "{1 3}{2}")
        self.assertEqual(partition.block_sizes, (2, 1))

    def test_invalid(self):
        """
        Test that labels must grow by at most one and blocks must cover [n]
        """
        with self.assertRaises(GraphFormatError):
            Partition((1, 0))
        with self.assertRaises(GraphFormatError):
            Partition.from_blocks(3, [[0, 1]])
