from fractions import Fraction

from django.test import SimpleTestCase

from consistency.models import BivariatePolynomial, LtpVerdict, Verdict
from permanent.models import CyclePolynomial

ALPHA = BivariatePolynomial.monomial(1, 0)
BETA = BivariatePolynomial.monomial(0, 1)


class TestBivariatePolynomial(SimpleTestCase):
    def test_canonical_order(self):
        """
        Test that terms are ordered by beta exponent, then alpha exponent, without zeros
        """
        polynomial = BivariatePolynomial.from_mapping({(2, 8): 3, (1, 9): 0, (1, 8): 1, (0, 9): 2})
        self.assertEqual(polynomial.terms, (((1, 8), 1), ((2, 8), 3), ((0, 9), 2)))
        self.assertEqual(str(polynomial), "1*a^1*b^8 + 3*a^2*b^8 + 2*a^0*b^9")
        self.assertEqual(str(ALPHA - BETA), "1*a^1*b^0 - 1*a^0*b^1")
        self.assertEqual(str(BivariatePolynomial()), "0")

    def test_arithmetic(self):
        """
        Test sums, products and (1 + beta)^k
        """
        self.assertEqual(
            BivariatePolynomial.one_plus_beta(2).terms, (((0, 0), 1), ((0, 1), 2), ((0, 2), 1))
        )
        square = (ALPHA + BETA) * (ALPHA + BETA)
        self.assertEqual(square.as_dict(), {(2, 0): 1, (1, 1): 2, (0, 2): 1})
        self.assertEqual(3 * ALPHA, ALPHA * 3)
        self.assertEqual(ALPHA - ALPHA, BivariatePolynomial())
        self.assertFalse(ALPHA - ALPHA)
        self.assertEqual(square.coefficient(1, 1), 2)
        self.assertEqual(square.coefficient(5, 5), 0)

    def test_from_cycle_polynomial(self):
        """
        Test beta^e per_alpha(G) from the cycle counts
        """
        polynomial = BivariatePolynomial.from_cycle_polynomial(CyclePolynomial(4, (1, 1, 0, 0)), 7)
        self.assertEqual(polynomial.as_dict(), {(1, 7): 1, (2, 7): 1})

    def test_evaluate(self):
        """
        Test exact evaluation at rational points
        """
        polynomial = ALPHA * BETA + 2 * BETA
        self.assertEqual(polynomial.evaluate(Fraction(1, 2), 3), Fraction(3, 2) + 6)

    def test_ratio(self):
        """
        Test the scalar between proportional polynomials
        """
        p = ALPHA + 2 * BETA
        self.assertEqual((2 * p).ratio_to(p), 2)
        self.assertEqual((-p).ratio_to(p), -1)
        self.assertEqual((3 * p).ratio_to(2 * p), Fraction(3, 2))
        self.assertIsNone((p + ALPHA * BETA).ratio_to(p))
        self.assertEqual(BivariatePolynomial().ratio_to(p), 0)
        self.assertIsNone(p.ratio_to(BivariatePolynomial()))

    def test_content(self):
        """
        Test that the content carries the sign of the leading term
        """
        self.assertEqual((4 * ALPHA + 6 * BETA).content(), 2)
        self.assertEqual((-4 * ALPHA + 6 * BETA).content(), -2)
        self.assertEqual((-4 * ALPHA + 6 * BETA).primitive(), -2 * ALPHA + 3 * BETA)

    def test_signs(self):
        """
        Test the positivity certificate: strictly positive coefficients only
        """
        self.assertTrue((ALPHA + BETA).is_parameter_free())
        self.assertFalse((ALPHA - BETA).is_parameter_free())
        self.assertFalse(BivariatePolynomial().is_parameter_free())
        self.assertTrue((-ALPHA - BETA).is_sign_definite())
        self.assertFalse((ALPHA - BETA).is_sign_definite())

    def test_document(self):
        """
        Test the JSON term list
        """
        self.assertEqual((2 * ALPHA * BETA).to_document(), [{"a": 1, "b": 1, "c": "2"}])


class TestVerdict(SimpleTestCase):
    def test_passed(self):
        """
        Test that only FAIL counts as a failure
        """
        base = dict(mode="point", op="dr", family="all", n=2, checked=16)
        self.assertTrue(LtpVerdict(Verdict.PASS, **base).passed)
        self.assertTrue(LtpVerdict(Verdict.INCONCLUSIVE, **base).passed)
        self.assertFalse(LtpVerdict(Verdict.FAIL, **base).passed)
