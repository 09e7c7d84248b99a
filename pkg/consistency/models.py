from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from graphs.models import DirectedGraph
from permanent.models import CyclePolynomial

Monomial = Tuple[int, int]


@dataclass(frozen=True)
class BivariatePolynomial:
    """
    Integer polynomial in (alpha, beta). ``terms`` holds ((i, j), c) for
    c alpha^i beta^j, no zero coefficients, sorted beta-major then
    alpha-minor, so equal polynomials compare and hash equal.
    """

    terms: Tuple[Tuple[Monomial, int], ...] = ()

    @classmethod
    def from_mapping(cls, coefficients: Union[Mapping[Monomial, int], Iterable[Tuple[Monomial, int]]]):
        items = coefficients.items() if isinstance(coefficients, Mapping) else coefficients
        merged: Dict[Monomial, int] = {}
        for monomial, c in items:
            merged[monomial] = merged.get(monomial, 0) + c
        return cls(
            tuple(
                (monomial, c)
                for monomial, c in sorted(merged.items(), key=lambda item: (item[0][1], item[0][0]))
                if c
            )
        )

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> "BivariatePolynomial":
        return cls.from_mapping({(i, j): c})

    @classmethod
    def one_plus_beta(cls, power: int) -> "BivariatePolynomial":
        """
        (1 + beta)^power
        """
        return cls.from_mapping({(0, j): comb(power, j) for j in range(power + 1)})

    @classmethod
    def from_cycle_polynomial(cls, polynomial: CyclePolynomial, beta_exponent: int) -> "BivariatePolynomial":
        """
        beta^e per_alpha(G) for a graph with that cycle polynomial
        """
        return cls.from_mapping(
            {(k, beta_exponent): c for k, c in enumerate(polynomial.coeffs, start=1)}
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*a^{i}*b^{j}" for (i, j), c in self.terms).replace("+ -", "- ")

    def __iter__(self) -> Iterator[Tuple[Monomial, int]]:
        return iter(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def as_dict(self) -> Dict[Monomial, int]:
        return dict(self.terms)

    def coefficient(self, i: int, j: int) -> int:
        return self.as_dict().get((i, j), 0)

    def __add__(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        return BivariatePolynomial.from_mapping(self.terms + other.terms)

    def __neg__(self) -> "BivariatePolynomial":
        return BivariatePolynomial(tuple((monomial, -c) for monomial, c in self.terms))

    def __sub__(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        return self + (-other)

    def __mul__(self, other: Union[int, "BivariatePolynomial"]) -> "BivariatePolynomial":
        if isinstance(other, int):
            return BivariatePolynomial.from_mapping(
                [(monomial, c * other) for monomial, c in self.terms]
            )
        return BivariatePolynomial.from_mapping(
            [
                ((i + k, j + l), c * d)
                for (i, j), c in self.terms
                for (k, l), d in other.terms
            ]
        )

    __rmul__ = __mul__

    def evaluate(self, alpha: Fraction, beta: Fraction) -> Fraction:
        alpha, beta = Fraction(alpha), Fraction(beta)
        return sum((c * alpha**i * beta**j for (i, j), c in self.terms), Fraction(0))

    def content(self) -> int:
        """
        gcd of the coefficients, signed like the leading term
        """
        if not self.terms:
            return 0
        g = 0
        for _, c in self.terms:
            g = gcd(g, c)
        return g if self.terms[0][1] > 0 else -g

    def primitive(self) -> "BivariatePolynomial":
        g = self.content()
        if not g:
            return self
        return BivariatePolynomial(tuple((monomial, c // g) for monomial, c in self.terms))

    def ratio_to(self, other: "BivariatePolynomial") -> Optional[Fraction]:
        """
        The scalar c with self == c * other, None if there is none
        """
        if not other.terms:
            return None
        if not self.terms:
            return Fraction(0)
        c = Fraction(self.content(), other.content())
        if self.primitive() != other.primitive():
            return None
        return c

    def is_parameter_free(self) -> bool:
        """
        Nonzero with every coefficient strictly positive: the polynomial is
        positive at every alpha, beta > 0
        """
        return bool(self.terms) and all(c > 0 for _, c in self.terms)

    def is_sign_definite(self) -> bool:
        return self.is_parameter_free() or (-self).is_parameter_free()

    def to_document(self) -> List[Dict[str, Union[int, str]]]:
        return [{"a": i, "b": j, "c": str(c)} for (i, j), c in self.terms]


class Verdict:
    PASS = "PASS"
    FAIL = "FAIL"
    INCONCLUSIVE = "INCONCLUSIVE"


class CheckMode:
    POINT = "point"
    POLYNOMIAL = "polynomial"


@dataclass(frozen=True)
class LtpVerdict:
    """
    Outcome of a law-of-total-probability check between levels n and n+1.
    ``witness`` holds the graphs the failure is read off: a pair with
    different RHS / denominator ratios, a graph of zero probability with
    preimage mass, or an (n+1)-graph projecting outside the family.
    """

    verdict: str
    mode: str
    op: str
    family: str
    n: int
    checked: int
    witness: Tuple[DirectedGraph, ...] = ()
    certificate: Optional[BivariatePolynomial] = None
    parameter_free: bool = False
    message: str = ""
    details: Dict[str, str] = field(default_factory=dict, hash=False, compare=False)

    @property
    def passed(self) -> bool:
        return self.verdict != Verdict.FAIL
