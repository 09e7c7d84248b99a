from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence, Tuple

from graphs.exceptions import DimensionError, GraphFormatError
from graphs.models import DirectedGraph


@dataclass(frozen=True)
class CyclePolynomial:
    """
    coeffs[k - 1] is the number of permutations with exactly k cycles that
    are contained in the graph, so per_alpha(G) = sum_k coeffs[k - 1] alpha^k
    """

    n: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.n:
            raise DimensionError(f"Expected {self.n} coefficients, got {len(self.coeffs)}")
        if any(c < 0 for c in self.coeffs):
            raise GraphFormatError("Cycle polynomial coefficients must be nonnegative")
        if sum(self.coeffs) > factorial(self.n):
            raise GraphFormatError(f"Coefficients count more than {self.n}! permutations")

    def __getitem__(self, k: int) -> int:
        """
        c_k, zero outside 1..n
        """
        return self.coeffs[k - 1] if 1 <= k <= self.n else 0

    def __str__(self) -> str:
        terms = [f"{c}*a^{k}" for k, c in enumerate(self.coeffs, start=1) if c]
        return " + ".join(terms) or "0"

    @property
    def permutation_count(self) -> int:
        """
        per_1(G), the number of contained permutations
        """
        return sum(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)


@dataclass(frozen=True)
class RealMatrix:
    """
    Square matrix of exact rationals, the domain of the factorial oracle
    """

    entries: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        if any(len(row) != len(self.entries) for row in self.entries):
            raise DimensionError("Matrix must be square")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RealMatrix":
        return cls(tuple(tuple(Fraction(value) for value in row) for row in rows))

    @classmethod
    def from_graph(cls, graph: DirectedGraph) -> "RealMatrix":
        return cls.from_rows(graph.to_matrix())

    @property
    def n(self) -> int:
        return len(self.entries)
