from fractions import Fraction
from typing import List, Optional

from ninja import Schema
from pydantic import constr, validator

from graphs.exceptions import GraphFormatError
from graphs.formats import format_rational, parse_graph_rows, parse_rational
from graphs.models import DirectedGraph

RationalString = constr(regex=r"^-?[0-9]+/[0-9]+$")


class ErrorSchema(Schema):
    """
    Pydantic representation of Error
    Can be extended to include more fields
    """

    message: str


class GraphSchema(Schema):
    """
    A directed graph as its rows of 0/1 characters, row i listing the
    out-edges of vertex i
    """

    rows: List[str]

    @classmethod
    def from_graph(cls, graph: DirectedGraph) -> "GraphSchema":
        return cls(rows=graph.row_strings())

    def to_graph(self) -> DirectedGraph:
        return parse_graph_rows(self.rows)


class ParametersInputSchema(Schema):
    """
    Model parameters as exact rationals: "p/q", integers or decimals
    """

    alpha: str
    beta: Optional[str] = None

    @validator("alpha", "beta")
    def check_rational(cls, value):
        if value is not None:
            try:
                parse_rational(value)
            except GraphFormatError as exception:
                raise ValueError(str(exception)) from exception
        return value

    @property
    def alpha_value(self) -> Fraction:
        return parse_rational(self.alpha)

    @property
    def beta_value(self) -> Optional[Fraction]:
        return None if self.beta is None else parse_rational(self.beta)


class ValueDocument(Schema):
    """
    One exact quantity of the model at size n
    """

    n: int
    alpha: Optional[RationalString] = None
    beta: Optional[RationalString] = None
    value: RationalString

    @classmethod
    def build(cls, n: int, value: Fraction, alpha=None, beta=None) -> "ValueDocument":
        return cls(
            n=n,
            alpha=None if alpha is None else format_rational(alpha),
            beta=None if beta is None else format_rational(beta),
            value=format_rational(value),
        )
