from typing import List, Optional

from ninja import Schema

from permgraphAPI.schemas import GraphSchema, RationalString
from .models import SupportFamily


class ModelInputSchema(Schema):
    """
    PGM parameters for the API; rationals as "p/q", integers or decimals
    """

    n: int
    alpha: str
    beta: str
    family: str = SupportFamily.ALL


class GraphPmfInputSchema(GraphSchema):
    alpha: str
    beta: str
    family: str = SupportFamily.ALL


class SampleDocument(Schema):
    n: int
    index: int
    edges: int
    rows: List[str]


class DegreeDocument(Schema):
    """
    Law of the out-degree of a vertex minus one: probabilities[k] for k = 0..n-1
    """

    n: int
    beta: RationalString
    probabilities: List[RationalString]
    empirical: Optional[List[float]] = None
    samples: Optional[int] = None
