from typing import List

from ninja import Schema
from pydantic import BaseModel

from permgraphAPI.schemas import GraphSchema


class CyclePolynomialDocument(BaseModel):
    """
    c_1..c_n as a bare JSON array
    """

    __root__: List[int]


class PermanentInputSchema(GraphSchema):
    alpha: str


class CyclePolynomialSchema(Schema):
    n: int
    coefficients: List[int]
    permutations: int
