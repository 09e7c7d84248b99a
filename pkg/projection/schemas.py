from typing import List

from ninja import Schema

from permgraphAPI.schemas import GraphSchema


class ProjectionInputSchema(GraphSchema):
    op: str


class ProjectedGraphDocument(Schema):
    n: int
    op: str
    rows: List[str]


class PreimageCountDocument(Schema):
    n: int
    op: str
    require_permutation: bool
    count: int


class StarPatternDocument(Schema):
    """
    A preimage family: fixed last row, last column and corner, '*' marking
    the cells that are free in the top-left block
    """

    r: str
    c: str
    d: int
    size: int
    rows: List[str]


class PreimageComparisonDocument(Schema):
    """
    A listed preimage family set against the enumerated one: graphs only in
    the listing, and enumerated graphs the listing misses
    """

    n: int
    op: str
    require_permutation: bool
    listed: int
    enumerated: int
    listed_only: List[List[str]]
    enumerated_only: List[List[str]]
