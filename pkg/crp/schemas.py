from typing import List, Optional

from ninja import Schema

from permgraphAPI.schemas import RationalString


class CrpSampleDocument(Schema):
    """
    One CRP draw, 1-indexed: the images of a permutation or the blocks of a
    partition
    """

    n: int
    kind: str
    index: int
    notation: str
    images: Optional[List[int]] = None
    blocks: Optional[List[List[int]]] = None


class ConsistencyCheckDocument(Schema):
    n: int
    alpha: RationalString
    op: str
    kind: str
    verdict: str
    violation: Optional[str] = None


class ConsistencyCheckInputSchema(Schema):
    n: int
    alpha: str
    op: str = "dr"
    kind: str = "permutation"
