from ninja import Router

from graphs.exceptions import PermgraphError
from permanent.utils import contains_some_permutation
from permgraphAPI.schemas import ErrorSchema
from .schemas import PreimageCountDocument, ProjectedGraphDocument, ProjectionInputSchema
from .utils import preimages, project

router = Router()


@router.post("project", response={200: ProjectedGraphDocument, 400: ErrorSchema})
def project_graph(request, data: ProjectionInputSchema):
    """
    Endpoint to project an (n+1)-graph onto n vertices
    """
    try:
        result = project(data.to_graph(), data.op)
    except (ValueError, PermgraphError) as exception:
        return 400, ErrorSchema(message=str(exception))

    return 200, ProjectedGraphDocument(n=result.n, op=data.op, rows=result.row_strings())


@router.post("preimages/count", response={200: PreimageCountDocument, 400: ErrorSchema})
def count_preimages(request, data: ProjectionInputSchema, require_permutation: bool = False):
    """
    Endpoint to count the (n+1)-graphs projecting onto a graph
    """
    try:
        graph = data.to_graph()
        predicate = contains_some_permutation if require_permutation else None
        count = preimages(graph, data.op, predicate).count()
    except (ValueError, PermgraphError) as exception:
        return 400, ErrorSchema(message=str(exception))

    return 200, PreimageCountDocument(
        n=graph.n + 1, op=data.op, require_permutation=require_permutation, count=count
    )
