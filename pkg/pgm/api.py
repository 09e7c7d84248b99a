from ninja import Router

from graphs.exceptions import PermgraphError
from graphs.formats import format_rational, parse_rational
from permgraphAPI.schemas import ErrorSchema, ValueDocument
from .models import PgmParams
from .schemas import DegreeDocument, GraphPmfInputSchema, ModelInputSchema
from .utils import degree_pmf, normalizer, pmf

router = Router()


@router.post("z", response={200: ValueDocument, 400: ErrorSchema})
def get_normalizer(request, data: ModelInputSchema):
    """
    Endpoint for z_n, the normalizing constant of the model over a support family
    """
    try:
        p = PgmParams(data.n, parse_rational(data.alpha), parse_rational(data.beta))
        value = normalizer(p, data.family)
    except PermgraphError as exception:
        return 400, ErrorSchema(message=str(exception))

    return 200, ValueDocument.build(p.n, value, p.alpha, p.beta)


@router.post("pmf", response={200: ValueDocument, 400: ErrorSchema})
def get_pmf(request, data: GraphPmfInputSchema):
    """
    Endpoint for the exact probability of a graph
    """
    try:
        graph = data.to_graph()
        p = PgmParams(graph.n, parse_rational(data.alpha), parse_rational(data.beta))
        value = pmf(graph, p, data.family)
    except PermgraphError as exception:
        return 400, ErrorSchema(message=str(exception))

    return 200, ValueDocument.build(p.n, value, p.alpha, p.beta)


@router.get("degree", response={200: DegreeDocument, 400: ErrorSchema})
def get_degree_law(request, n: int, beta: str):
    """
    Endpoint for the law of a vertex's out-degree minus one
    """
    try:
        value = parse_rational(beta)
        probabilities = [degree_pmf(n, value, k) for k in range(n)]
    except PermgraphError as exception:
        return 400, ErrorSchema(message=str(exception))

    return 200, DegreeDocument(
        n=n,
        beta=format_rational(value),
        probabilities=[format_rational(probability) for probability in probabilities],
    )
