from ninja import Router

from graphs.exceptions import PermgraphError
from permgraphAPI.schemas import ErrorSchema, GraphSchema, ValueDocument
from graphs.formats import parse_rational
from .schemas import CyclePolynomialSchema, PermanentInputSchema
from .utils import cycle_polynomial, evaluate

router = Router()


@router.post("poly", response={200: CyclePolynomialSchema, 400: ErrorSchema})
def get_cycle_polynomial(request, data: GraphSchema):
    """
    Endpoint to count the permutations inside a graph by number of cycles
    """
    try:
        polynomial = cycle_polynomial(data.to_graph())
    except PermgraphError as exception:
        return 400, ErrorSchema(message=str(exception))

    return 200, CyclePolynomialSchema(
        n=polynomial.n,
        coefficients=list(polynomial.coeffs),
        permutations=polynomial.permutation_count,
    )


@router.post("value", response={200: ValueDocument, 400: ErrorSchema})
def get_permanent(request, data: PermanentInputSchema):
    """
    Endpoint for the exact alpha-permanent of a graph
    """
    try:
        graph = data.to_graph()
        alpha = parse_rational(data.alpha)
        value = evaluate(cycle_polynomial(graph), alpha)
    except PermgraphError as exception:
        return 400, ErrorSchema(message=str(exception))

    return 200, ValueDocument.build(graph.n, value, alpha=alpha)
