from ninja import Router

from graphs.exceptions import PermgraphError
from graphs.formats import format_rational, parse_rational
from permgraphAPI.schemas import ErrorSchema
from .models import SampleKind
from .schemas import ConsistencyCheckDocument, ConsistencyCheckInputSchema
from .utils import find_dr_violation, find_partition_violation

router = Router()


@router.post("check-dr", response={200: ConsistencyCheckDocument, 400: ErrorSchema})
def check_consistency(request, data: ConsistencyCheckInputSchema):
    """
    Endpoint to check Ewens/CRP consistency between n and n + 1 points
    """
    try:
        alpha = parse_rational(data.alpha)
        if data.kind == SampleKind.PARTITION:
            violation = find_partition_violation(data.n, alpha, data.op)
            described = None if violation is None else "/".join(violation.row_strings())
        else:
            violation = find_dr_violation(data.n, alpha, data.op)
            described = None if violation is None else str(violation)
    except (ValueError, PermgraphError) as exception:
        return 400, ErrorSchema(message=str(exception))

    return 200, ConsistencyCheckDocument(
        n=data.n,
        alpha=format_rational(alpha),
        op=data.op,
        kind=data.kind,
        verdict="PASS" if described is None else "FAIL",
        violation=described,
    )
