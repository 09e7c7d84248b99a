from ninja import Router

from .schemas import CertificateDocument
from .utils import dr_difference_certificate

router = Router()


@router.get("certificate", response={200: CertificateDocument})
def get_certificate(request):
    """
    Endpoint for RHS(G2) - RHS(G1) under delete-and-repair
    """
    return 200, CertificateDocument.from_polynomial(dr_difference_certificate())
