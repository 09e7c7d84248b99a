from ninja import NinjaAPI

from consistency.api import router as consistency_router
from crp.api import router as crp_router
from permanent.api import router as permanent_router
from pgm.api import router as pgm_router
from projection.api import router as projection_router

api = NinjaAPI(title="permgraph", csrf=False)


api.add_router("/permanent/", permanent_router)
api.add_router("/pgm/", pgm_router)
api.add_router("/crp/", crp_router)
api.add_router("/projection/", projection_router)
api.add_router("/consistency/", consistency_router)


@api.get("/status/", response={200: str})
def status(request) -> str:
    """
    Status check endpoint.
    """
    return "The server is up!"
