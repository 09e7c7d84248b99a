from typing import Dict, List, Optional

from ninja import Schema

from permgraphAPI.schemas import GraphSchema
from .models import BivariatePolynomial, LtpVerdict


class CertificateTerm(Schema):
    """
    c alpha^a beta^b, the coefficient as a decimal string
    """

    a: int
    b: int
    c: str


class CertificateDocument(Schema):
    """
    A bivariate polynomial, terms ordered by beta exponent then alpha exponent
    """

    terms: List[CertificateTerm]

    @classmethod
    def from_polynomial(cls, polynomial: BivariatePolynomial) -> "CertificateDocument":
        return cls(terms=polynomial.to_document())


class LtpVerdictDocument(Schema):
    verdict: str
    mode: str
    op: str
    family: str
    n: int
    checked: int
    witness: List[GraphSchema]
    certificate: Optional[CertificateDocument] = None
    parameter_free: bool
    message: str
    details: Dict[str, str] = {}

    @classmethod
    def from_verdict(cls, verdict: LtpVerdict) -> "LtpVerdictDocument":
        return cls(
            verdict=verdict.verdict,
            mode=verdict.mode,
            op=verdict.op,
            family=verdict.family,
            n=verdict.n,
            checked=verdict.checked,
            witness=[GraphSchema.from_graph(graph) for graph in verdict.witness],
            certificate=None
            if verdict.certificate is None
            else CertificateDocument.from_polynomial(verdict.certificate),
            parameter_free=verdict.parameter_free,
            message=verdict.message,
            details=verdict.details,
        )


class ChainStepDocument(Schema):
    name: str
    statement: str
    passed: bool
    values: Dict[str, str]


class ChainReportDocument(Schema):
    """
    The subselection refutation, one entry per step so a failure points at
    the step that broke
    """

    n: int
    passed: bool
    steps: List[ChainStepDocument]
