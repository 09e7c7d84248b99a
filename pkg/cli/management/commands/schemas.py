import json

from cli.commands import CommandResult, PermgraphCommand
from cli.schemas import OutputFormat
from consistency.schemas import CertificateDocument, ChainReportDocument, LtpVerdictDocument
from crp.schemas import ConsistencyCheckDocument, CrpSampleDocument
from permanent.schemas import CyclePolynomialDocument
from permgraphAPI.schemas import ErrorSchema, ValueDocument
from pgm.schemas import DegreeDocument, SampleDocument
from projection.schemas import (
    PreimageComparisonDocument,
    PreimageCountDocument,
    ProjectedGraphDocument,
    StarPatternDocument,
)

DOCUMENTS = (
    ErrorSchema,
    ValueDocument,
    CyclePolynomialDocument,
    SampleDocument,
    DegreeDocument,
    CrpSampleDocument,
    ConsistencyCheckDocument,
    ProjectedGraphDocument,
    PreimageCountDocument,
    PreimageComparisonDocument,
    StarPatternDocument,
    CertificateDocument,
    LtpVerdictDocument,
    ChainReportDocument,
)


class Command(PermgraphCommand):
    help = "Print the JSON schema of every document the commands emit"
    model_parameters = False

    def perform(self, config, options):
        schemas = {document.__name__: document.schema() for document in DOCUMENTS}
        return CommandResult(
            documents=[],
            text=json.dumps(schemas, indent=2, default=str),
            rows=[["document", "fields"]]
            + [[name, " ".join(schema.get("properties", {}))] for name, schema in schemas.items()],
        )

    def render(self, config, result):
        if config.format == OutputFormat.JSON:
            return result.text
        return super().render(config, result)
