from cli.commands import CommandResult, PermgraphCommand, add_model_arguments
from consistency.models import Verdict
from consistency.schemas import CertificateDocument, LtpVerdictDocument
from consistency.utils import G1, G2, dr_difference_certificate, ltp_check, ss_contradiction_chain
from graphs.formats import format_graph, parse_rational
from graphs.utils import graph_to_permutation
from pgm.models import PgmParams, SupportFamily
from projection.models import ProjectionOp

WITNESS_NAMES = {G1: "G1", G2: "G2"}


class Command(PermgraphCommand):
    help = (
        "Law of total probability P_n(G) = sum of P_{n+1}(G') over the preimages G' of G, "
        "checked exactly for the permanental graph model. Implements the impossibility result: "
        "no choice of parameters makes the model consistent under subselection or delete-and-repair."
    )
    actions = {
        "check": (
            "Check the identity for every candidate n-graph, symbolically or at one parameter point. "
            "Implements the law of total probability behind the impossibility result."
        ),
        "certificate": (
            "RHS(G2) - RHS(G1) under delete-and-repair; positive coefficients rule out every alpha, beta > 0. "
            "Implements the delete-and-repair half of the impossibility result."
        ),
        "chain": (
            "Replay the subselection refutation step by step. "
            "Implements the subselection half of the impossibility result."
        ),
    }

    def add_action_arguments(self, action, parser):
        if action == "check":
            add_model_arguments(parser)
            parser.add_argument("--op", choices=ProjectionOp.choices, default=ProjectionOp.DELETE_AND_REPAIR)
            parser.add_argument("--family", choices=SupportFamily.choices(), default=SupportFamily.ALL)
            parser.add_argument("--alpha-next", help="alpha at level n + 1, defaults to --alpha")
            parser.add_argument("--beta-next", help="beta at level n + 1, defaults to --beta")
        elif action == "chain":
            parser.add_argument("--n", type=int, default=3, help="Number of vertices")

    def perform(self, config, options):
        return getattr(self, f"perform_{config.action}")(config, options)

    def perform_check(self, config, options):
        self.require(config, "n")
        params = None
        if config.alpha is not None or config.beta is not None:
            self.require(config, "alpha", "beta")
            alpha_next = config.alpha if options["alpha_next"] is None else parse_rational(options["alpha_next"])
            beta_next = config.beta if options["beta_next"] is None else parse_rational(options["beta_next"])
            params = (
                PgmParams(config.n, config.alpha, config.beta),
                PgmParams(config.n + 1, alpha_next, beta_next),
            )
        verdict = ltp_check(
            options["op"],
            config.n,
            params=params,
            family=options["family"],
            threads=config.threads,
            allow_large=config.allow_large,
        )
        lines = [verdict.verdict, verdict.message]
        for index, graph in enumerate(verdict.witness, start=1):
            name = WITNESS_NAMES.get(graph, f"witness {index}")
            sigma = graph_to_permutation(graph)
            if sigma is not None:
                name = f"{name} {sigma}"
            lines.append(f"{name}:\n{format_graph(graph)}")
        if verdict.certificate is not None:
            lines.append(f"certificate: {verdict.certificate}")
        lines.extend(f"{key}: {value}" for key, value in verdict.details.items())
        names = ", ".join(WITNESS_NAMES.get(graph, "?") for graph in verdict.witness)
        return CommandResult(
            documents=[LtpVerdictDocument.from_verdict(verdict)],
            text="\n".join(lines),
            verdict=verdict.verdict,
            failure_message=f"The identity fails ({names})" if verdict.witness else "The identity fails",
        )

    def perform_certificate(self, config, options):
        certificate = dr_difference_certificate(config.threads)
        document = CertificateDocument.from_polynomial(certificate)
        positive = "all coefficients positive" if certificate.is_parameter_free() else "not sign-definite"
        return CommandResult(
            documents=[document],
            text=f"{certificate}\n{positive}",
            rows=[["a", "b", "c"]] + [[str(term.a), str(term.b), term.c] for term in document.terms],
        )

    def perform_chain(self, config, options):
        report = ss_contradiction_chain(options["n"], config.threads, config.allow_large)
        lines = []
        for step in report.steps:
            lines.append(f"{step.name}: {'holds' if step.passed else 'fails'}  {step.statement}")
            lines.extend(f"    {key} = {value}" for key, value in step.values.items())
        return CommandResult(
            documents=[report],
            text="\n".join(lines),
            rows=[["step", "passed"]] + [[step.name, str(step.passed)] for step in report.steps],
            verdict=Verdict.PASS if report.passed else Verdict.FAIL,
            failure_message="A step of the subselection chain fails",
        )
