from cli.commands import CommandResult, PermgraphCommand, add_model_arguments
from crp.models import EwensParams, SampleKind
from crp.schemas import ConsistencyCheckDocument, CrpSampleDocument
from crp.utils import EwensSampler, find_dr_violation, find_partition_violation
from graphs.formats import format_rational
from projection.models import ProjectionOp


class Command(PermgraphCommand):
    help = (
        "Ewens(alpha) permutations and CRP(alpha) partitions, P(sigma) = alpha^#sigma / alpha_{n^1}. "
        "Implements the delete-and-repair consistency of the Ewens distribution."
    )
    actions = {
        "sample": (
            "Seat n customers: the k-th opens a table with probability alpha/(alpha+k). "
            "Implements the seating process behind the Ewens distribution."
        ),
        "check-dr": (
            "Check that the preimages in S_{n+1} carry exactly the Ewens probability of each sigma in S_n. "
            "Implements the delete-and-repair consistency of the Ewens distribution."
        ),
    }

    def add_action_arguments(self, action, parser):
        add_model_arguments(parser, beta=False)
        parser.add_argument("--kind", choices=SampleKind.choices, default=SampleKind.PERMUTATION)
        if action == "sample":
            parser.add_argument("--count", type=int, default=1)
        else:
            parser.add_argument("--op", choices=ProjectionOp.choices, default=ProjectionOp.DELETE_AND_REPAIR)

    def perform(self, config, options):
        self.require(config, "n", "alpha")
        p = EwensParams(config.n, config.alpha)
        if config.action == "sample":
            return self.sample(p, config, options)
        return self.check(p, config, options)

    def sample(self, p, config, options):
        sampler = EwensSampler(p, config.seed)
        documents = []
        if options["kind"] == SampleKind.PARTITION:
            for index, partition in enumerate(sampler.partitions(options["count"])):
                documents.append(
                    CrpSampleDocument(
                        n=p.n,
                        kind=SampleKind.PARTITION,
                        index=index,
                        notation=str(partition),
                        blocks=[[i + 1 for i in block] for block in partition.blocks],
                    )
                )
        else:
            for index, sigma in enumerate(sampler.permutations(options["count"])):
                documents.append(
                    CrpSampleDocument(
                        n=p.n,
                        kind=SampleKind.PERMUTATION,
                        index=index,
                        notation=str(sigma),
                        images=[i + 1 for i in sigma.images],
                    )
                )
        return CommandResult(
            documents=documents,
            text="\n".join(document.notation for document in documents),
            rows=[["index", "notation"]] + [[str(d.index), d.notation] for d in documents],
        )

    def check(self, p, config, options):
        if options["kind"] == SampleKind.PARTITION:
            violation = find_partition_violation(p.n, p.alpha, options["op"], config.allow_large)
            described = None if violation is None else "/".join(violation.row_strings())
        else:
            violation = find_dr_violation(p.n, p.alpha, options["op"], config.allow_large)
            described = None if violation is None else str(violation)
        verdict = "PASS" if violation is None else "FAIL"
        document = ConsistencyCheckDocument(
            n=p.n,
            alpha=format_rational(p.alpha),
            op=options["op"],
            kind=options["kind"],
            verdict=verdict,
            violation=described,
        )
        return CommandResult(
            documents=[document],
            text=verdict if described is None else f"{verdict} {described}",
            verdict=verdict,
            failure_message=f"Consistency fails at {described}",
        )
