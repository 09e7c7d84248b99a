from pathlib import Path

from cli.commands import CommandResult, PermgraphCommand
from graphs.formats import expand_star_matrix, format_graph, read_star_matrix_file
from permanent.utils import contains_some_permutation
from projection.models import ProjectionOp
from projection.schemas import (
    PreimageComparisonDocument,
    PreimageCountDocument,
    ProjectedGraphDocument,
    StarPatternDocument,
)
from projection.utils import preimages, preimages_bruteforce, star_patterns


class Command(PermgraphCommand):
    help = (
        "The (n+1)-graphs projecting onto a graph, enumerated through their last row, last column "
        "and corner; --require-permutation keeps those containing a permutation. Implements the "
        "preimage sets of G1 and G2 behind the delete-and-repair impossibility result."
    )
    model_parameters = False

    def add_action_arguments(self, action, parser):
        parser.add_argument("graph", type=Path, help="Graph file")
        parser.add_argument("--op", choices=ProjectionOp.choices, required=True)
        parser.add_argument("--require-permutation", action="store_true")
        parser.add_argument("--count-only", action="store_true")
        parser.add_argument("--patterns", action="store_true", help="Print the star patterns instead")
        parser.add_argument("--brute", action="store_true", help="Scan all (n+1)-graphs instead")
        parser.add_argument(
            "--listed", type=Path, help="Star matrix file to compare against the enumerated preimages"
        )

    def perform(self, config, options):
        graph = self.read_graph(config)
        op = options["op"]
        if options["patterns"]:
            return self.patterns(graph, op, config)
        predicate = contains_some_permutation if options["require_permutation"] else None
        if config.brute:
            members = preimages_bruteforce(graph, op, predicate, config.allow_large)
        else:
            members = preimages(graph, op, predicate, config.threads, config.allow_large)
        if options["listed"] is not None:
            return self.compare(graph, op, members, options)
        if options["count_only"]:
            count = len(members) if config.brute else members.count()
            document = PreimageCountDocument(
                n=graph.n + 1, op=op, require_permutation=options["require_permutation"], count=count
            )
            return CommandResult(documents=[document], text=str(count))
        members = list(members)
        return CommandResult(
            documents=[ProjectedGraphDocument(n=m.n, op=op, rows=m.row_strings()) for m in members],
            text="\n\n".join(format_graph(m) for m in members),
            rows=[["rows"]] + [["/".join(m.row_strings())] for m in members],
        )

    def compare(self, graph, op, members, options):
        enumerated = list(members)
        matrices = read_star_matrix_file(options["listed"])
        listed = list(dict.fromkeys(member for matrix in matrices for member in expand_star_matrix(matrix)))
        known = set(enumerated)
        listed_only = [member for member in listed if member not in known]
        listed_set = set(listed)
        enumerated_only = [member for member in enumerated if member not in listed_set]
        document = PreimageComparisonDocument(
            n=graph.n + 1,
            op=op,
            require_permutation=options["require_permutation"],
            listed=len(listed),
            enumerated=len(enumerated),
            listed_only=[member.row_strings() for member in listed_only],
            enumerated_only=[member.row_strings() for member in enumerated_only],
        )
        lines = [
            f"listed {document.listed}",
            f"enumerated {document.enumerated}",
            f"listed only {len(listed_only)}",
            *("/".join(rows) for rows in document.listed_only),
            f"enumerated only {len(enumerated_only)}",
            *("/".join(rows) for rows in document.enumerated_only),
        ]
        return CommandResult(
            documents=[document],
            text="\n".join(lines),
            rows=[["side", "rows"]]
            + [["listed", "/".join(rows)] for rows in document.listed_only]
            + [["enumerated", "/".join(rows)] for rows in document.enumerated_only],
        )

    def patterns(self, graph, op, config):
        patterns = star_patterns(graph, op, config.threads, config.allow_large)
        documents = [
            StarPatternDocument(
                r=format(pattern.r, f"0{graph.n}b")[::-1],
                c=format(pattern.c, f"0{graph.n}b")[::-1],
                d=pattern.d,
                size=pattern.size,
                rows=str(pattern).splitlines(),
            )
            for pattern in patterns
        ]
        return CommandResult(
            documents=documents,
            text="\n\n".join(str(pattern) for pattern in patterns),
            rows=[["r", "c", "d", "size"]] + [[d.r, d.c, str(d.d), str(d.size)] for d in documents],
        )
