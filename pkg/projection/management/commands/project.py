from pathlib import Path

from cli.commands import CommandResult, PermgraphCommand
from graphs.formats import format_graph
from projection.models import ProjectionOp
from projection.schemas import ProjectedGraphDocument
from projection.utils import project, project_vertex


class Command(PermgraphCommand):
    help = (
        "Project an (n+1)-graph to n vertices: ss keeps the top-left block, dr deletes the last "
        "vertex and adds i -> j wherever i -> n+1 -> j existed. "
        "Implements the subselection and delete-and-repair projections."
    )
    model_parameters = False

    def add_action_arguments(self, action, parser):
        parser.add_argument("graph", type=Path, help="Graph file")
        parser.add_argument("--op", choices=ProjectionOp.choices, required=True)
        parser.add_argument("--vertex", type=int, help="Remove this vertex (1-indexed) instead of the last")

    def perform(self, config, options):
        graph = self.read_graph(config)
        if options["vertex"] is None:
            result = project(graph, options["op"])
        else:
            result = project_vertex(graph, options["vertex"] - 1, options["op"])
        return CommandResult(
            documents=[ProjectedGraphDocument(n=result.n, op=options["op"], rows=result.row_strings())],
            text=format_graph(result),
        )
