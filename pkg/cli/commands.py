import argparse
import csv
import io
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from pydantic import BaseModel, ValidationError

from graphs.exceptions import PermgraphError
from graphs.formats import read_graph_file
from graphs.models import DirectedGraph
from .schemas import OutputFormat, RunConfig

logger = logging.getLogger(__name__)

VERBOSITY_LEVELS = {0: logging.ERROR, 2: logging.INFO, 3: logging.DEBUG}


@dataclass
class CommandResult:
    """
    What a command emits: the JSON documents (one line each), the text
    rendering, and optionally the CSV table with its header row first.
    ``verdict`` is set by checking commands; FAIL turns into exit status 1.
    """

    documents: List[BaseModel]
    text: str
    rows: Optional[List[List[str]]] = None
    verdict: Optional[str] = None
    failure_message: str = field(default="FAIL")


def add_common_arguments(parser) -> None:
    options = settings.PERMGRAPH
    parser.add_argument(
        "--format",
        choices=[choice.value for choice in OutputFormat],
        default=OutputFormat.TEXT.value,
        help="Output format",
    )
    parser.add_argument(
        "--json", dest="format", action="store_const", const=OutputFormat.JSON.value, help="Same as --format json"
    )
    parser.add_argument("--out", type=Path, help="Write the output to this file instead of stdout")
    parser.add_argument("--seed", type=int, default=options["DEFAULT_SEED"], help="Seed of the PCG64 generator")
    parser.add_argument("--threads", type=int, default=options["THREADS"], help="Worker processes for the preimage enumeration")
    parser.add_argument(
        "--allow-large", action="store_true", help="Lift the size limits of enumerations and kernels"
    )


def add_model_arguments(parser, beta: bool = True, n: bool = True) -> None:
    if n:
        parser.add_argument("--n", type=int, help="Number of vertices")
    parser.add_argument("--alpha", help="Exact rational alpha, e.g. 7/3 or 1.5")
    if beta:
        parser.add_argument("--beta", help="Exact rational beta")


def csv_text(rows: Sequence[Sequence[str]]) -> str:
    buffer = io.StringIO()
    csv.writer(buffer, lineterminator="\n").writerows(rows)
    return buffer.getvalue().rstrip("\n")


def _validation_message(exception: ValidationError) -> str:
    return "; ".join(error["msg"] for error in exception.errors())


class PermgraphCommand(BaseCommand):
    """
    Base of the command line tools: the shared flags, exact parameters via
    RunConfig, text/JSON/CSV output, exit status 1 for a FAIL verdict and 2
    for usage or domain errors.

    Commands with ``actions`` get one sub-command per entry, each carrying
    the shared flags.
    """

    requires_system_checks = []
    model_parameters = True
    actions: Dict[str, str] = {}

    @property
    def command_name(self) -> str:
        return self.__module__.rsplit(".", 1)[-1]

    def add_arguments(self, parser):
        if not self.actions:
            add_common_arguments(parser)
            self.add_action_arguments(None, parser)
            return
        subparsers = parser.add_subparsers(
            dest="action", required=True, parser_class=argparse.ArgumentParser
        )
        for action, help_text in self.actions.items():
            subparser = subparsers.add_parser(action, help=help_text, description=help_text)
            add_common_arguments(subparser)
            self.add_action_arguments(action, subparser)

    def add_action_arguments(self, action: Optional[str], parser) -> None:
        pass

    def perform(self, config: RunConfig, options: dict) -> CommandResult:
        raise NotImplementedError

    def read_graph(self, config: RunConfig) -> DirectedGraph:
        if config.graph is None:
            raise CommandError("A graph file is required", returncode=2)
        return read_graph_file(config.graph)

    def build_config(self, options: dict) -> RunConfig:
        return RunConfig(
            command=self.command_name,
            action=options.get("action"),
            n=options.get("n"),
            alpha=options.get("alpha"),
            beta=options.get("beta"),
            seed=options.get("seed", settings.PERMGRAPH["DEFAULT_SEED"]),
            format=options.get("format") or OutputFormat.TEXT.value,
            out=options.get("out"),
            threads=options.get("threads") or 1,
            allow_large=options.get("allow_large", False),
            brute=options.get("brute", False),
            graph=options.get("graph"),
            model_parameters=self.model_parameters,
        )

    def require(self, config: RunConfig, *names: str) -> None:
        missing = [name for name in names if getattr(config, name) is None]
        if missing:
            raise CommandError(
                f"Missing required option(s): {', '.join('--' + name for name in missing)}", returncode=2
            )

    def handle(self, *args, **options):
        level = VERBOSITY_LEVELS.get(options.get("verbosity", 1))
        if level is not None:
            logging.getLogger().setLevel(level)
        try:
            config = self.build_config(options)
            result = self.perform(config, options)
        except ValidationError as exception:
            raise CommandError(_validation_message(exception), returncode=2) from exception
        except PermgraphError as exception:
            raise CommandError(str(exception), returncode=2) from exception
        self.emit(config, result)
        if result.verdict == "FAIL":
            raise CommandError(result.failure_message, returncode=1)

    def render(self, config: RunConfig, result: CommandResult) -> str:
        if config.format == OutputFormat.JSON:
            return "\n".join(document.json() for document in result.documents)
        if config.format == OutputFormat.CSV:
            rows = result.rows
            if rows is None:
                dicts = [document.dict() for document in result.documents]
                header = list(dicts[0]) if dicts else []
                rows = [header] + [[str(item[key]) for key in header] for item in dicts]
            return csv_text(rows)
        return result.text

    def emit(self, config: RunConfig, result: CommandResult) -> None:
        content = self.render(config, result)
        if config.out is not None:
            config.out.write_text(content + "\n")
            logger.info("Wrote %s output to %s", config.format.value, config.out)
            return
        self.stdout.write(content)
