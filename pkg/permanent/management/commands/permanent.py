from pathlib import Path

from cli.commands import CommandResult, PermgraphCommand, add_model_arguments
from permgraphAPI.schemas import ValueDocument
from permanent.models import RealMatrix
from permanent.schemas import CyclePolynomialDocument
from permanent.utils import alpha_permanent_bruteforce, cycle_polynomial, evaluate


class Command(PermgraphCommand):
    help = (
        "Exact alpha-permanent per_alpha(G) = sum over the permutations sigma contained in G "
        "of alpha^#sigma. With --poly, the cycle polynomial c_1..c_n, one count per line. "
        "Implements the alpha-permanent behind the model weights."
    )
    model_parameters = False

    def add_action_arguments(self, action, parser):
        parser.add_argument("graph", type=Path, help="Graph file: n, then n rows of 0/1")
        add_model_arguments(parser, beta=False, n=False)
        parser.add_argument("--poly", action="store_true", help="Print c_k, the permutations with k cycles in G")
        parser.add_argument("--brute", action="store_true", help="Sum over all n! permutations instead")
        parser.add_argument("--engine", choices=("auto", "python", "numpy"), default="auto")

    def perform(self, config, options):
        graph = self.read_graph(config)
        if options["poly"]:
            polynomial = cycle_polynomial(graph, config.allow_large, options["engine"])
            coefficients = list(polynomial.coeffs)
            return CommandResult(
                documents=[CyclePolynomialDocument(__root__=coefficients)],
                text="\n".join(str(c) for c in coefficients),
                rows=[["k", "c_k"]] + [[str(k), str(c)] for k, c in enumerate(coefficients, start=1)],
            )
        self.require(config, "alpha")
        if config.brute:
            value = alpha_permanent_bruteforce(RealMatrix.from_graph(graph), config.alpha, config.allow_large)
        else:
            value = evaluate(cycle_polynomial(graph, config.allow_large, options["engine"]), config.alpha)
        return CommandResult(
            documents=[ValueDocument.build(graph.n, value, alpha=config.alpha)],
            text=str(value),
        )
