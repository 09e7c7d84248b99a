from fractions import Fraction

import numpy as np
from scipy.stats import binom

from cli.commands import CommandResult, PermgraphCommand, add_model_arguments
from graphs.formats import format_graph, format_rational
from permgraphAPI.schemas import ValueDocument
from pgm.models import PgmParams, SupportFamily
from pgm.schemas import DegreeDocument, SampleDocument
from pgm.utils import (
    PgmSampler,
    degree_pmf,
    normalizer,
    normalizer_bruteforce,
    pmf,
    total_variation_to_erdos_renyi,
)


class Command(PermgraphCommand):
    help = (
        "Permanental graph model P_n(G) proportional to beta^#G per_alpha(G). Implements the model with "
        "its closed-form normalizer and degree law, and its exchangeable restricted supports."
    )
    actions = {
        "z": (
            "Normalizer z_n = alpha_{n^1} beta^n (1+beta)^(n^2-n); --brute sums beta^#G per_alpha(G) "
            "over the family. Implements the closed-form normalizer of the model."
        ),
        "pmf": "Exact probability beta^#G per_alpha(G) / z_n of one graph. Implements the model definition.",
        "sample": (
            "Exact draws: an Ewens(alpha) permutation plus independent cells of probability beta/(1+beta). "
            "Implements the factorisation of the normalizer over contained permutations."
        ),
        "degree": (
            "Out-degree minus one ~ Binomial(n-1, beta/(1+beta)); --empirical adds sampled frequencies. "
            "Implements the degree law of the model."
        ),
        "tv": (
            "Exact total variation distance to Erdos-Renyi(n, beta/(1+beta)). "
            "Implements the comparison with Erdos-Renyi graphs."
        ),
    }

    def add_action_arguments(self, action, parser):
        add_model_arguments(parser, n=action != "pmf")
        if action in ("z", "pmf"):
            parser.add_argument("--family", choices=SupportFamily.choices(), default=SupportFamily.ALL)
        if action == "z":
            parser.add_argument("--brute", action="store_true", help="Enumerate the family instead")
        if action == "pmf":
            parser.add_argument("--graph", required=True, help="Graph file")
        if action == "sample":
            parser.add_argument("--count", type=int, default=1)
        if action == "degree":
            parser.add_argument("--empirical", action="store_true")
            parser.add_argument("--samples", type=int, default=100_000)

    def perform(self, config, options):
        return getattr(self, "perform_" + config.action)(config, options)

    def params(self, config, n=None) -> PgmParams:
        self.require(config, "alpha", "beta")
        if n is None:
            self.require(config, "n")
        return PgmParams(n or config.n, config.alpha, config.beta)

    def value_result(self, p: PgmParams, value: Fraction) -> CommandResult:
        return CommandResult(
            documents=[ValueDocument.build(p.n, value, alpha=p.alpha, beta=p.beta)],
            text=str(value),
        )

    def perform_z(self, config, options):
        p = self.params(config)
        if config.brute:
            value = normalizer_bruteforce(p, options["family"], config.allow_large)
        else:
            value = normalizer(p, options["family"], config.allow_large)
        return self.value_result(p, value)

    def perform_pmf(self, config, options):
        graph = self.read_graph(config)
        p = self.params(config, graph.n)
        return self.value_result(p, pmf(graph, p, options["family"], config.allow_large))

    def perform_sample(self, config, options):
        p = self.params(config)
        graphs = PgmSampler(p, config.seed).graphs(options["count"])
        documents = [
            SampleDocument(n=p.n, index=index, edges=graph.edge_count, rows=graph.row_strings())
            for index, graph in enumerate(graphs)
        ]
        return CommandResult(
            documents=documents,
            text="\n\n".join(format_graph(graph) for graph in graphs),
            rows=[["index", "edges", "rows"]]
            + [[str(d.index), str(d.edges), "/".join(d.rows)] for d in documents],
        )

    def perform_degree(self, config, options):
        self.require(config, "n", "beta")
        n, beta = config.n, config.beta
        exact = [degree_pmf(n, beta, k) for k in range(n)]
        approximate = binom.pmf(np.arange(n), n - 1, float(beta / (1 + beta)))
        empirical = None
        if options["empirical"]:
            p = PgmParams(n, config.alpha or 1, beta)
            degrees = PgmSampler(p, config.seed).adjacency(options["samples"])[:, 0, :].sum(axis=1) - 1
            empirical = (np.bincount(degrees, minlength=n) / options["samples"]).tolist()
        document = DegreeDocument(
            n=n,
            beta=format_rational(beta),
            probabilities=[format_rational(value) for value in exact],
            empirical=empirical,
            samples=options["samples"] if empirical is not None else None,
        )
        header = ["k", "probability", "float"] + (["empirical"] if empirical is not None else [])
        rows = [
            [str(k), format_rational(exact[k]), f"{approximate[k]:.6f}"]
            + ([f"{empirical[k]:.6f}"] if empirical is not None else [])
            for k in range(n)
        ]
        return CommandResult(
            documents=[document],
            text="\n".join(" ".join(row) for row in rows),
            rows=[header] + rows,
        )

    def perform_tv(self, config, options):
        p = self.params(config)
        return self.value_result(p, total_variation_to_erdos_renyi(p, config.allow_large))
