from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from graphs.exceptions import InvalidParameterError
from graphs.models import DirectedGraph
from graphs.utils import (
    enumerate_graphs,
    enumerate_partitions,
    enumerate_permutations,
    graph_to_permutation,
    is_partition_graph,
    is_permutation_graph,
    partition_to_graph,
    permutation_to_graph,
)
from .exceptions import UnknownSupportFamilyError


@dataclass(frozen=True)
class PgmParams:
    """
    P_n(G) proportional to beta^#G per_alpha(G) over directed n-graphs
    """

    n: int
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        if self.n < 1:
            raise InvalidParameterError(f"Graphs need at least one vertex, got n = {self.n}")
        if self.alpha <= 0 or self.beta <= 0:
            raise InvalidParameterError(
                "alpha and beta must be positive for beta^#G per_alpha(G) to define "
                f"probabilities, got alpha = {self.alpha}, beta = {self.beta}"
            )

    @property
    def edge_probability(self) -> Fraction:
        """
        beta / (1 + beta), the chance of each cell outside the drawn permutation
        """
        return self.beta / (1 + self.beta)


def _fixed_point_free(graph: DirectedGraph) -> bool:
    sigma = graph_to_permutation(graph)
    return sigma is not None and all(sigma(i) != i for i in range(sigma.n))


def _single_cycle(graph: DirectedGraph) -> bool:
    sigma = graph_to_permutation(graph)
    return sigma is not None and sigma.cycle_count == 1


def _permutation_graphs(n: int) -> Iterator[DirectedGraph]:
    return (permutation_to_graph(sigma) for sigma in enumerate_permutations(n))


@dataclass(frozen=True)
class SupportFamily:
    """
    A conjugation-closed set of n-graphs the model is restricted to.
    ``generate(n)`` yields the members without scanning all n-graphs
    whenever the family allows it.
    """

    tag: str
    contains: Callable[[DirectedGraph], bool]
    generate: Callable[[int], Iterator[DirectedGraph]]
    exhaustive: bool = False

    ALL = "all"
    PERMUTATIONS = "permutations"
    PARTITIONS = "partitions"
    FIXED_POINT_FREE = "fixed-point-free-permutations"
    SINGLE_CYCLE = "single-cycle-permutations"

    def __str__(self) -> str:
        return self.tag

    def members(self, n: int, allow_large: bool = False) -> Iterator[DirectedGraph]:
        if self.exhaustive:
            return enumerate_graphs(n, allow_large=allow_large)
        return self.generate(n)

    @classmethod
    def get(cls, tag: str) -> "SupportFamily":
        try:
            return SUPPORT_FAMILIES[tag]
        except KeyError:
            raise UnknownSupportFamilyError(
                f"Unknown support family {tag!r}; expected one of {', '.join(SUPPORT_FAMILIES)}"
            ) from None

    @classmethod
    def choices(cls):
        return tuple(SUPPORT_FAMILIES)


SUPPORT_FAMILIES = {
    family.tag: family
    for family in (
        SupportFamily(SupportFamily.ALL, lambda graph: True, enumerate_graphs, exhaustive=True),
        SupportFamily(SupportFamily.PERMUTATIONS, is_permutation_graph, _permutation_graphs),
        SupportFamily(
            SupportFamily.PARTITIONS,
            is_partition_graph,
            lambda n: (partition_to_graph(pi) for pi in enumerate_partitions(n)),
        ),
        SupportFamily(
            SupportFamily.FIXED_POINT_FREE,
            _fixed_point_free,
            lambda n: filter(_fixed_point_free, _permutation_graphs(n)),
        ),
        SupportFamily(
            SupportFamily.SINGLE_CYCLE,
            _single_cycle,
            lambda n: filter(_single_cycle, _permutation_graphs(n)),
        ),
    )
}


@dataclass(frozen=True)
class SupportConditions:
    """
    Outcome of checking a support family at one size: closure under
    conjugation, and at least one member containing a permutation
    """

    tag: str
    n: int
    closed_under_conjugation: bool
    contains_permutation: bool

    @property
    def holds(self) -> bool:
        return self.closed_under_conjugation and self.contains_permutation
