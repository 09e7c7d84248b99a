import logging
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb
from types import MappingProxyType
from typing import Callable, List, Mapping, Optional, Tuple, Union

import numpy as np

from crp.models import EwensParams
from crp.utils import EwensSampler, rising_factorial
from graphs.exceptions import CapacityError, DimensionError, InvalidParameterError
from graphs.models import DirectedGraph, Permutation
from graphs.utils import conjugate, enumerate_graphs
from permanent.models import CyclePolynomial
from permanent.utils import contains_some_permutation, cycle_polynomial, evaluate
from .models import PgmParams, SupportConditions, SupportFamily

logger = logging.getLogger(__name__)

EXHAUSTIVE_MAX_N = 4
FAMILY_MAX_N = 6
CODE_MAX_N = 7

# (cycle polynomial, #G, out-degree of the first vertex)
CensusKey = Tuple[CyclePolynomial, int, int]
GraphWeight = Callable[[DirectedGraph, PgmParams], Fraction]


def resolve_family(family: Union[None, str, SupportFamily]) -> SupportFamily:
    if family is None:
        return SupportFamily.get(SupportFamily.ALL)
    if isinstance(family, SupportFamily):
        return family
    return SupportFamily.get(family)


def check_family_capacity(family: SupportFamily, n: int, allow_large: bool) -> None:
    limit = EXHAUSTIVE_MAX_N if family.exhaustive else FAMILY_MAX_N
    if n > limit and not allow_large:
        raise CapacityError(
            f"Enumerating the {family.tag} family is limited to n <= {limit}, got n = {n}"
        )


def normalizer_closed_form(p: PgmParams) -> Fraction:
    """
    z_n = alpha_{n^1} beta^n (1 + beta)^(n^2 - n)
    """
    return rising_factorial(p.alpha, p.n) * p.beta**p.n * (1 + p.beta) ** (p.n * p.n - p.n)


def unnormalized_weight(graph: DirectedGraph, p: PgmParams, allow_large: bool = False) -> Fraction:
    """
    beta^#G per_alpha(G)
    """
    return p.beta**graph.edge_count * evaluate(cycle_polynomial(graph, allow_large), p.alpha)


@lru_cache(maxsize=None)
def edge_cycle_census(n: int, tag: str, allow_large: bool = False) -> Mapping[CensusKey, int]:
    """
    How many members of the family share each (cycle polynomial, edge count,
    first out-degree). Every brute-force quantity of the model is a sum over
    this table, so one enumeration serves the whole parameter grid.
    """
    family = SupportFamily.get(tag)
    check_family_capacity(family, n, allow_large)
    logger.info("Building the %s census at n = %d", tag, n)
    census = Counter(
        (cycle_polynomial(graph), graph.edge_count, graph.out_degree(0))
        for graph in family.members(n, allow_large)
    )
    logger.info("%d members in %d census classes", sum(census.values()), len(census))
    return MappingProxyType(dict(census))


def _census_weights(p: PgmParams, family: SupportFamily, allow_large: bool):
    """
    Yield (edges, first out-degree, class size, weight of one class member)
    """
    for (polynomial, edges, degree), count in edge_cycle_census(p.n, family.tag, allow_large).items():
        yield edges, degree, count, p.beta**edges * evaluate(polynomial, p.alpha)


def normalizer_bruteforce(
    p: PgmParams, family: Union[None, str, SupportFamily] = None, allow_large: bool = False
) -> Fraction:
    family = resolve_family(family)
    return sum(
        (count * weight for _, _, count, weight in _census_weights(p, family, allow_large)),
        Fraction(0),
    )


def normalizer(
    p: PgmParams, family: Union[None, str, SupportFamily] = None, allow_large: bool = False
) -> Fraction:
    """
    z_n over the family: the closed form for all graphs, enumeration otherwise
    """
    family = resolve_family(family)
    if family.tag == SupportFamily.ALL:
        return normalizer_closed_form(p)
    z = normalizer_bruteforce(p, family, allow_large)
    if not z:
        raise InvalidParameterError(
            f"No member of the {family.tag} family contains a permutation at n = {p.n}"
        )
    return z


def pmf(
    graph: DirectedGraph,
    p: PgmParams,
    family: Union[None, str, SupportFamily] = None,
    allow_large: bool = False,
) -> Fraction:
    if graph.n != p.n:
        raise DimensionError(f"A {graph.n}-graph under the model on {p.n} vertices")
    family = resolve_family(family)
    if not family.contains(graph):
        return Fraction(0)
    weight = unnormalized_weight(graph, p, allow_large)
    if not weight:
        return Fraction(0)
    return weight / normalizer(p, family, allow_large)


def degree_pmf(n: int, beta: Fraction, k: int) -> Fraction:
    """
    Out-degree of a vertex minus one is Binomial(n - 1, beta / (1 + beta))
    """
    beta = Fraction(beta)
    if beta <= 0:
        raise InvalidParameterError(f"beta must be positive, got {beta}")
    if not 0 <= k <= n - 1:
        raise InvalidParameterError(f"k must lie in 0..{n - 1}, got {k}")
    return comb(n - 1, k) * beta**k / (1 + beta) ** (n - 1)


def degree_pmf_bruteforce(p: PgmParams, k: int, allow_large: bool = False) -> Fraction:
    """
    P(out-degree of the first vertex = k + 1), summed over all n-graphs
    """
    family = resolve_family(SupportFamily.ALL)
    mass = sum(
        (
            count * weight
            for _, degree, count, weight in _census_weights(p, family, allow_large)
            if degree == k + 1
        ),
        Fraction(0),
    )
    return mass / normalizer_closed_form(p)


def expected_edges(n: int, beta: Fraction) -> Fraction:
    """
    The n edges of the drawn permutation plus n^2 - n independent cells
    """
    beta = Fraction(beta)
    return n + (n * n - n) * beta / (1 + beta)


def expected_edges_bruteforce(p: PgmParams, allow_large: bool = False) -> Fraction:
    family = resolve_family(SupportFamily.ALL)
    total = sum(
        (edges * count * weight for edges, _, count, weight in _census_weights(p, family, allow_large)),
        Fraction(0),
    )
    return total / normalizer_closed_form(p)


def erdos_renyi_pmf(graph: DirectedGraph, q: Fraction) -> Fraction:
    """
    Every one of the n^2 cells present independently with probability q
    """
    q = Fraction(q)
    edges = graph.edge_count
    return q**edges * (1 - q) ** (graph.n * graph.n - edges)


def total_variation_to_erdos_renyi(p: PgmParams, allow_large: bool = False) -> Fraction:
    """
    Exact total variation distance between the model and Erdos-Renyi graphs
    with the same cell probability beta / (1 + beta)
    """
    q = p.edge_probability
    cells = p.n * p.n
    z = normalizer_closed_form(p)
    family = resolve_family(SupportFamily.ALL)
    distance = Fraction(0)
    for edges, _, count, weight in _census_weights(p, family, allow_large):
        distance += count * abs(weight / z - q**edges * (1 - q) ** (cells - edges))
    return distance / 2


class PgmSampler:
    """
    Exact sampler: draw sigma from Ewens(alpha), keep its n edges, then set
    each of the other n^2 - n cells independently with probability
    beta / (1 + beta). Summing out sigma recovers beta^#G per_alpha(G) / z_n.
    """

    def __init__(self, p: PgmParams, seed: int = 0):
        self.params = p
        self.rng = np.random.default_rng(seed)
        self.permutations = EwensSampler(EwensParams(p.n, p.alpha), rng=self.rng)

    def adjacency(self, count: int) -> np.ndarray:
        """
        ``count`` draws as a boolean (count, n, n) array
        """
        n = self.params.n
        succ = self.permutations.successors(count)
        cells = self.rng.random((count, n, n)) < float(self.params.edge_probability)
        np.put_along_axis(cells, succ[:, :, None], True, axis=2)
        return cells

    def graphs(self, count: int) -> List[DirectedGraph]:
        packed = np.packbits(self.adjacency(count), axis=-1, bitorder="little")
        n = self.params.n
        return [
            DirectedGraph(n, tuple(int.from_bytes(row.tobytes(), "little") for row in draw))
            for draw in packed
        ]

    def graph(self) -> DirectedGraph:
        return self.graphs(1)[0]

    def codes(self, count: int, chunk: int = 100_000) -> np.ndarray:
        """
        Draws as integers whose bit n*i + j is the cell (i, j), the order
        used by graph enumeration
        """
        n = self.params.n
        if n > CODE_MAX_N:
            raise CapacityError(f"Graph codes need n <= {CODE_MAX_N}, got n = {n}")
        weights = np.left_shift(np.int64(1), np.arange(n * n, dtype=np.int64))
        parts = []
        for start in range(0, count, chunk):
            cells = self.adjacency(min(chunk, count - start)).reshape(-1, n * n)
            parts.append(cells.astype(np.int64) @ weights)
        return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)

    def edge_counts(self, count: int) -> np.ndarray:
        return self.adjacency(count).sum(axis=(1, 2))


def sample(p: PgmParams, seed: int) -> DirectedGraph:
    return PgmSampler(p, seed).graph()


def sample_batch(p: PgmParams, seed: int, count: int) -> List[DirectedGraph]:
    return PgmSampler(p, seed).graphs(count)


def exchangeability_check(
    p: PgmParams,
    trials: int,
    seed: int = 0,
    weight: Optional[GraphWeight] = None,
    allow_large: bool = False,
) -> bool:
    """
    Compare the probability of every n-graph with that of its relabelling
    by ``trials`` uniformly drawn tau. ``weight`` replaces the model's
    unnormalized weight, which lets a broken model be checked as well.
    """
    if p.n > EXHAUSTIVE_MAX_N and not allow_large:
        raise CapacityError(f"Exchangeability is checked over all graphs for n <= {EXHAUSTIVE_MAX_N}")
    weight = weight or unnormalized_weight
    weights = {graph: weight(graph, p) for graph in enumerate_graphs(p.n, allow_large=allow_large)}
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        tau = Permutation(tuple(int(i) for i in rng.permutation(p.n)))
        for graph, value in weights.items():
            if weights[conjugate(graph, tau)] != value:
                logger.info("Relabelling by %s changes the probability of\n%s", tau, graph)
                return False
    return True


def check_support_conditions(
    family: Union[str, SupportFamily], n: int, allow_large: bool = False
) -> SupportConditions:
    """
    Closure under conjugation is checked against the adjacent transpositions,
    which generate S_n; the second condition asks for one member that
    contains a permutation
    """
    family = resolve_family(family)
    check_family_capacity(family, n, allow_large)
    swaps = [
        Permutation(tuple(i + 1 if i == t else i - 1 if i == t + 1 else i for i in range(n)))
        for t in range(n - 1)
    ]
    closed = True
    has_permutation = False
    for graph in family.members(n, allow_large):
        has_permutation = has_permutation or contains_some_permutation(graph)
        if closed and not all(family.contains(conjugate(graph, tau)) for tau in swaps):
            logger.info("The %s family is not closed under conjugation at\n%s", family.tag, graph)
            closed = False
    return SupportConditions(family.tag, n, closed, has_permutation)
