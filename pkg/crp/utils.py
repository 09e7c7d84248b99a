import logging
from collections import defaultdict
from fractions import Fraction
from math import factorial, prod
from typing import Dict, List, Optional

import numpy as np

from graphs.exceptions import CapacityError, DimensionError
from graphs.models import DirectedGraph, Partition, Permutation
from graphs.utils import (
    enumerate_partitions,
    enumerate_permutations,
    partition_to_graph,
    permutation_to_graph,
)
from permanent.utils import stirling_cycle_numbers
from projection.models import ProjectionOp
from projection.utils import permutation_dr_preimages, permutation_ss_preimages, project
from .models import EwensParams

logger = logging.getLogger(__name__)

CONSISTENCY_MAX_N = 6


def rising_factorial(alpha: Fraction, n: int) -> Fraction:
    """
    alpha (alpha + 1) ... (alpha + n - 1); the empty product is 1
    """
    alpha = Fraction(alpha)
    result = Fraction(1)
    for k in range(n):
        result *= alpha + k
    return result


def ewens_pmf(sigma: Permutation, p: EwensParams) -> Fraction:
    if sigma.n != p.n:
        raise DimensionError(f"Permutation of {sigma.n} elements under Ewens on S_{p.n}")
    return p.alpha**sigma.cycle_count / rising_factorial(p.alpha, p.n)


def ewens_pmf_by_cycle_count(p: EwensParams) -> List[Fraction]:
    """
    P(#sigma = k) for k = 1..n, i.e. c(n, k) alpha^k / alpha_{n^1}
    """
    normalizer = rising_factorial(p.alpha, p.n)
    return [
        count * p.alpha**k / normalizer
        for k, count in enumerate(stirling_cycle_numbers(p.n), start=1)
    ]


def crp_partition_pmf(partition: Partition, p: EwensParams) -> Fraction:
    """
    alpha^#pi prod_j (n_j - 1)! / alpha_{n^1}, the law of the cycle blocks
    of an Ewens permutation
    """
    if partition.n != p.n:
        raise DimensionError(f"Partition of {partition.n} elements under CRP on [{p.n}]")
    weight = prod(factorial(size - 1) for size in partition.block_sizes)
    return p.alpha**partition.block_count * weight / rising_factorial(p.alpha, p.n)


def cycles_to_partition(sigma: Permutation) -> Partition:
    return Partition.from_blocks(sigma.n, sigma.cycles)


class EwensSampler:
    """
    Chinese restaurant seating: element k (0-indexed) opens a new cycle with
    probability alpha / (alpha + k), otherwise it is seated right after one
    of the k earlier elements chosen uniformly, i.e. sigma(j) becomes k and
    k inherits the old sigma(j).

    Each sampler owns a numpy PCG64 generator, so a seed fixes the whole
    stream of draws on every platform.
    """

    def __init__(self, p: EwensParams, seed: int = 0, rng: Optional[np.random.Generator] = None):
        self.params = p
        self.rng = rng if rng is not None else np.random.default_rng(seed)

    def successors(self, count: int) -> np.ndarray:
        """
        ``count`` independent draws as a (count, n) array of images
        """
        n = self.params.n
        alpha = float(self.params.alpha)
        succ = np.zeros((count, n), dtype=np.int64)
        rows = np.arange(count)
        for k in range(1, n):
            opens = self.rng.random(count) < alpha / (alpha + k)
            seats = self.rng.integers(0, k, size=count)
            succ[opens, k] = k
            joined = rows[~opens]
            after = seats[joined]
            succ[joined, k] = succ[joined, after]
            succ[joined, after] = k
        return succ

    def permutations(self, count: int) -> List[Permutation]:
        return [Permutation(tuple(int(i) for i in row)) for row in self.successors(count)]

    def permutation(self) -> Permutation:
        return self.permutations(1)[0]

    def partitions(self, count: int) -> List[Partition]:
        return [cycles_to_partition(sigma) for sigma in self.permutations(count)]

    def partition(self) -> Partition:
        return self.partitions(1)[0]


def crp_sample_permutation(p: EwensParams, seed: int) -> Permutation:
    return EwensSampler(p, seed).permutation()


def crp_sample_partition(p: EwensParams, seed: int) -> Partition:
    return EwensSampler(p, seed).partition()


def _check_consistency_capacity(n: int, allow_large: bool) -> None:
    if n > CONSISTENCY_MAX_N and not allow_large:
        raise CapacityError(
            f"Consistency checks enumerate S_{n + 1}; the limit is n = {CONSISTENCY_MAX_N}"
        )


def dr_census_holds(sigma: Permutation, preimages: List[Permutation]) -> bool:
    """
    n + 1 distinct preimages, each projecting back onto sigma, exactly one of
    them with one more cycle than sigma and the rest with as many
    """
    if len(set(preimages)) != sigma.n + 1:
        return False
    target = permutation_to_graph(sigma)
    if any(
        project(permutation_to_graph(tau), ProjectionOp.DELETE_AND_REPAIR) != target
        for tau in preimages
    ):
        return False
    gains = sorted(tau.cycle_count - sigma.cycle_count for tau in preimages)
    return gains == [0] * sigma.n + [1]


def find_dr_violation(
    n: int,
    alpha: Fraction,
    op: str = ProjectionOp.DELETE_AND_REPAIR,
    allow_large: bool = False,
) -> Optional[Permutation]:
    """
    The first sigma in S_n (lexicographic order) whose Ewens probability is
    not the total Ewens probability of its preimages in S_{n+1}, or whose
    delete-and-repair preimages break the census; None if there is none
    """
    _check_consistency_capacity(n, allow_large)
    level = EwensParams(n, alpha)
    upper = level.grown()
    find_preimages = (
        permutation_dr_preimages if op == ProjectionOp.DELETE_AND_REPAIR else permutation_ss_preimages
    )
    logger.info("Checking Ewens(%s) consistency under %s at n = %d", level.alpha, op, n)
    for sigma in enumerate_permutations(n):
        preimages = find_preimages(sigma)
        if op == ProjectionOp.DELETE_AND_REPAIR and not dr_census_holds(sigma, preimages):
            logger.info("Preimage census fails at %s", sigma)
            return sigma
        if sum(ewens_pmf(tau, upper) for tau in preimages) != ewens_pmf(sigma, level):
            return sigma
    return None


def crp_consistency_check_dr(
    n: int,
    alpha: Fraction,
    op: str = ProjectionOp.DELETE_AND_REPAIR,
    allow_large: bool = False,
) -> bool:
    return find_dr_violation(n, alpha, op, allow_large) is None


def find_partition_violation(
    n: int, alpha: Fraction, op: str, allow_large: bool = False
) -> Optional[DirectedGraph]:
    """
    Push CRP(alpha) on partitions of [n+1] through the projection and compare
    with CRP(alpha) on [n]. Returns the first n-graph where the two laws
    differ, a projected graph that is not a partition included.
    """
    _check_consistency_capacity(n, allow_large)
    level = EwensParams(n, alpha)
    upper = level.grown()
    pushed: Dict[DirectedGraph, Fraction] = defaultdict(Fraction)
    for partition in enumerate_partitions(n + 1):
        pushed[project(partition_to_graph(partition), op)] += crp_partition_pmf(partition, upper)
    for partition in enumerate_partitions(n):
        graph = partition_to_graph(partition)
        if pushed.pop(graph, Fraction(0)) != crp_partition_pmf(partition, level):
            return graph
    for graph, mass in pushed.items():
        if mass:
            return graph
    return None


def crp_partition_consistency_check(
    n: int, alpha: Fraction, op: str = ProjectionOp.DELETE_AND_REPAIR, allow_large: bool = False
) -> bool:
    return find_partition_violation(n, alpha, op, allow_large) is None
