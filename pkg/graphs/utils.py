import logging
from itertools import permutations
from typing import Callable, Iterator, Optional

from .exceptions import CapacityError, DimensionError
from .models import DirectedGraph, Partition, Permutation

logger = logging.getLogger(__name__)

ENUMERATION_MAX_N = 5

GraphPredicate = Callable[[DirectedGraph], bool]


def contains_permutation(graph: DirectedGraph, sigma: Permutation) -> bool:
    """
    True iff every edge i -> sigma(i) is present in the graph
    """
    if graph.n != sigma.n:
        raise DimensionError(f"Graph has {graph.n} vertices, permutation has {sigma.n}")
    return all(row >> image & 1 for row, image in zip(graph.rows, sigma.images))


def conjugate(graph: DirectedGraph, tau: Permutation) -> DirectedGraph:
    """
    Relabel vertices by tau: result[tau(i)][tau(j)] = graph[i][j]
    """
    if graph.n != tau.n:
        raise DimensionError(f"Graph has {graph.n} vertices, permutation has {tau.n}")
    rows = [0] * graph.n
    for i, row in enumerate(graph.rows):
        relabelled = 0
        for j in range(graph.n):
            if row >> j & 1:
                relabelled |= 1 << tau.images[j]
        rows[tau.images[i]] = relabelled
    return DirectedGraph(graph.n, tuple(rows))


def permutation_to_graph(sigma: Permutation) -> DirectedGraph:
    return DirectedGraph(sigma.n, tuple(1 << image for image in sigma.images))


def partition_to_graph(partition: Partition) -> DirectedGraph:
    """
    Equivalence relation of the partition: i -> j iff i and j share a block
    """
    block_masks = [sum(1 << i for i in block) for block in partition.blocks]
    return DirectedGraph(
        partition.n, tuple(block_masks[label] for label in partition.labels)
    )


def graph_to_permutation(graph: DirectedGraph) -> Optional[Permutation]:
    """
    The permutation whose graph this is, or None for a non-permutation graph
    """
    if not is_permutation_graph(graph):
        return None
    return Permutation(tuple(row.bit_length() - 1 for row in graph.rows))


def is_permutation_graph(graph: DirectedGraph) -> bool:
    """
    Exactly one edge in every row and every column
    """
    columns = 0
    for row in graph.rows:
        if bin(row).count("1") != 1:
            return False
        columns |= row
    return columns == graph.full_mask


def is_partition_graph(graph: DirectedGraph) -> bool:
    """
    Reflexive, symmetric and transitive
    """
    for i, row in enumerate(graph.rows):
        if not row >> i & 1:
            return False
        for j in range(graph.n):
            if row >> j & 1 and graph.rows[j] != row:
                return False
    return True


def transitive_closure(graph: DirectedGraph) -> DirectedGraph:
    rows = list(graph.rows)
    for k in range(graph.n):
        for i in range(graph.n):
            if rows[i] >> k & 1:
                rows[i] |= rows[k]
    return DirectedGraph(graph.n, tuple(rows))


def identity_graph(n: int) -> DirectedGraph:
    return DirectedGraph(n, tuple(1 << i for i in range(n)))


def zero_graph(n: int) -> DirectedGraph:
    return DirectedGraph(n, (0,) * n)


def complete_graph(n: int) -> DirectedGraph:
    """
    The all-ones matrix J_n, loops included
    """
    return DirectedGraph(n, ((1 << n) - 1,) * n)


def cycle_permutation(n: int) -> Permutation:
    """
    The n-cycle (1 2 ... n)
    """
    return Permutation(tuple((i + 1) % n for i in range(n)))


def cycle_graph(n: int) -> DirectedGraph:
    return permutation_to_graph(cycle_permutation(n))


def add_edge(graph: DirectedGraph, i: int, j: int) -> DirectedGraph:
    rows = list(graph.rows)
    rows[i] |= 1 << j
    return DirectedGraph(graph.n, tuple(rows))


def enumerate_graphs(
    n: int, predicate: Optional[GraphPredicate] = None, allow_large: bool = False
) -> Iterator[DirectedGraph]:
    """
    Yield every n-graph once, in increasing order of the integer whose bit
    n*i + j is the entry (i, j). The optional predicate filters the stream.
    """
    if n > ENUMERATION_MAX_N and not allow_large:
        raise CapacityError(
            f"Full enumeration of {n}-graphs visits 2^{n * n} graphs; the limit is n = {ENUMERATION_MAX_N}"
        )
    if n > ENUMERATION_MAX_N:
        logger.warning("Enumerating 2^%d graphs on explicit request", n * n)
    full = (1 << n) - 1
    for code in range(1 << (n * n)):
        graph = DirectedGraph(n, tuple(code >> (n * i) & full for i in range(n)))
        if predicate is None or predicate(graph):
            yield graph


def enumerate_permutations(n: int) -> Iterator[Permutation]:
    """
    Permutations of 0..n-1 in lexicographic order of their image lists
    """
    for images in permutations(range(n)):
        yield Permutation(images)


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """
    Set partitions of 0..n-1 as restricted growth strings in lexicographic order
    """
    labels = [0] * n
    maxima = [0] * n
    while True:
        yield Partition(tuple(labels))
        position = n - 1
        while position > 0 and labels[position] == maxima[position - 1] + 1:
            position -= 1
        if position <= 0:
            return
        labels[position] += 1
        maxima[position] = max(maxima[position - 1], labels[position])
        for later in range(position + 1, n):
            labels[later] = 0
            maxima[later] = maxima[position]
