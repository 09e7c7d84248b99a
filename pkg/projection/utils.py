import logging
from functools import partial
from multiprocessing import Pool
from typing import Callable, List, Optional

from graphs.exceptions import CapacityError, DimensionError, UnderflowError
from graphs.models import DirectedGraph, Permutation
from graphs.utils import conjugate, enumerate_graphs
from .models import PreimageSet, ProjectionOp, StarPattern

logger = logging.getLogger(__name__)

PREIMAGE_MAX_N = 6


def subselect(graph: DirectedGraph) -> DirectedGraph:
    """
    Keep the top-left (n-1) x (n-1) block
    """
    if graph.n < 2:
        raise UnderflowError("Cannot project a graph with a single vertex")
    keep = (1 << (graph.n - 1)) - 1
    return DirectedGraph(graph.n - 1, tuple(row & keep for row in graph.rows[:-1]))


def delete_and_repair(graph: DirectedGraph) -> DirectedGraph:
    """
    Delete the last vertex and add i -> j wherever i -> last -> j existed,
    self pairs (v, v) included
    """
    if graph.n < 2:
        raise UnderflowError("Cannot project a graph with a single vertex")
    last = graph.n - 1
    keep = (1 << last) - 1
    repair = graph.rows[last] & keep
    return DirectedGraph(
        last,
        tuple(
            (row | repair if row >> last & 1 else row) & keep
            for row in graph.rows[:-1]
        ),
    )


def project(graph: DirectedGraph, op: str) -> DirectedGraph:
    if op == ProjectionOp.SUBSELECTION:
        return subselect(graph)
    if op == ProjectionOp.DELETE_AND_REPAIR:
        return delete_and_repair(graph)
    raise ValueError(f"Unknown projection {op!r}")


def project_vertex(graph: DirectedGraph, vertex: int, op: str) -> DirectedGraph:
    """
    Project out an arbitrary vertex: move it last, keeping the order of the
    others, then apply the projection
    """
    if not 0 <= vertex < graph.n:
        raise DimensionError(f"Vertex {vertex + 1} is not in a {graph.n}-graph")
    images = tuple(
        graph.n - 1 if i == vertex else (i if i < vertex else i - 1)
        for i in range(graph.n)
    )
    return project(conjugate(graph, Permutation(images)), op)


def _check_preimage_capacity(graph: DirectedGraph, allow_large: bool) -> None:
    if graph.n > PREIMAGE_MAX_N and not allow_large:
        raise CapacityError(
            f"Preimage enumeration is limited to n <= {PREIMAGE_MAX_N}, got n = {graph.n}"
        )


def _ss_patterns_for_row(graph: DirectedGraph, r: int) -> List[StarPattern]:
    return [
        StarPattern(graph.n, r, c, d, graph.rows, ())
        for c in range(1 << graph.n)
        for d in (0, 1)
    ]


def _dr_patterns_for_row(graph: DirectedGraph, r: int) -> List[StarPattern]:
    """
    For a last row r and last column c, entry (i, j) of the projection is
    forced to 1 wherever c_i and r_j are both set. Those entries need
    graph[i][j] = 1 and leave the top-left cell free; everywhere else the
    top-left block must equal the graph.
    """
    patterns = []
    for c in range(1 << graph.n):
        fixed_rows = []
        free_cells = []
        feasible = True
        for i, row in enumerate(graph.rows):
            repaired = r if c >> i & 1 else 0
            if repaired & ~row:
                feasible = False
                break
            fixed_rows.append(row & ~repaired)
            free_cells.extend((i, j) for j in range(graph.n) if repaired >> j & 1)
        if not feasible:
            continue
        for d in (0, 1):
            patterns.append(
                StarPattern(graph.n, r, c, d, tuple(fixed_rows), tuple(free_cells))
            )
    return patterns


def star_patterns(
    graph: DirectedGraph, op: str, threads: int = 1, allow_large: bool = False
) -> List[StarPattern]:
    """
    The preimage families of the graph, one per feasible (r, c, d), in
    lexicographic order of (r, c, d)
    """
    if op not in ProjectionOp.choices:
        raise ValueError(f"Unknown projection {op!r}")
    _check_preimage_capacity(graph, allow_large)
    build = _dr_patterns_for_row if op == ProjectionOp.DELETE_AND_REPAIR else _ss_patterns_for_row
    last_rows = range(1 << graph.n)
    if threads > 1:
        # Pool.map keeps the order of last_rows
        with Pool(processes=min(threads, len(last_rows))) as pool:
            chunks = pool.map(partial(build, graph), last_rows)
    else:
        chunks = [build(graph, r) for r in last_rows]
    return [pattern for chunk in chunks for pattern in chunk]


def preimages(
    graph: DirectedGraph,
    op: str,
    predicate: Optional[Callable[[DirectedGraph], bool]] = None,
    threads: int = 1,
    allow_large: bool = False,
) -> PreimageSet:
    patterns = star_patterns(graph, op, threads, allow_large)
    logger.debug("%d %s patterns over a %d-graph", len(patterns), op, graph.n)
    return PreimageSet(graph, op, tuple(patterns), predicate)


def preimages_ss(graph: DirectedGraph, predicate=None, threads: int = 1, allow_large: bool = False) -> PreimageSet:
    """
    The 2^(2n+1) graphs whose top-left block is the graph
    """
    return preimages(graph, ProjectionOp.SUBSELECTION, predicate, threads, allow_large)


def preimages_dr(graph: DirectedGraph, predicate=None, threads: int = 1, allow_large: bool = False) -> PreimageSet:
    """
    Every (n+1)-graph that deletes and repairs onto the graph, enumerated
    through the (r, c, d) census instead of a scan of all (n+1)-graphs
    """
    return preimages(graph, ProjectionOp.DELETE_AND_REPAIR, predicate, threads, allow_large)


def preimages_bruteforce(
    graph: DirectedGraph,
    op: str,
    predicate: Optional[Callable[[DirectedGraph], bool]] = None,
    allow_large: bool = False,
) -> List[DirectedGraph]:
    """
    Scan every (n+1)-graph and keep those projecting onto the graph
    """
    logger.info("Scanning all 2^%d graphs for preimages", (graph.n + 1) ** 2)
    return [
        candidate
        for candidate in enumerate_graphs(graph.n + 1, allow_large=allow_large)
        if project(candidate, op) == graph and (predicate is None or predicate(candidate))
    ]


def permutation_dr_preimages(sigma: Permutation) -> List[Permutation]:
    """
    The n+1 permutations of S_{n+1} that delete-and-repair onto sigma: the new
    element inserted right after i (for i = n, n-1, ..., 1 in 1-indexed
    terms), then the new element as a fixed point
    """
    n = sigma.n
    result = []
    for i in reversed(range(n)):
        images = list(sigma.images) + [sigma.images[i]]
        images[i] = n
        result.append(Permutation(tuple(images)))
    result.append(Permutation(sigma.images + (n,)))
    return result


def permutation_ss_preimages(sigma: Permutation) -> List[Permutation]:
    """
    Only sigma with the new element fixed keeps sigma's top-left block
    """
    return [Permutation(sigma.images + (sigma.n,))]
