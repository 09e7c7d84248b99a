import logging
from fractions import Fraction
from itertools import permutations
from typing import Dict, List, Sequence, Tuple

import numpy as np
import sympy

from graphs.exceptions import CapacityError
from graphs.models import DirectedGraph, Permutation
from .models import CyclePolynomial, RealMatrix

logger = logging.getLogger(__name__)

ORACLE_MAX_N = 10
DP_MAX_N = 18
RYSER_MAX_N = 24

# From VECTORISED_MIN_N to VECTORISED_MAX_N the subset DP runs on int64 numpy
# arrays. Every count is bounded by n!, which fits int64 up to n = 20.
VECTORISED_MIN_N = 11
VECTORISED_MAX_N = 20


def _check_capacity(n: int, limit: int, what: str, allow_large: bool) -> None:
    if n <= limit:
        return
    if not allow_large:
        raise CapacityError(f"{what} is limited to n <= {limit}, got n = {n}")
    logger.warning("%s above its limit on explicit request (n = %d)", what, n)


def alpha_permanent_bruteforce(
    matrix: RealMatrix, alpha: Fraction, allow_large: bool = False
) -> Fraction:
    """
    per_alpha(A) = sum over S_n of alpha^#sigma prod_i A[i][sigma(i)], by
    enumerating every permutation
    """
    _check_capacity(matrix.n, ORACLE_MAX_N, "The factorial oracle", allow_large)
    alpha = Fraction(alpha)
    total = Fraction(0)
    for images in permutations(range(matrix.n)):
        product = Fraction(1)
        for row, image in zip(matrix.entries, images):
            product *= row[image]
            if not product:
                break
        if product:
            total += alpha ** Permutation(images).cycle_count * product
    return total


def evaluate(polynomial: CyclePolynomial, alpha: Fraction) -> Fraction:
    """
    sum_k c_k alpha^k; a plain polynomial evaluation at any rational
    """
    alpha = Fraction(alpha)
    total = Fraction(0)
    for c in reversed(polynomial.coeffs):
        total = (total + c) * alpha
    return total


def cycle_polynomial(
    graph: DirectedGraph, allow_large: bool = False, engine: str = "auto"
) -> CyclePolynomial:
    """
    Count the permutations contained in the graph by number of cycles.

    Cycle covers are built one cycle at a time, each new cycle anchored at the
    smallest vertex not yet covered, so every cover is counted exactly once.
    ``engine`` picks the pure-Python or the numpy kernel; both are exact and
    return identical coefficients.
    """
    _check_capacity(graph.n, DP_MAX_N, "The cycle-cover DP", allow_large)
    if select_engine(graph.n, engine) == "numpy":
        coeffs = _cycle_cover_counts_vectorised(graph)
    else:
        coeffs = _cycle_cover_counts(graph)
    return CyclePolynomial(graph.n, tuple(coeffs))


def select_engine(n: int, engine: str = "auto") -> str:
    """
    The kernel that runs the DP for an n-graph: numpy between
    VECTORISED_MIN_N and VECTORISED_MAX_N, pure Python elsewhere
    """
    if engine == "auto":
        return "numpy" if VECTORISED_MIN_N <= n <= VECTORISED_MAX_N else "python"
    if engine == "numpy" and n > VECTORISED_MAX_N:
        raise CapacityError(f"The int64 kernel is exact up to n = {VECTORISED_MAX_N}, got n = {n}")
    if engine not in ("python", "numpy"):
        raise ValueError(f"Unknown engine {engine!r}")
    return engine


def _cycle_counts_by_vertex_set(graph: DirectedGraph) -> Dict[int, int]:
    """
    Map each vertex set C to the number of directed cycles through exactly C
    """
    n = graph.n
    rows = graph.rows
    cycles: Dict[int, int] = {}
    for anchor in range(n):
        anchor_bit = 1 << anchor
        higher = [w for w in range(anchor + 1, n)]
        # paths[mask] maps the end vertex of a path leaving the anchor through
        # exactly the higher vertices in mask to the number of such paths
        paths: Dict[int, Dict[int, int]] = {0: {anchor: 1}}
        for mask in range(1 << len(higher)):
            ends = paths.pop(mask, None)
            if not ends:
                continue
            vertex_set = (mask << (anchor + 1)) | anchor_bit
            for v, count in ends.items():
                if rows[v] & anchor_bit:
                    cycles[vertex_set] = cycles.get(vertex_set, 0) + count
                for bit, w in enumerate(higher):
                    if not mask >> bit & 1 and rows[v] >> w & 1:
                        target = paths.setdefault(mask | 1 << bit, {})
                        target[w] = target.get(w, 0) + count
    return cycles


def _cycle_cover_counts(graph: DirectedGraph) -> List[int]:
    n = graph.n
    full = (1 << n) - 1
    cycles = _cycle_counts_by_vertex_set(graph)
    covers: Dict[int, List[int]] = {0: [1] + [0] * n}
    for covered in range(full):
        counts = covers.pop(covered, None)
        if counts is None:
            continue
        free = full & ~covered
        anchor_bit = free & -free
        rest = free ^ anchor_bit
        sub = rest
        while True:
            cycle_count = cycles.get(sub | anchor_bit)
            if cycle_count:
                target = covers.setdefault(covered | sub | anchor_bit, [0] * (n + 1))
                for k in range(n):
                    if counts[k]:
                        target[k + 1] += cycle_count * counts[k]
            if not sub:
                break
            sub = (sub - 1) & rest
    return covers.get(full, [0] * (n + 1))[1:]


def _adjacency(graph: DirectedGraph) -> np.ndarray:
    return np.array(graph.to_matrix(), dtype=np.int64)


def _cycle_counts_vectorised(graph: DirectedGraph) -> np.ndarray:
    n = graph.n
    adjacency = _adjacency(graph)
    cycles = np.zeros(1 << n, dtype=np.int64)
    for anchor in range(n):
        m = n - 1 - anchor
        masks = np.arange(1 << m, dtype=np.int64)
        popcounts = np.zeros(1 << m, dtype=np.int64)
        for bit in range(m):
            popcounts += (masks >> bit) & 1
        paths = np.zeros((1 << m, n), dtype=np.int64)
        paths[0, anchor] = 1
        for layer in range(m + 1):
            layer_masks = masks[popcounts == layer]
            block = paths[layer_masks]
            cycles[(layer_masks << (anchor + 1)) | (1 << anchor)] = block @ adjacency[:, anchor]
            if layer == m:
                break
            extended = block @ adjacency
            for bit in range(m):
                w = anchor + 1 + bit
                open_ = ((layer_masks >> bit) & 1) == 0
                paths[layer_masks[open_] | (1 << bit), w] += extended[open_, w]
    return cycles


def _cycle_cover_counts_vectorised(graph: DirectedGraph) -> List[int]:
    n = graph.n
    full = (1 << n) - 1
    cycles = _cycle_counts_vectorised(graph)
    indices = np.arange(1 << (n - 1), dtype=np.int64)
    bit_columns = [(indices >> t) & 1 for t in range(n - 1)]
    covers = np.zeros((1 << n, n + 1), dtype=np.int64)
    covers[0, 0] = 1
    for covered in range(full):
        counts = covers[covered]
        if not counts.any():
            continue
        free = full ^ covered
        anchor_bit = free & -free
        rest = free ^ anchor_bit
        positions = [b for b in range(n) if rest >> b & 1]
        size = 1 << len(positions)
        subsets = np.zeros(size, dtype=np.int64)
        for t, position in enumerate(positions):
            subsets |= bit_columns[t][:size] << position
        cycle_sets = subsets | anchor_bit
        weights = cycles[cycle_sets]
        present = np.nonzero(weights)[0]
        if not present.size:
            continue
        covers[covered | cycle_sets[present], 1:] += np.outer(weights[present], counts[:-1])
    return [int(c) for c in covers[full, 1:]]


def ryser_permanent(graph: DirectedGraph, allow_large: bool = False) -> int:
    """
    Ordinary permanent of the 0/1 matrix by Ryser's inclusion-exclusion:
    per(A) = (-1)^n sum over column sets S of (-1)^|S| prod_i |row_i & S|
    """
    _check_capacity(graph.n, RYSER_MAX_N, "Ryser's formula", allow_large)
    n = graph.n
    total = 0
    for columns in range(1, 1 << n):
        product = 1
        for row in graph.rows:
            product *= bin(row & columns).count("1")
            if not product:
                break
        if product:
            total += -product if (n - bin(columns).count("1")) % 2 else product
    return total


def contains_some_permutation(graph: DirectedGraph) -> bool:
    return ryser_permanent(graph) > 0


def rational_determinant(rows: Sequence[Sequence]) -> Fraction:
    """
    Exact determinant over the rationals
    """
    determinant = sympy.Matrix([[sympy.Rational(str(Fraction(v))) for v in row] for row in rows]).det(
        method="bareiss"
    )
    determinant = sympy.Rational(determinant)
    return Fraction(int(determinant.p), int(determinant.q))


def stirling_cycle_numbers(n: int) -> Tuple[int, ...]:
    """
    Unsigned Stirling numbers of the first kind c(n, k) for k = 1..n, i.e. the
    cycle polynomial of the complete graph J_n
    """
    row = [1]
    for m in range(n):
        row = [
            (m * row[k] if k <= m else 0) + (row[k - 1] if k else 0)
            for k in range(m + 2)
        ]
    return tuple(row[1:])
