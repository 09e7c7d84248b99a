from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Sequence, Tuple

from .exceptions import CapacityError, DimensionError, GraphFormatError

MAX_VERTICES = 64


@dataclass(frozen=True)
class DirectedGraph:
    """
    Simple directed graph on vertices 0..n-1, self-loops allowed.
    Row i is a bitmask: bit j set means the edge i -> j is present.
    """

    n: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise CapacityError(
                f"Graphs must have between 1 and {MAX_VERTICES} vertices, got {self.n}"
            )
        if len(self.rows) != self.n:
            raise DimensionError(f"Expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for row in self.rows:
            if row < 0 or row & ~full:
                raise GraphFormatError(f"Row {row:#x} sets bits outside 0..{self.n - 1}")

    def __str__(self) -> str:
        return "\n".join(self.row_strings())

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> "DirectedGraph":
        n = len(matrix)
        rows = []
        for i, entries in enumerate(matrix):
            if len(entries) != n:
                raise DimensionError(f"Row {i + 1} has {len(entries)} entries, expected {n}")
            rows.append(sum(1 << j for j, value in enumerate(entries) if value))
        return cls(n, tuple(rows))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def edge_count(self) -> int:
        """
        Number of edges #G, loops included
        """
        return sum(bin(row).count("1") for row in self.rows)

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def out_degree(self, i: int) -> int:
        return bin(self.rows[i]).count("1")

    def column(self, j: int) -> int:
        """
        Bitmask of the vertices i with an edge i -> j
        """
        return sum(1 << i for i, row in enumerate(self.rows) if row >> j & 1)

    def to_matrix(self) -> List[List[int]]:
        return [[row >> j & 1 for j in range(self.n)] for row in self.rows]

    def row_strings(self) -> List[str]:
        return ["".join(str(row >> j & 1) for j in range(self.n)) for row in self.rows]


@dataclass(frozen=True)
class Permutation:
    """
    Bijection on 0..n-1 stored as its image list, images[i] = sigma(i).
    The cycle decomposition is computed once and cached.
    """

    images: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise GraphFormatError(f"{list(self.images)} is not a bijection on 0..n-1")

    def __str__(self) -> str:
        return "".join(
            "(" + " ".join(str(i + 1) for i in cycle) + ")" for cycle in self.cycles
        )

    def __call__(self, i: int) -> int:
        return self.images[i]

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """
        Build from 0-indexed cycles; elements not mentioned are fixed points
        """
        images = list(range(n))
        seen = set()
        for cycle in cycles:
            for position, element in enumerate(cycle):
                if element in seen or not 0 <= element < n:
                    raise GraphFormatError(f"Invalid or repeated element {element + 1}")
                seen.add(element)
                images[element] = cycle[(position + 1) % len(cycle)]
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    @cached_property
    def cycles(self) -> Tuple[Tuple[int, ...], ...]:
        """
        Disjoint cycles, each starting at its smallest element, ordered by it
        """
        visited = [False] * self.n
        cycles = []
        for start in range(self.n):
            if visited[start]:
                continue
            cycle = []
            element = start
            while not visited[element]:
                visited[element] = True
                cycle.append(element)
                element = self.images[element]
            cycles.append(tuple(cycle))
        return tuple(cycles)

    @property
    def cycle_count(self) -> int:
        return len(self.cycles)

    def inverse(self) -> "Permutation":
        inverse = [0] * self.n
        for i, image in enumerate(self.images):
            inverse[image] = i
        return Permutation(tuple(inverse))

    def compose(self, other: "Permutation") -> "Permutation":
        """
        The permutation i -> self(other(i))
        """
        if other.n != self.n:
            raise DimensionError(f"Cannot compose permutations of sizes {self.n} and {other.n}")
        return Permutation(tuple(self.images[image] for image in other.images))

    def conjugate_by(self, tau: "Permutation") -> "Permutation":
        """
        tau sigma tau^-1, the same cycle type with relabelled elements
        """
        return tau.compose(self).compose(tau.inverse())


@dataclass(frozen=True)
class Partition:
    """
    Set partition of 0..n-1 held as its restricted growth string:
    labels[i] is the block index of i, blocks numbered by first appearance.
    """

    labels: Tuple[int, ...]

    def __post_init__(self):
        highest = -1
        for label in self.labels:
            if label < 0 or label > highest + 1:
                raise GraphFormatError(f"{list(self.labels)} is not a restricted growth string")
            highest = max(highest, label)

    def __str__(self) -> str:
        return "".join(
            "{" + " ".join(str(i + 1) for i in block) + "}" for block in self.blocks
        )

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "Partition":
        labels = [-1] * n
        for index, block in enumerate(sorted(sorted(block) for block in blocks)):
            for element in block:
                if not 0 <= element < n or labels[element] != -1:
                    raise GraphFormatError(f"Invalid or repeated element {element + 1}")
                labels[element] = index
        if -1 in labels:
            raise GraphFormatError("Blocks do not cover every element")
        return cls(tuple(labels))

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def blocks(self) -> Tuple[Tuple[int, ...], ...]:
        blocks: List[List[int]] = []
        for element, label in enumerate(self.labels):
            if label == len(blocks):
                blocks.append([])
            blocks[label].append(element)
        return tuple(tuple(block) for block in blocks)

    @property
    def block_sizes(self) -> Tuple[int, ...]:
        return tuple(len(block) for block in self.blocks)

    @property
    def block_count(self) -> int:
        return len(self.blocks)
