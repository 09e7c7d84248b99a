from dataclasses import dataclass
from typing import Callable, Iterator, Optional, Tuple

from graphs.models import DirectedGraph


class ProjectionOp:
    """
    Names of the two projections from (n+1)-graphs to n-graphs
    """

    SUBSELECTION = "ss"
    DELETE_AND_REPAIR = "dr"

    choices = (SUBSELECTION, DELETE_AND_REPAIR)


@dataclass(frozen=True)
class StarPattern:
    """
    Family of (n+1)-graphs sharing a last row ``r``, last column ``c`` and
    corner ``d``. The top-left block equals ``fixed_rows`` except on
    ``free_cells``, which may each be 0 or 1.
    """

    n: int
    r: int
    c: int
    d: int
    fixed_rows: Tuple[int, ...]
    free_cells: Tuple[Tuple[int, int], ...]

    def __str__(self) -> str:
        free = set(self.free_cells)
        lines = []
        for i in range(self.n + 1):
            chars = []
            for j in range(self.n + 1):
                if (i, j) in free:
                    chars.append("*")
                elif i == self.n:
                    chars.append(str(self.d if j == self.n else self.r >> j & 1))
                elif j == self.n:
                    chars.append(str(self.c >> i & 1))
                else:
                    chars.append(str(self.fixed_rows[i] >> j & 1))
            lines.append("".join(chars))
        return "\n".join(lines)

    @property
    def size(self) -> int:
        return 1 << len(self.free_cells)

    def expand(self) -> Iterator[DirectedGraph]:
        """
        Members in increasing order of the free-cell assignment, the first
        free cell (row-major) being the lowest bit
        """
        border = tuple((self.c >> i & 1) << self.n for i in range(self.n))
        last_row = self.r | self.d << self.n
        for assignment in range(self.size):
            rows = list(self.fixed_rows)
            for bit, (i, j) in enumerate(self.free_cells):
                if assignment >> bit & 1:
                    rows[i] |= 1 << j
            yield DirectedGraph(
                self.n + 1,
                tuple(row | extra for row, extra in zip(rows, border)) + (last_row,),
            )


@dataclass(frozen=True)
class PreimageSet:
    """
    The (n+1)-graphs that project onto ``base`` under ``op``, held as star
    patterns and expanded lazily. ``predicate`` optionally filters members.
    """

    base: DirectedGraph
    op: str
    patterns: Tuple[StarPattern, ...]
    predicate: Optional[Callable[[DirectedGraph], bool]] = None

    def __iter__(self) -> Iterator[DirectedGraph]:
        for pattern in self.patterns:
            for member in pattern.expand():
                if self.predicate is None or self.predicate(member):
                    yield member

    @property
    def level(self) -> int:
        return self.base.n + 1

    def count(self) -> int:
        if self.predicate is None:
            return sum(pattern.size for pattern in self.patterns)
        return sum(1 for _ in self)
