"""
Text formats shared by the command line and the API.

Graph text: a first line holding n, then n rows of n characters in {0,1};
row i lists the out-edges of vertex i. Rows may instead be written as hex
bitmasks ``0x..`` where bit j is the edge i -> j.
Permutations: one-line notation ``2 3 1`` or cycle notation ``(1 2 3)(4)``,
both 1-indexed. Cycles may omit separators when every element is one digit,
e.g. ``(123)(4)``.
Rationals: ``p/q``, an integer or a decimal string, converted exactly.
Star matrices: rows of 0, 1 and *, blank-line separated, one graph family each.
"""
import re
from fractions import Fraction
from itertools import product
from pathlib import Path
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from .exceptions import GraphFormatError
from .models import DirectedGraph, Permutation

_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_graph(text: str) -> DirectedGraph:
    lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
    if not lines:
        raise GraphFormatError("Empty graph text")
    try:
        n = int(lines[0])
    except ValueError as exception:
        raise GraphFormatError(f"First line must be the vertex count, got {lines[0]!r}") from exception
    return parse_graph_rows(lines[1:], n)


def parse_graph_rows(row_texts: Sequence[str], n: Optional[int] = None) -> DirectedGraph:
    n = len(row_texts) if n is None else n
    if len(row_texts) != n:
        raise GraphFormatError(f"Expected {n} rows, got {len(row_texts)}")
    rows = []
    for index, text in enumerate(row_texts, start=1):
        text = text.strip()
        if text.lower().startswith("0x"):
            try:
                rows.append(int(text, 16))
            except ValueError as exception:
                raise GraphFormatError(f"Row {index} is not a hex bitmask: {text!r}") from exception
            continue
        text = text.replace(" ", "")
        if len(text) != n or set(text) - {"0", "1"}:
            raise GraphFormatError(f"Row {index} must be {n} characters of 0/1, got {text!r}")
        rows.append(sum(1 << j for j, char in enumerate(text) if char == "1"))
    return DirectedGraph(n, tuple(rows))


def format_graph(graph: DirectedGraph, hex_rows: bool = False) -> str:
    if hex_rows:
        body = [f"{row:#x}" for row in graph.rows]
    else:
        body = graph.row_strings()
    return "\n".join([str(graph.n), *body])


def read_graph_file(path: Union[str, Path]) -> DirectedGraph:
    try:
        text = Path(path).read_text()
    except OSError as exception:
        raise GraphFormatError(f"Cannot read graph file {path}: {exception.strerror}") from exception
    return parse_graph(text)


def parse_permutation(text: str, n: Optional[int] = None) -> Permutation:
    text = text.strip()
    if "(" in text:
        cycles = [_split_cycle(body) for body in _CYCLE.findall(text)]
        if _CYCLE.sub("", text).strip():
            raise GraphFormatError(f"Unbalanced cycle notation: {text!r}")
        elements = [element for cycle in cycles for element in cycle]
        size = n if n is not None else max(elements, default=0)
        return Permutation.from_cycles(size, [[e - 1 for e in cycle] for cycle in cycles])
    try:
        images = [int(token) - 1 for token in text.replace(",", " ").split()]
    except ValueError as exception:
        raise GraphFormatError(f"Not a permutation in one-line notation: {text!r}") from exception
    if n is not None and len(images) != n:
        raise GraphFormatError(f"Expected {n} images, got {len(images)}")
    return Permutation(tuple(images))


def _split_cycle(body: str) -> List[int]:
    tokens = body.replace(",", " ").split()
    if len(tokens) == 1 and len(tokens[0]) > 1:
        tokens = list(tokens[0])
    try:
        return [int(token) for token in tokens]
    except ValueError as exception:
        raise GraphFormatError(f"Invalid cycle ({body})") from exception


def parse_rational(value: Union[str, int, Fraction]) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise GraphFormatError(f"Expected an exact rational, got {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exception:
        raise GraphFormatError(f"Not an exact rational: {value!r}") from exception


def format_rational(value: Fraction) -> str:
    """
    Always ``p/q``, also for integers
    """
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_star_matrices(text: str) -> List[Tuple[str, ...]]:
    """
    Square matrices of ``0``, ``1`` and ``*`` separated by blank lines; lines
    starting with ``#`` are comments. Each ``*`` stands for both 0 and 1.
    """
    matrices = []
    current: List[str] = []
    for line in text.splitlines() + [""]:
        line = line.replace(" ", "").strip()
        if line.startswith("#"):
            continue
        if line:
            if set(line) - {"0", "1", "*"}:
                raise GraphFormatError(f"Star matrix rows hold 0, 1 and *, got {line!r}")
            current.append(line)
            continue
        if current:
            if any(len(row) != len(current) for row in current):
                raise GraphFormatError(f"Star matrix is not square: {current}")
            matrices.append(tuple(current))
            current = []
    return matrices


def read_star_matrix_file(path: Union[str, Path]) -> List[Tuple[str, ...]]:
    try:
        text = Path(path).read_text()
    except OSError as exception:
        raise GraphFormatError(f"Cannot read star matrix file {path}: {exception.strerror}") from exception
    return parse_star_matrices(text)


def expand_star_matrix(rows: Sequence[str]) -> Iterator[DirectedGraph]:
    """
    Every graph obtained by setting each ``*`` to 0 or 1, the first ``*``
    in row-major order varying slowest
    """
    base = [sum(1 << j for j, char in enumerate(row) if char == "1") for row in rows]
    free = [(i, j) for i, row in enumerate(rows) for j, char in enumerate(row) if char == "*"]
    for assignment in product((0, 1), repeat=len(free)):
        expanded = list(base)
        for (i, j), bit in zip(free, assignment):
            expanded[i] |= bit << j
        yield DirectedGraph(len(rows), tuple(expanded))
