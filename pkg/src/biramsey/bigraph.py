"""Bit-parallel bipartite graphs and biclique detection.

A bipartite graph lives on an X side of m row vertices and a Y side of n
column vertices.  Each row stores its neighborhood as an int bitmask over
the n columns, so neighborhood intersections, complements and popcounts are
single machine operations (Python ints grow as needed, so any n works).

Conventions used everywhere in this package:
  * rows/columns are 0-based in memory, 1-based in text files;
  * a biclique shape (s, t) always means s vertices on X and t on Y.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    """Bitmask with exactly the given indices set."""
    out = 0
    for i in indices:
        out |= 1 << i
    return out


def max_popcount_leq(cap: int) -> int:
    """Largest popcount among integers v with 0 <= v <= cap."""
    # Either keep a prefix of cap's high bits and fill everything below
    # the next set bit, or take cap itself.
    best = cap.bit_count()
    seen = 0
    for pos in range(cap.bit_length() - 1, -1, -1):
        if cap >> pos & 1:
            best = max(best, seen + pos)
            seen += 1
    return best


@dataclass(frozen=True)
class BicliqueShape:
    """Demanded complete bipartite pattern: s rows by t columns."""

    s: int
    t: int

    def __post_init__(self) -> None:
        if self.s < 1 or self.t < 1:
            raise ValueError(f"biclique shape must be >= (1,1), got ({self.s},{self.t})")

    def transpose(self) -> BicliqueShape:
        return BicliqueShape(self.t, self.s)


ShapeLike = "BicliqueShape | tuple[int, int]"


def as_shape(shape: BicliqueShape | tuple[int, int]) -> BicliqueShape:
    if isinstance(shape, BicliqueShape):
        return shape
    return BicliqueShape(*shape)


@dataclass(frozen=True)
class Biclique:
    """A concrete K_{s,t} witness: row and column index sets, sorted."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def holds_in(self, g: BipartiteGraph) -> bool:
        """Re-check the witness edge by edge against g."""
        cmask = mask_of(self.cols)
        return all(g.rows[i] & cmask == cmask for i in self.rows)


@dataclass(frozen=True)
class BipartiteGraph:
    """Immutable bipartite graph: m rows, n columns, row neighborhood masks."""

    m: int
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.m < 0 or self.n < 0:
            raise ValueError("negative dimensions")
        if len(self.rows) != self.m:
            raise ValueError(f"expected {self.m} rows, got {len(self.rows)}")
        full = self.full_mask()
        for i, r in enumerate(self.rows):
            if r < 0 or r & ~full:
                raise ValueError(f"row {i} has bits outside 0..{self.n - 1}")

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def row_degree(self, i: int) -> int:
        return self.rows[i].bit_count()

    def max_degree_x(self) -> int:
        """Maximum degree on the X side; 0 for an empty X side."""
        if self.m == 0:
            return 0
        return max(r.bit_count() for r in self.rows)

    def complement(self) -> BipartiteGraph:
        full = self.full_mask()
        return BipartiteGraph(self.m, self.n, tuple(r ^ full for r in self.rows))

    def transpose(self) -> BipartiteGraph:
        cols = [0] * self.n
        for i, r in enumerate(self.rows):
            for j in bits(r):
                cols[j] |= 1 << i
        return BipartiteGraph(self.n, self.m, tuple(cols))

    def column_degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.transpose().rows)

    def common_neighborhood(self, row_subset: Iterable[int]) -> int:
        """Bitwise AND of the selected rows; the empty selection gives all columns."""
        acc = self.full_mask()
        for i in row_subset:
            if not 0 <= i < self.m:
                raise ValueError(f"row index {i} out of range 0..{self.m - 1}")
            acc &= self.rows[i]
        return acc

    def restrict(self, m2: int, n2: int) -> BipartiteGraph:
        """Induced subgraph on the first m2 rows and first n2 columns."""
        if not (0 <= m2 <= self.m and 0 <= n2 <= self.n):
            raise ValueError(f"cannot restrict {self.m}x{self.n} to {m2}x{n2}")
        sub = (1 << n2) - 1
        return BipartiteGraph(m2, n2, tuple(r & sub for r in self.rows[:m2]))

    def is_subgraph_of(self, other: BipartiteGraph) -> bool:
        return (
            self.m == other.m
            and self.n == other.n
            and all(a & ~b == 0 for a, b in zip(self.rows, other.rows))
        )

    def neighbor_sets(self) -> list[set[int]]:
        return [set(bits(r)) for r in self.rows]


def from_neighbor_lists(m: int, n: int, lists: Sequence[Iterable[int]]) -> BipartiteGraph:
    """Build a graph from per-row column index collections (duplicates collapse)."""
    if len(lists) != m:
        raise ValueError(f"expected {m} neighbor lists, got {len(lists)}")
    rows = []
    for i, lst in enumerate(lists):
        r = 0
        for j in lst:
            if not 0 <= j < n:
                raise ValueError(f"neighbor index out of range at row {i}: column {j}")
            r |= 1 << j
        rows.append(r)
    return BipartiteGraph(m, n, tuple(rows))


def empty_graph(m: int, n: int) -> BipartiteGraph:
    return BipartiteGraph(m, n, (0,) * m)


def complete_graph(m: int, n: int) -> BipartiteGraph:
    return BipartiteGraph(m, n, ((1 << n) - 1,) * m)


def contains_biclique(
    g: BipartiteGraph, shape: BicliqueShape | tuple[int, int]
) -> Biclique | None:
    """Find K_{s,t} in g (s rows, t columns), or None.

    Enumerates s-subsets of rows in lexicographic order, carrying the running
    AND of their neighborhoods and abandoning any prefix whose common
    neighborhood drops below t.  The first witness found is therefore the
    lexicographically least (rows, cols) pair, which keeps tests and reports
    deterministic.
    """
    shape = as_shape(shape)
    s, t = shape.s, shape.t
    if s > g.m or t > g.n:
        return None

    rows = g.rows
    m = g.m
    chosen: list[int] = []

    def extend(start: int, common: int) -> Biclique | None:
        if len(chosen) == s:
            cols = []
            for j in bits(common):
                cols.append(j)
                if len(cols) == t:
                    break
            return Biclique(tuple(chosen), tuple(cols))
        # leave room for the remaining picks
        for i in range(start, m - (s - len(chosen)) + 1):
            nxt = common & rows[i]
            if nxt.bit_count() >= t:
                chosen.append(i)
                found = extend(i + 1, nxt)
                if found is not None:
                    return found
                chosen.pop()
        return None

    return extend(0, g.full_mask())


# --- text formats -----------------------------------------------------------
#
# Matrix format: first line "m n", then m lines of n characters from {0,1};
# line i column j is 1 iff edge (x_i, y_j).
# Neighbor-list format: first line "m n", then m lines of space-separated
# 1-based column indices (an empty line is an empty neighborhood).


class FormatError(ValueError):
    """Malformed graph/witness text."""


def _parse_header(line: str) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise FormatError(f"expected header 'm n', got {line!r}")
    try:
        m, n = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise FormatError(f"non-integer header {line!r}") from exc
    if m < 0 or n < 0:
        raise FormatError(f"negative dimensions in header {line!r}")
    return m, n


def format_matrix(g: BipartiteGraph) -> str:
    lines = [f"{g.m} {g.n}"]
    for r in g.rows:
        lines.append("".join("1" if r >> j & 1 else "0" for j in range(g.n)))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> BipartiteGraph:
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty matrix text")
    m, n = _parse_header(lines[0])
    if len(lines) < 1 + m:
        raise FormatError(f"expected {m} matrix lines, got {len(lines) - 1}")
    rows = []
    for i in range(m):
        line = lines[1 + i].strip()
        if len(line) != n:
            raise FormatError(f"matrix line {i + 1} has length {len(line)}, expected {n}")
        r = 0
        for j, ch in enumerate(line):
            if ch == "1":
                r |= 1 << j
            elif ch != "0":
                raise FormatError(f"bad character {ch!r} at line {i + 1} column {j + 1}")
        rows.append(r)
    return BipartiteGraph(m, n, tuple(rows))


def format_neighbor_lists(g: BipartiteGraph) -> str:
    lines = [f"{g.m} {g.n}"]
    for r in g.rows:
        lines.append(" ".join(str(j + 1) for j in bits(r)))
    return "\n".join(lines) + "\n"


def parse_neighbor_lists(text: str) -> BipartiteGraph:
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty neighbor-list text")
    m, n = _parse_header(lines[0])
    body = lines[1:]
    if len(body) < m:
        raise FormatError(f"expected {m} neighbor lines, got {len(body)}")
    rows = []
    for i in range(m):
        r = 0
        for tok in body[i].split():
            try:
                j = int(tok)
            except ValueError as exc:
                raise FormatError(f"non-integer column {tok!r} at row {i + 1}") from exc
            if not 1 <= j <= n:
                raise FormatError(f"column {j} out of range 1..{n} at row {i + 1}")
            r |= 1 << (j - 1)
        rows.append(r)
    return BipartiteGraph(m, n, tuple(rows))
