"""Deterministic graph families used as good-coloring candidates.

These are closed-form constructions whose restrictions (first rows / first
columns) are tried before any branch-and-bound search: restricting a graph
that avoids K_{s,t}, and whose complement avoids K_{u,v}, preserves both
properties, so every candidate is cheap to check and sound to use.
"""

from __future__ import annotations

from itertools import combinations

from .bigraph import BipartiteGraph, from_neighbor_lists


def single_row_columns(m: int, n: int) -> BipartiteGraph:
    """Column j adjacent exactly to row j mod m: every column has degree 1."""
    if m < 1:
        raise ValueError("need at least one row")
    rows = [0] * m
    for j in range(n):
        rows[j % m] |= 1 << j
    return BipartiteGraph(m, n, tuple(rows))


def clique_edge_incidence(r: int) -> BipartiteGraph:
    """Vertex/edge incidence of K_r: r rows, C(r,2) columns in pair-lex order.

    Two rows meet in exactly the one column naming their pair, so the graph
    is K_{2,2}-free; the columns missed by a 4-row set are the pairs inside
    the other r-4 rows.
    """
    pairs = list(combinations(range(r), 2))
    lists: list[list[int]] = [[] for _ in range(r)]
    for j, (a, b) in enumerate(pairs):
        lists[a].append(j)
        lists[b].append(j)
    return from_neighbor_lists(r, len(pairs), lists)


def good_coloring_8x15() -> BipartiteGraph:
    """An 8x15 graph that is K_{2,2}-free with K_{4,4}-free complement.

    Structure: x1..x4 share column y1 and otherwise own disjoint triples;
    x5..x8 each pick one column from every triple plus one of y14/y15 so that
    all 28 row pairs meet in exactly one column (36 edges, every 4-row union
    covers at least 12 columns).  Note this is a repaired variant of the
    published 8x15 matrix, which as printed misses one edge and fails the
    complement check (see witnesses.witness_8_15, whose verification reports
    the discrepancies).
    """
    rows = (
        (0, 1, 2, 3),
        (0, 4, 5, 6),
        (0, 7, 8, 9),
        (0, 10, 11, 12),
        (1, 4, 7, 10, 13),
        (2, 5, 8, 11, 13),
        (1, 5, 9, 12, 14),
        (3, 6, 8, 10, 14),
    )
    return from_neighbor_lists(8, 15, rows)


def projective_plane_incidence(q: int) -> BipartiteGraph:
    """Point/line incidence of the projective plane of prime order q.

    q^2+q+1 points and lines, every line has q+1 points, two lines meet in
    exactly one point: the incidence graph is K_{2,2}-free and for q >= 2 its
    complement is K_{4,4}-free (any 4 lines cover all but at most 3 points).
    Points and lines are normalized homogeneous vectors over F_q in
    lexicographic order; incidence is a zero dot product mod q.
    """
    if q < 2 or any(q % p == 0 for p in range(2, q)):
        raise ValueError(f"order must be prime, got {q}")
    vectors = []
    for a in range(q):
        for b in range(q):
            for c in range(q):
                v = (a, b, c)
                if v == (0, 0, 0):
                    continue
                first = next(x for x in v if x != 0)
                inv = pow(first, q - 2, q) if first != 1 else 1
                if tuple(x * inv % q for x in v) == v:
                    vectors.append(v)
    size = q * q + q + 1
    assert len(vectors) == size
    rows = []
    for line in vectors:
        r = 0
        for j, point in enumerate(vectors):
            if sum(a * b for a, b in zip(line, point)) % q == 0:
                r |= 1 << j
        rows.append(r)
    return BipartiteGraph(size, size, tuple(rows))
