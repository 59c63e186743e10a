"""Published lower-bound colorings and machine checking of their claimed properties.

Each witness record bundles a concrete bipartite graph, the two biclique
shapes it is supposed to avoid (one in the graph, one in the complement),
and a list of claims about neighborhood sizes taken verbatim from the
source.  Verification recomputes everything; a claim that fails to match is
reported as refuted ("paper-discrepancy"), never raised, because the verdict
that matters is whether the coloring is good.

Claims are written in a small closed expression language so they survive a
round trip through witness files:

    pairwise_meet(ROWS)        |N(x_i) & N(x_j)| for every pair in ROWS
    degree(ROWS)               |N(x_i)| for every row in ROWS
    union(ROWS)                |union of N(x_i) over ROWS|
    union_drop_one(ROWS)       the union over ROWS minus each single row
    union_choose(k, ROWS)      the union over every k-subset of ROWS

    ROWS = "all" or "x3..x8" or "x1,x4,x7"   (1-based row names)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .bigraph import (
    BicliqueShape,
    BipartiteGraph,
    FormatError,
    bits,
    contains_biclique,
    format_neighbor_lists,
    from_neighbor_lists,
    parse_neighbor_lists,
)
from .constructions import single_row_columns
from . import bigraph


@dataclass(frozen=True)
class Claim:
    """A named, machine-checkable size claim: expr evaluates to expected everywhere."""

    name: str
    expr: str
    expected: int


@dataclass(frozen=True)
class ClaimOutcome:
    name: str
    expr: str
    expected: int
    computed: dict[str, int]
    confirmed: bool

    @property
    def verdict(self) -> str:
        return "confirmed" if self.confirmed else "refuted"

    def deviations(self) -> dict[str, int]:
        return {k: v for k, v in self.computed.items() if v != self.expected}

    def summary(self) -> str:
        if self.confirmed:
            return f"= {self.expected} (all {len(self.computed)} instances)"
        devs = self.deviations()
        shown = "; ".join(f"{k}={v}" for k, v in list(devs.items())[:6])
        more = "" if len(devs) <= 6 else f" (+{len(devs) - 6} more)"
        return f"expected {self.expected}, deviations: {shown}{more}"


@dataclass(frozen=True)
class WitnessRecord:
    name: str
    graph: BipartiteGraph
    avoid_in_g: BicliqueShape
    avoid_in_complement: BicliqueShape
    claims: tuple[Claim, ...]
    source: str


@dataclass(frozen=True)
class PropertyReport:
    witness_name: str
    graph_free: bool
    complement_free: bool
    avoid_in_g: BicliqueShape
    avoid_in_complement: BicliqueShape
    claims: tuple[ClaimOutcome, ...]

    @property
    def good_coloring(self) -> bool:
        # independent of per-claim verdicts by construction
        return self.graph_free and self.complement_free

    def render(self) -> str:
        s1, s2 = self.avoid_in_g, self.avoid_in_complement
        lines = [
            f"witness {self.witness_name}:",
            f"  K_{{{s1.s},{s1.t}}}-free in G: {'yes' if self.graph_free else 'NO'}",
            f"  K_{{{s2.s},{s2.t}}}-free in complement: {'yes' if self.complement_free else 'NO'}",
        ]
        for c in self.claims:
            flag = "" if c.confirmed else " (paper-discrepancy)"
            lines.append(f"  claim {c.name} {c.expr}: {c.summary()} -> {c.verdict}{flag}")
        lines.append(f"  good-coloring: {'true' if self.good_coloring else 'false'}")
        return "\n".join(lines)


# --- claim expression evaluation ---------------------------------------------

_EXPR_RE = re.compile(
    r"^(?P<fn>pairwise_meet|degree|union|union_drop_one|union_choose)\((?P<args>[^)]*)\)$"
)
_RANGE_RE = re.compile(r"^x(\d+)\.\.x(\d+)$")
_LIST_RE = re.compile(r"^x\d+(,x\d+)*$")


def _parse_rows(token: str, m: int) -> list[int]:
    token = token.strip()
    if token == "all":
        return list(range(m))
    rmatch = _RANGE_RE.match(token)
    if rmatch:
        lo, hi = int(rmatch.group(1)), int(rmatch.group(2))
        rows = list(range(lo - 1, hi))
    elif _LIST_RE.match(token):
        rows = [int(t[1:]) - 1 for t in token.split(",")]
    else:
        raise FormatError(f"bad row selector {token!r}")
    if not rows or any(not 0 <= r < m for r in rows):
        raise FormatError(f"row selector {token!r} out of range for m={m}")
    return rows


def _row_name(i: int) -> str:
    return f"x{i + 1}"


def evaluate_claim(claim: Claim, g: BipartiteGraph) -> ClaimOutcome:
    """Compute every instance of the claim on g and compare with the expectation."""
    match = _EXPR_RE.match(claim.expr.replace(" ", ""))
    if not match:
        raise FormatError(f"bad claim expression {claim.expr!r}")
    fn, args = match.group("fn"), match.group("args")
    computed: dict[str, int] = {}
    if fn == "union_choose":
        k_token, rows_token = args.split(",", 1)
        k = int(k_token)
        rows = _parse_rows(rows_token, g.m)
        for subset in combinations(rows, k):
            acc = 0
            for i in subset:
                acc |= g.rows[i]
            computed["{" + ",".join(_row_name(i) for i in subset) + "}"] = acc.bit_count()
    else:
        rows = _parse_rows(args, g.m)
        if fn == "pairwise_meet":
            for i, j in combinations(rows, 2):
                computed[f"({_row_name(i)},{_row_name(j)})"] = (
                    g.rows[i] & g.rows[j]
                ).bit_count()
        elif fn == "degree":
            for i in rows:
                computed[_row_name(i)] = g.rows[i].bit_count()
        elif fn == "union":
            acc = 0
            for i in rows:
                acc |= g.rows[i]
            computed["union"] = acc.bit_count()
        elif fn == "union_drop_one":
            for drop in rows:
                acc = 0
                for i in rows:
                    if i != drop:
                        acc |= g.rows[i]
                computed[f"drop {_row_name(drop)}"] = acc.bit_count()
    confirmed = all(v == claim.expected for v in computed.values())
    return ClaimOutcome(claim.name, claim.expr, claim.expected, computed, confirmed)


def verify_witness(record: WitnessRecord) -> PropertyReport:
    """Freeness verdicts for both shapes plus every claim recomputed; never raises on refutation."""
    g = record.graph
    graph_free = contains_biclique(g, record.avoid_in_g) is None
    complement_free = contains_biclique(g.complement(), record.avoid_in_complement) is None
    outcomes = tuple(evaluate_claim(c, g) for c in record.claims)
    return PropertyReport(
        record.name,
        graph_free,
        complement_free,
        record.avoid_in_g,
        record.avoid_in_complement,
        outcomes,
    )


# --- the published constructions ---------------------------------------------

_SHAPE_22 = BicliqueShape(2, 2)
_SHAPE_44 = BicliqueShape(4, 4)

# 5x25: five degree-7 neighborhoods meeting pairwise in one column (0-based).
_ROWS_5X25 = (
    (0, 1, 2, 3, 4, 5, 6),
    (0, 7, 8, 9, 10, 11, 12),
    (1, 7, 13, 14, 15, 16, 17),
    (2, 8, 13, 18, 19, 20, 21),
    (3, 9, 14, 18, 22, 23, 24),
)

# 7x21: seven degree-6 neighborhoods, column k named by the k-th pair of rows.
_ROWS_7X21 = (
    (0, 1, 2, 3, 4, 5),
    (0, 6, 7, 8, 9, 10),
    (1, 6, 11, 12, 13, 14),
    (2, 7, 11, 15, 16, 17),
    (3, 8, 12, 15, 18, 19),
    (4, 9, 13, 16, 18, 20),
    (5, 10, 14, 17, 19, 20),
)

# 8x15 coloring, transcribed literally from the published 15x8 block
# (display row j, column i) = edge (x_i, y_j).  Transcribed as printed; the
# claims attached below are checked against it, not assumed.
_BLOCK_8X15 = (
    "11110000",
    "10001010",
    "10000101",
    "10000000",
    "01001000",
    "01000110",
    "01000001",
    "00101000",
    "00100100",
    "00100010",
    "00011001",
    "00010100",
    "00010010",
    "00001100",
    "00000011",
)


def witness_5_25() -> WitnessRecord:
    graph = from_neighbor_lists(5, 25, _ROWS_5X25)
    claims = (
        Claim("pairwise-meet", "pairwise_meet(all)", 1),
        Claim("cover-minus-one", "union_drop_one(all)", 22),
    )
    return WitnessRecord(
        "paper-5x25",
        graph,
        _SHAPE_22,
        _SHAPE_44,
        claims,
        "published lower-bound coloring for BR_5(K_{2,2},K_{4,4}) >= 26",
    )


def witness_7_21() -> WitnessRecord:
    graph = from_neighbor_lists(7, 21, _ROWS_7X21)
    claims = (
        Claim("E1", "pairwise_meet(all)", 1),
        Claim("E2", "union_choose(4, all)", 18),
    )
    return WitnessRecord(
        "paper-7x21",
        graph,
        _SHAPE_22,
        _SHAPE_44,
        claims,
        "published good coloring of K_{7,21} avoiding (K_{2,2},K_{4,4})",
    )


def witness_8_15() -> WitnessRecord:
    rows = []
    for i in range(8):
        rows.append([j for j in range(15) if _BLOCK_8X15[j][i] == "1"])
    graph = from_neighbor_lists(8, 15, rows)
    claims = (
        Claim("P1", "pairwise_meet(all)", 1),
        Claim("P2", "degree(x1..x4)", 4),
        Claim("P3", "degree(x5..x8)", 5),
        Claim("P4", "union(x1..x4)", 13),
        Claim("P5", "union(x5..x8)", 14),
        Claim("M1", "union_choose(2, x1..x4)", 7),
        Claim("M2", "union_choose(3, x1..x4)", 10),
        Claim("M3", "union_choose(2, x5..x8)", 9),
        Claim("M4", "union_choose(3, x5..x8)", 12),
    )
    return WitnessRecord(
        "paper-8x15",
        graph,
        _SHAPE_22,
        _SHAPE_44,
        claims,
        "published 8x15 matrix coloring for BR_8(K_{2,2},K_{4,4}) >= 16",
    )


BUILTIN_WITNESSES: dict[str, Callable[[], WitnessRecord]] = {
    "paper-5x25": witness_5_25,
    "paper-7x21": witness_7_21,
    "paper-8x15": witness_8_15,
}


def nonexistence_family(m: int, n: int) -> BipartiteGraph:
    """A good coloring of K_{m,n} for m <= 4 and every n >= 1.

    For m <= 3 the empty graph works: the complement cannot host 4 X
    vertices.  For m = 4, give every column degree 1 (column j meets row
    j mod 4): no two columns share two rows, and no column is disjoint from
    all four rows, so the complement has no K_{4,4} either.
    """
    if not 1 <= m <= 4:
        raise ValueError(f"nonexistence family is specific to 1 <= m <= 4, got m={m}")
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    if m <= 3:
        return bigraph.empty_graph(m, n)
    return single_row_columns(m, n)


# --- witness files ------------------------------------------------------------
#
# Neighbor-list format with a leading comment header:
#   # witness: <name>
#   # avoid-in-g: s t
#   # avoid-in-complement: s t
#   # source: <free text>
#   # claim: <name> <expr> = <expected>     (0 or more)

_CLAIM_LINE_RE = re.compile(r"^#\s*claim:\s*(\S+)\s+(\S+\([^)]*\))\s*=\s*(-?\d+)\s*$")


def format_witness(record: WitnessRecord) -> str:
    lines = [
        f"# witness: {record.name}",
        f"# avoid-in-g: {record.avoid_in_g.s} {record.avoid_in_g.t}",
        f"# avoid-in-complement: {record.avoid_in_complement.s} {record.avoid_in_complement.t}",
        f"# source: {record.source}",
    ]
    for c in record.claims:
        lines.append(f"# claim: {c.name} {c.expr} = {c.expected}")
    return "\n".join(lines) + "\n" + format_neighbor_lists(record.graph)


def parse_witness(text: str) -> WitnessRecord:
    header: dict[str, str] = {}
    claims: list[Claim] = []
    body: list[str] = []
    for line in text.splitlines():
        if line.startswith("#"):
            cmatch = _CLAIM_LINE_RE.match(line)
            if cmatch:
                claims.append(Claim(cmatch.group(1), cmatch.group(2), int(cmatch.group(3))))
                continue
            if ":" in line:
                key, _, value = line[1:].partition(":")
                header[key.strip()] = value.strip()
            continue
        body.append(line)
    graph = parse_neighbor_lists("\n".join(body))
    name = header.get("witness", "unnamed")
    try:
        s1 = BicliqueShape(*(int(v) for v in header["avoid-in-g"].split()))
        s2 = BicliqueShape(*(int(v) for v in header["avoid-in-complement"].split()))
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"missing or malformed avoid-in-* header: {exc}") from exc
    record = WitnessRecord(name, graph, s1, s2, tuple(claims), header.get("source", ""))
    for claim in record.claims:
        evaluate_claim(claim, graph)  # validates expressions against dimensions
    return record
