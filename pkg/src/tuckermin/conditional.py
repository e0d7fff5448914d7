"""Faster detectors that are only guaranteed minimal when their type is the
globally smallest obstruction.

Each returns a :class:`DetectorOutcome`. ``superseded`` means the scan hit a
configuration proving that a pattern of another type, no larger than what
this detector could still report, exists; ``superseded_by`` lists the type(s)
that configuration proves (a set with two tags means "one of these").
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations, permutations

from .bigraph import BipartiteGraph, Side, _bfs_layers, _induced_matching, _walk_back, iter_bits, lowest_bit
from .patterns import TuckerWitness, certify

__all__ = [
    "DetectorOutcome",
    "find_type3_conditional",
    "find_type4_conditional",
    "find_type5_conditional",
    "cross_edge_case",
]

log = logging.getLogger(__name__)

FOUND = "found"
NOT_FOUND = "not-found"
SUPERSEDED = "superseded"


@dataclass(frozen=True)
class DetectorOutcome:
    status: str
    witness: TuckerWitness | None = None
    superseded_by: frozenset[str] = field(default_factory=frozenset)
    detail: str = ""

    def __post_init__(self) -> None:
        if self.status == FOUND and self.witness is None:
            raise ValueError("found outcome without a witness")
        if self.status == SUPERSEDED and not self.superseded_by:
            raise ValueError("superseded outcome without superseding types")

    @property
    def found(self) -> bool:
        return self.status == FOUND

    @property
    def size(self) -> float:
        return self.witness.size if self.witness is not None else float("inf")


def _type3_phase1(G: BipartiteGraph) -> TuckerWitness | None:
    """A claw-shaped III_1 centered at column ``u``, found via an induced
    matching in the subgraph on ``N(u) - N(x)`` and ``C - N(w)``."""
    all_cols = (1 << G.n) - 1
    for w in range(G.m):
        nw = G.row_adj[w]
        other = all_cols & ~nw
        if not other:
            continue
        for x, u in permutations(iter_bits(nw), 2):
            U = G.col_adj[u] & ~G.col_adj[x]
            if U.bit_count() < 2:
                continue
            hit = _induced_matching(G.row_adj, U, other)
            if hit is not None:
                r1, c1, r2, c2 = hit
                return certify(G, [w, r1, r2], [x, u, c1, c2], "III")
    return None


def find_type3_conditional(G: BipartiteGraph) -> DetectorOutcome:
    """Smallest type III subgraph, provided no type I or V subgraph of equal
    or smaller size exists.

    Phase one looks for III_1 directly. Phase two grows, for each edge
    ``{x, w}`` and candidate first column ``y``, BFS layers from ``y`` through
    ``D = N_2(w) - N(x)`` and ``N(w) - {x}``, and closes the path at the first
    odd layer that meets a row adjacent to a suitable final column ``y2``.
    """
    w1 = _type3_phase1(G)
    if w1 is not None:
        return DetectorOutcome(FOUND, w1, detail="phase 1")

    best_i: int | None = None
    best: tuple[list[int], list[int]] | None = None
    rejected: set[str] = set()
    for w in range(G.m):
        nw = G.row_adj[w]
        # rows at distance exactly two from w
        n2 = 0
        for c in iter_bits(nw):
            n2 |= G.col_adj[c]
        n2 &= ~(1 << w)
        for x in iter_bits(nw):
            D = n2 & ~G.col_adj[x]
            if not D:
                continue
            ND = 0
            for d in iter_bits(D):
                ND |= G.row_adj[d]
            Y = ND & ~nw
            inner_cols = nw & ~(1 << x)
            for y in iter_bits(Y):
                limit = None if best_i is None else best_i - 1
                layers = _bfs_layers(G, Side.WHITE, y, D, inner_cols | (1 << y), max_depth=limit)
                if len(layers) < 4:
                    continue
                D1 = layers[1]
                Yp = [yp for yp in iter_bits(Y) if D1 & ~G.col_adj[yp]]
                NYp = 0
                for yp in Yp:
                    NYp |= G.col_adj[yp]
                Dp = D & NYp
                i = next((i for i in range(3, len(layers), 2) if layers[i] & Dp), None)
                if i is None or (best_i is not None and i >= best_i):
                    continue
                di = lowest_bit(layers[i] & Dp)
                yp = next(c for c in Yp if (G.col_adj[c] >> di) & 1)
                path = _walk_back(G, Side.WHITE, layers, i, di)  # y, d_1, ..., d_i
                d1 = path[1]
                if G.has_edge(d1, yp):
                    rejected.update(("I",) if i >= 5 else ("I", "V"))
                    log.debug("type III candidate rejected at i=%d (x=%d w=%d y=%d)", i, x, w, y)
                    continue
                best_i = i
                rows = [w] + path[1::2]
                cols = [x, yp] + path[0::2]
                best = (rows, cols)
    if best is not None:
        return DetectorOutcome(FOUND, certify(G, best[0], best[1], "III"), detail="phase 2")
    if rejected:
        return DetectorOutcome(SUPERSEDED, superseded_by=frozenset(rejected))
    return DetectorOutcome(NOT_FOUND)


def cross_edge_case(G: BipartiteGraph, a: int, b: int, c: int, u: int, v: int, w: int) -> tuple[str, str]:
    """Which case of the cross-edge analysis the ten-vertex spider falls in.

    Legs are ``x-a-u``, ``y-b-v``, ``z-c-w`` with hub ``d``; cross edges are
    the six row/column pairs ``{a,v},{a,w},{b,u},{b,w},{c,u},{c,v}``.
    Returns (case name, tag of the pattern the case guarantees).
    """
    legs = ((a, u), (b, v), (c, w))
    present = [
        (r, col)
        for i, (r, _) in enumerate(legs)
        for j, (_, col) in enumerate(legs)
        if i != j and G.has_edge(r, col)
    ]
    if not present:
        return "none", "IV"
    if len(present) == 1:
        return "one", "III"
    rows_used = [r for r, _ in present]
    cols_used = [col for _, col in present]
    if len(set(rows_used)) < len(rows_used):
        return "two-meeting-left", "III"
    if len(set(cols_used)) < len(cols_used):
        return "two-meeting-right", "III"
    if len(present) == 2:
        return "two-disjoint", "III"
    return "three-disjoint", "I"


def _distinct_reps(sets: tuple[int, int, int]) -> tuple[int, int, int] | None:
    """Pairwise distinct representatives, smallest index first."""
    for p in iter_bits(sets[0]):
        for q in iter_bits(sets[1] & ~(1 << p)):
            rest = sets[2] & ~(1 << p) & ~(1 << q)
            if rest:
                return p, q, lowest_bit(rest)
    return None


def find_type4_conditional(G: BipartiteGraph) -> DetectorOutcome:
    """A type IV subgraph, or a report that a smaller type I or III exists.

    For columns ``x, y, z`` the rows private to each (``A, B, C``), the rows
    seeing none of them (``D``), and the columns reachable from the private
    rows (``U, V, W``) determine a candidate spider per hub ``d``.
    """
    if G.n < 6 or G.m < 4:
        return DetectorOutcome(NOT_FOUND)
    N = G.col_adj
    R = G.row_adj
    all_rows = (1 << G.m) - 1
    for x, y, z in combinations(range(G.n), 3):
        nx, ny, nz = N[x], N[y], N[z]
        A = nx & ~(ny | nz)
        B = ny & ~(nx | nz)
        C = nz & ~(nx | ny)
        if not (A and B and C):
            continue
        D = all_rows & ~(nx | ny | nz)
        if not D:
            continue
        xyz = (1 << x) | (1 << y) | (1 << z)
        U = V = W = 0
        for r in iter_bits(A):
            U |= R[r]
        for r in iter_bits(B):
            V |= R[r]
        for r in iter_bits(C):
            W |= R[r]
        U &= ~xyz
        V &= ~xyz
        W &= ~xyz
        if not (U and V and W):
            continue
        # hubs need a neighbor in each of U, V, W
        for S in (U, V, W):
            touch = 0
            for col in iter_bits(S):
                touch |= N[col]
            D &= touch
        for d in iter_bits(D):
            nd = R[d]
            reps = _distinct_reps((U & nd, V & nd, W & nd))
            if reps is None:
                continue
            u, v, w = reps
            a = lowest_bit(A & N[u])
            b = lowest_bit(B & N[v])
            c = lowest_bit(C & N[w])
            case, tag = cross_edge_case(G, a, b, c, u, v, w)
            if tag == "IV":
                return DetectorOutcome(FOUND, certify(G, [a, b, c, d], [x, y, z, u, v, w], "IV"))
            log.debug("type IV scan superseded by %s (%s cross edges)", tag, case)
            return DetectorOutcome(SUPERSEDED, superseded_by=frozenset((tag,)), detail=case)
    return DetectorOutcome(NOT_FOUND)


def find_type5_conditional(G: BipartiteGraph) -> DetectorOutcome:
    """A type V subgraph, or a report that a smaller type I or III exists."""
    if G.n < 5 or G.m < 4:
        return DetectorOutcome(NOT_FOUND)
    N = G.col_adj
    R = G.row_adj

    def cover(rows: int) -> int:
        out = 0
        for r in iter_bits(rows):
            out |= R[r]
        return out

    for x in range(G.n):
        for y, z in combinations(range(G.n), 2):
            if x in (y, z):
                continue
            nx, ny, nz = N[x], N[y], N[z]
            A = nx & ~(ny | nz)
            B = ny & ~(nx | nz)
            C = nz & ~(nx | ny)
            D = ny & nz & ~nx
            if not (A and B and C and D):
                continue
            NA, NB, NC, ND = cover(A), cover(B), cover(C), cover(D)
            cu = NA & NB & ND
            cv = NA & NC & ND
            if not (cu and cv):
                continue
            u, v = lowest_bit(cu), lowest_bit(cv)
            if (NC >> u) & 1 or (NB >> v) & 1:
                return DetectorOutcome(SUPERSEDED, superseded_by=frozenset(("III",)), detail="III_1")
            Ap = A & N[u] & N[v]
            Dp = D & N[u] & N[v]
            if not Ap or not Dp:
                return DetectorOutcome(SUPERSEDED, superseded_by=frozenset(("I",)), detail="cycle")
            a = lowest_bit(Ap)
            b = lowest_bit(B & N[u])
            c = lowest_bit(C & N[v])
            d = lowest_bit(Dp)
            return DetectorOutcome(FOUND, certify(G, [a, b, c, d], [x, y, z, u, v], "V"))
    return DetectorOutcome(NOT_FOUND)
