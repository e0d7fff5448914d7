"""Exact detectors: a smallest type I or III subgraph, any type IV or V subgraph.

Every returned witness is certified against the declared pattern before it
leaves the module.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .bigraph import BipartiteGraph, Side, _bfs_path, iter_bits, lowest_bit
from .patterns import TuckerWitness, certify

__all__ = ["find_min_type1", "find_min_type3", "find_type4", "find_type5"]


def _split(path: list[int], side: Side) -> tuple[list[int], list[int]]:
    """Separate an alternating path into (row indices, column indices)."""
    first = path[0::2]
    second = path[1::2]
    return (first, second) if side is Side.BLACK else (second, first)


def find_min_type1(G: BipartiteGraph) -> TuckerWitness | None:
    """A smallest chordless cycle of length at least six.

    For every row ``w`` and pair ``x, y`` of its columns, a shortest x-y path
    avoiding the other columns of ``w`` and the common neighbors of ``x`` and
    ``y`` closes a chordless cycle through ``w``.
    """
    all_rows = (1 << G.m) - 1
    all_cols = (1 << G.n) - 1
    best_key = None
    best: tuple[list[int], list[int]] | None = None
    best_len: int | None = None
    for w in range(G.m):
        nw = G.row_adj[w]
        cols_allowed = all_cols & ~nw
        for x, y in combinations(iter_bits(nw), 2):
            rows_allowed = all_rows & ~(G.col_adj[x] & G.col_adj[y])
            path = _bfs_path(
                G, Side.WHITE, x, rows_allowed, cols_allowed | (1 << x) | (1 << y),
                1 << y, Side.WHITE, max_len=best_len,
            )
            if path is None:
                continue
            prow, pcol = _split(path, Side.WHITE)
            rows = tuple(sorted(prow + [w]))
            cols = tuple(sorted(pcol))
            key = (len(path) + 1, rows, cols)
            if best_key is None or key < best_key:
                best_key, best, best_len = key, (list(rows), list(cols)), len(path) - 1
    if best is None:
        return None
    return certify(G, best[0], best[1], "I")


def find_min_type3(G: BipartiteGraph) -> TuckerWitness | None:
    """A smallest type III subgraph.

    For each edge ``{x, w}`` and each edge ``{y, a}`` with ``y`` not adjacent
    to ``w`` and ``a`` not adjacent to ``x``, search a shortest path from ``a``
    to a column outside ``N(w) | N(a)`` inside the subgraph induced by
    ``(R - N(x) - N(y)) + {a} + (N(w) - {x}) + (C - N(a))``.
    """
    all_rows = (1 << G.m) - 1
    all_cols = (1 << G.n) - 1
    best_key = None
    best: tuple[list[int], list[int]] | None = None
    best_len: int | None = None
    for w in range(G.m):
        nw = G.row_adj[w]
        for x in iter_bits(nw):
            nx = G.col_adj[x]
            for a in iter_bits(all_rows & ~nx):
                na = G.row_adj[a]
                targets = all_cols & ~nw & ~na
                if not targets:
                    continue
                cols_allowed = (nw & ~(1 << x)) | (all_cols & ~na)
                for y in iter_bits(na & ~nw):
                    rows_allowed = (all_rows & ~nx & ~G.col_adj[y]) | (1 << a)
                    path = _bfs_path(
                        G, Side.BLACK, a, rows_allowed, cols_allowed,
                        targets, Side.WHITE, max_len=best_len,
                    )
                    if path is None:
                        continue
                    prow, pcol = _split(path, Side.BLACK)
                    rows = tuple(sorted(prow + [w]))
                    cols = tuple(sorted(pcol + [x, y]))
                    key = (len(rows) + len(cols), rows, cols)
                    if best_key is None or key < best_key:
                        best_key, best, best_len = key, (list(rows), list(cols)), len(path) - 1
    if best is None:
        return None
    return certify(G, best[0], best[1], "III")


def find_type4(G: BipartiteGraph) -> TuckerWitness | None:
    """Some type IV subgraph: rows ``a, b, c`` carry the legs, ``d`` the hub."""
    if G.m < 4:
        return None
    N = G.row_adj
    for a, b, c in combinations(range(G.m), 3):
        na, nb, nc = N[a], N[b], N[c]
        ux = na & ~(nb | nc)
        vy = nb & ~(na | nc)
        wz = nc & ~(na | nb)
        if not (ux and vy and wz):
            continue
        for d in range(G.m):
            if d in (a, b, c):
                continue
            nd = N[d]
            U, X = ux & nd, ux & ~nd
            V, Y = vy & nd, vy & ~nd
            W, Z = wz & nd, wz & ~nd
            if U and X and V and Y and W and Z:
                cols = [lowest_bit(s) for s in (X, Y, Z, U, V, W)]
                return certify(G, [a, b, c, d], cols, "IV")
    return None


def find_type5(G: BipartiteGraph) -> TuckerWitness | None:
    """Some type V subgraph; ``b`` is the row with four ones."""
    if G.m < 4:
        return None
    N = G.row_adj
    for a, b, c, d in permutations(range(G.m), 4):
        na, nb, nc, nd = N[a], N[b], N[c], N[d]
        uy = nb & nd & ~nc
        vz = nb & nc & ~nd
        U, Y = uy & na, uy & ~na
        V, Z = vz & na, vz & ~na
        X = na & ~(nb | nc | nd)
        if X and Y and Z and U and V:
            cols = [lowest_bit(s) for s in (X, Y, Z, U, V)]
            return certify(G, [a, b, c, d], cols, "V")
    return None
