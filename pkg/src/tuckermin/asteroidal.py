"""Shortest-paths white asteroidal triples.

For every column ``w`` a BFS from each other column runs in the graph with
``N(w)`` removed, giving the table ``dist[w][u][v]`` of u-v distances that
avoid the neighborhood of ``w``. The best triple minimizes
``dist[w][u][v] + dist[u][v][w] + dist[v][u][w]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .bigraph import BipartiteGraph, Side, Vertex, _bfs_layers, _bfs_path, iter_bits
from .patterns import CertificationError, TuckerType, TuckerWitness, certify

__all__ = ["AsteroidalTriple", "find_min_triple", "triple_span", "distance_tables"]

INF = float("inf")


@dataclass(frozen=True)
class AsteroidalTriple:
    u: int
    v: int
    w: int
    path_uv: tuple[Vertex, ...]
    path_vw: tuple[Vertex, ...]
    path_uw: tuple[Vertex, ...]

    @property
    def ell(self) -> int:
        return len(self.path_uv) + len(self.path_vw) + len(self.path_uw) - 3


def distance_tables(G: BipartiteGraph) -> list[list[list[float]]]:
    """``dist[w][u][v]``: u-v distance avoiding N(w), infinite if disconnected."""
    n = G.n
    all_rows = (1 << G.m) - 1
    all_cols = (1 << n) - 1
    table: list[list[list[float]]] = []
    for w in range(n):
        rows = all_rows & ~G.col_adj[w]
        dw = [[INF] * n for _ in range(n)]
        for u in range(n):
            if u == w:
                continue
            du = dw[u]
            layers = _bfs_layers(G, Side.WHITE, u, rows, all_cols)
            for depth in range(0, len(layers), 2):
                for v in iter_bits(layers[depth]):
                    du[v] = depth
        table.append(dw)
    return table


def _path(G: BipartiteGraph, u: int, v: int, avoid: int) -> tuple[Vertex, ...]:
    rows = ((1 << G.m) - 1) & ~G.col_adj[avoid]
    p = _bfs_path(G, Side.WHITE, u, rows, (1 << G.n) - 1, 1 << v, Side.WHITE)
    assert p is not None
    return tuple(Vertex(Side(Side.WHITE ^ (i & 1)), x) for i, x in enumerate(p))


def find_min_triple(G: BipartiteGraph) -> AsteroidalTriple | None:
    """White asteroidal triple with the smallest path-length sum, or None if
    the matrix has the C1P. Ties go to the lexicographically smallest
    ``(u, v, w)`` with ``u < v < w``."""
    if G.n < 3:
        return None
    dist = distance_tables(G)
    best = INF
    best_triple = None
    for u, v, w in combinations(range(G.n), 3):
        total = dist[w][u][v] + dist[u][v][w] + dist[v][u][w]
        if total < best:
            best, best_triple = total, (u, v, w)
    if best_triple is None:
        return None
    u, v, w = best_triple
    return AsteroidalTriple(
        u, v, w,
        path_uv=_path(G, u, v, w),
        path_vw=_path(G, v, w, u),
        path_uw=_path(G, u, w, v),
    )


def triple_span(G: BipartiteGraph, A: AsteroidalTriple) -> tuple[frozenset[Vertex], TuckerType]:
    """Vertices of the triple's three paths and the Tucker type they induce.

    Raises :class:`CertificationError` if the span is not a Tucker pattern.
    """
    span = frozenset(A.path_uv + A.path_vw + A.path_uw)
    return span, span_witness(G, span).type


def span_witness(G: BipartiteGraph, span: frozenset[Vertex]) -> TuckerWitness:
    rows = [x.index for x in span if x.side is Side.BLACK]
    cols = [x.index for x in span if x.side is Side.WHITE]
    try:
        return certify(G, rows, cols)
    except CertificationError as exc:
        raise CertificationError(f"asteroidal triple span is not a Tucker pattern: {exc}") from exc
