"""The bipartite graph G(M): rows are black vertices, columns are white.

Neighborhoods are kept as int bitsets over the opposite side. A
:class:`VertexMask` restricts any search to an induced subgraph without
copying the graph; detectors build one mask per inner iteration.

The ``_bfs_*`` helpers work directly on bitmasks and are what the detectors
call. The public functions wrap them with :class:`Vertex` values.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .matrix import BinaryMatrix

__all__ = [
    "Side",
    "Vertex",
    "VertexMask",
    "BipartiteGraph",
    "InducedSubgraph",
    "build_graph",
    "neighborhoods",
    "shortest_path",
    "induced_subgraph",
    "induced_matching_size_two",
    "iter_bits",
    "lowest_bit",
]


def iter_bits(x: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def lowest_bit(x: int) -> int:
    return (x & -x).bit_length() - 1


def bits_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


class Side(enum.IntEnum):
    BLACK = 0  # rows
    WHITE = 1  # columns

    @property
    def other(self) -> "Side":
        return Side(1 - self)


class Vertex(NamedTuple):
    side: Side
    index: int

    def __repr__(self) -> str:
        return f"{'r' if self.side is Side.BLACK else 'c'}{self.index}"


def black(i: int) -> Vertex:
    return Vertex(Side.BLACK, i)


def white(j: int) -> Vertex:
    return Vertex(Side.WHITE, j)


@dataclass(frozen=True)
class VertexMask:
    rows: int
    cols: int

    def side(self, side: Side) -> int:
        return self.rows if side is Side.BLACK else self.cols

    def allows(self, v: Vertex) -> bool:
        return bool((self.side(v.side) >> v.index) & 1)


class BipartiteGraph:
    """Immutable bipartite view of a binary matrix."""

    __slots__ = ("m", "n", "row_adj", "col_adj", "e")

    def __init__(self, m: int, n: int, row_adj: tuple[int, ...]):
        self.m = m
        self.n = n
        self.row_adj = row_adj
        cols = [0] * n
        for i, r in enumerate(row_adj):
            for j in iter_bits(r):
                cols[j] |= 1 << i
        self.col_adj = tuple(cols)
        self.e = sum(r.bit_count() for r in row_adj)

    def adj(self, side: Side) -> tuple[int, ...]:
        return self.row_adj if side is Side.BLACK else self.col_adj

    def neighbors(self, v: Vertex) -> list[Vertex]:
        other = v.side.other
        return [Vertex(other, i) for i in iter_bits(self.adj(v.side)[v.index])]

    def has_edge(self, row: int, col: int) -> bool:
        return bool((self.row_adj[row] >> col) & 1)

    def full_mask(self) -> VertexMask:
        return VertexMask((1 << self.m) - 1, (1 << self.n) - 1)

    def degree(self, v: Vertex) -> int:
        return self.adj(v.side)[v.index].bit_count()

    def __repr__(self) -> str:
        return f"BipartiteGraph(m={self.m}, n={self.n}, e={self.e})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BipartiteGraph) and (self.m, self.n, self.row_adj) == (
            other.m,
            other.n,
            other.row_adj,
        )

    def __hash__(self) -> int:
        return hash((self.m, self.n, self.row_adj))

    def __reduce__(self):
        return (BipartiteGraph, (self.m, self.n, self.row_adj))


def build_graph(M: BinaryMatrix) -> BipartiteGraph:
    return BipartiteGraph(M.m, M.n, M.rows)


def _bfs_layers(
    G: BipartiteGraph,
    side: Side,
    src: int,
    rows: int,
    cols: int,
    max_depth: int | None = None,
) -> list[int]:
    """Layer bitmasks from ``src``; layer ``i`` lies on ``side`` when ``i`` is
    even and on the other side when odd. Layer 0 is ``{src}``."""
    allowed = [rows, cols]
    adjs = (G.row_adj, G.col_adj)
    seen = [0, 0]
    seen[side] = 1 << src
    layers = [1 << src]
    cur_side = int(side)
    frontier = 1 << src
    while frontier and (max_depth is None or len(layers) <= max_depth):
        adj = adjs[cur_side]
        nxt_side = 1 - cur_side
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        nxt &= allowed[nxt_side] & ~seen[nxt_side]
        if not nxt:
            break
        seen[nxt_side] |= nxt
        layers.append(nxt)
        frontier = nxt
        cur_side = nxt_side
    return layers


def _walk_back(G: BipartiteGraph, side: Side, layers: list[int], depth: int, end: int) -> list[int]:
    """Indices of a shortest path from layer 0 to vertex ``end`` in layer ``depth``.

    Each step back takes the smallest-index neighbor in the previous layer.
    """
    adjs = (G.row_adj, G.col_adj)
    path = [end]
    cur = end
    cur_side = int(side) ^ (depth & 1)
    for d in range(depth - 1, -1, -1):
        cur = lowest_bit(adjs[cur_side][cur] & layers[d])
        cur_side ^= 1
        path.append(cur)
    path.reverse()
    return path


def _bfs_path(
    G: BipartiteGraph,
    side: Side,
    src: int,
    rows: int,
    cols: int,
    targets: int,
    target_side: Side,
    max_len: int | None = None,
) -> list[int] | None:
    """Shortest path (vertex indices, sides alternate from ``side``) from
    ``src`` to any vertex of ``targets`` on ``target_side``, or None.

    Paths longer than ``max_len`` edges are not explored.
    """
    allowed = [rows, cols]
    if target_side is side and (targets >> src) & 1:
        return [src]
    adjs = (G.row_adj, G.col_adj)
    seen = [0, 0]
    seen[side] = 1 << src
    layers = [1 << src]
    cur_side = int(side)
    frontier = 1 << src
    while frontier:
        if max_len is not None and len(layers) > max_len:
            return None
        adj = adjs[cur_side]
        nxt_side = 1 - cur_side
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        nxt &= allowed[nxt_side] & ~seen[nxt_side]
        if not nxt:
            return None
        layers.append(nxt)
        if nxt_side == target_side:
            hit = nxt & targets
            if hit:
                return _walk_back(G, side, layers, len(layers) - 1, lowest_bit(hit))
        seen[nxt_side] |= nxt
        frontier = nxt
        cur_side = nxt_side
    return None


def _as_path(side: Side, path: list[int]) -> list[Vertex]:
    return [Vertex(Side(side ^ (i & 1)), v) for i, v in enumerate(path)]


def neighborhoods(G: BipartiteGraph, x: Vertex, mask: VertexMask | None = None) -> list[list[Vertex]]:
    """Layers N_1(x), N_2(x), ... of the masked induced subgraph."""
    mask = mask or G.full_mask()
    if not mask.allows(x):
        raise ValueError(f"{x!r} is excluded by the mask")
    layers = _bfs_layers(G, x.side, x.index, mask.rows, mask.cols)
    out = []
    for i, layer in enumerate(layers[1:], start=1):
        s = Side(x.side ^ (i & 1))
        out.append([Vertex(s, v) for v in iter_bits(layer)])
    return out


def shortest_path(
    G: BipartiteGraph,
    source: Vertex,
    targets: Iterable[Vertex],
    mask: VertexMask | None = None,
) -> list[Vertex] | None:
    """A minimum-length path from ``source`` to any of ``targets``.

    Ties go to the smallest-index target in the first layer reached, then to
    the smallest-index predecessor at every step back.
    """
    mask = mask or G.full_mask()
    if not mask.allows(source):
        raise ValueError(f"{source!r} is excluded by the mask")
    tmask = [0, 0]
    for t in targets:
        tmask[t.side] |= 1 << t.index
    tmask[0] &= mask.rows
    tmask[1] &= mask.cols
    best: list[Vertex] | None = None
    for tside in (Side.BLACK, Side.WHITE):
        if not tmask[tside]:
            continue
        p = _bfs_path(G, source.side, source.index, mask.rows, mask.cols, tmask[tside], tside)
        if p is not None and (best is None or len(p) < len(best)):
            best = _as_path(source.side, p)
    return best


@dataclass(frozen=True)
class InducedSubgraph:
    """An induced subgraph given by sorted row and column indices of G."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.rows) + len(self.cols)

    def local_rows(self) -> tuple[int, ...]:
        """Row bitmasks over local column positions."""
        pos = {c: k for k, c in enumerate(self.cols)}
        local = [0] * len(self.rows)
        rpos = {r: k for k, r in enumerate(self.rows)}
        for r, c in self.edges:
            local[rpos[r]] |= 1 << pos[c]
        return tuple(local)


def induced_subgraph(G: BipartiteGraph, vertices: Iterable[Vertex]) -> InducedSubgraph:
    rows = sorted({v.index for v in vertices if v.side is Side.BLACK})
    cols = sorted({v.index for v in vertices if v.side is Side.WHITE})
    return induced_by_index(G, rows, cols)


def induced_by_index(G: BipartiteGraph, rows: Iterable[int], cols: Iterable[int]) -> InducedSubgraph:
    rows = sorted(set(rows))
    cols = sorted(set(cols))
    cmask = bits_of(cols)
    edges = tuple((r, c) for r in rows for c in iter_bits(G.row_adj[r] & cmask))
    return InducedSubgraph(tuple(rows), tuple(cols), edges)


def _induced_matching(
    adj: tuple[int, ...], U: int, other: int
) -> tuple[int, int, int, int] | None:
    """Two edges {u,a}, {u2,b} with u, u2 in ``U`` forming an induced matching.

    ``adj`` gives neighborhoods of U's side; ``other`` masks the opposite side.
    Returns (u, a, u2, b) or None when the neighborhoods form a chain.
    """
    nbrs = {u: adj[u] & other for u in iter_bits(U)}
    buckets: list[list[int]] = [[] for _ in range(other.bit_count() + 1)]
    for u, nu in nbrs.items():
        buckets[nu.bit_count()].append(u)
    order = [u for bucket in buckets for u in bucket]
    for u, u2 in zip(order, order[1:]):
        diff = nbrs[u] & ~nbrs[u2]
        if diff:
            return u, lowest_bit(diff), u2, lowest_bit(nbrs[u2] & ~nbrs[u])
    return None


def induced_matching_size_two(
    G: BipartiteGraph,
    mask: VertexMask | None = None,
    side: Side = Side.BLACK,
) -> tuple[tuple[Vertex, Vertex], tuple[Vertex, Vertex]] | None:
    """Induced matching of size two inside the masked subgraph, or None.

    Vertices of ``side`` are count-sorted by masked degree; if every
    neighborhood contains its predecessor's there is no such matching.
    """
    mask = mask or G.full_mask()
    found = _induced_matching(G.adj(side), mask.side(side), mask.side(side.other))
    if found is None:
        return None
    u, a, u2, b = found
    o = side.other
    return (Vertex(side, u), Vertex(o, a)), (Vertex(side, u2), Vertex(o, b))


def degree_chain(G: BipartiteGraph, mask: VertexMask, side: Side = Side.BLACK) -> list[int]:
    """``side`` vertices in the count-sort order used by the matching search."""
    other = mask.side(side.other)
    adj = G.adj(side)
    return sorted(iter_bits(mask.side(side)), key=lambda u: (adj[u] & other).bit_count())
