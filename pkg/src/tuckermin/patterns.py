"""Tucker's forbidden subgraphs and the witnesses that certify them.

Vertex naming used by the generators (rows are black, columns white):

* ``I_k``: the chordless cycle on ``k+2`` rows and ``k+2`` columns.
* ``II_k``: path rows ``r_1..r_{k+1}`` over columns ``c_1..c_{k+2}``, plus a
  row on ``c_1..c_{k+1}, c_{k+3}`` and a row on ``c_2..c_{k+3}``.
* ``III_k``: rows ``u_1..u_{k+1}, w``; columns ``y, z, x, v_1..v_k``. The path
  ``y u_1 v_1 u_2 ... v_k u_{k+1} z`` plus edges ``w-x`` and ``w-v_i``.
* ``IV``: rows ``a, b, c, d``; columns ``x, u, y, v, z, w``. Three legs
  ``x-a-u``, ``y-b-v``, ``z-c-w`` joined at ``d``.
* ``V``: rows ``a, b, c, d``; columns ``x, u, v, y, z``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .bigraph import BipartiteGraph, InducedSubgraph, induced_by_index, iter_bits
from .matrix import BinaryMatrix

__all__ = [
    "TAGS",
    "TuckerType",
    "PatternGraph",
    "TuckerWitness",
    "CertificationError",
    "generate",
    "classify",
    "classify_matrix",
    "pattern_size",
    "certify",
    "type_for_size",
]

TAGS = ("I", "II", "III", "IV", "V")


class CertificationError(RuntimeError):
    """A claimed witness does not induce the declared Tucker pattern."""


@dataclass(frozen=True, order=True)
class TuckerType:
    tag: str
    k: int = 1

    def __post_init__(self) -> None:
        if self.tag not in TAGS:
            raise ValueError(f"unknown Tucker type {self.tag!r}")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.tag in ("IV", "V") and self.k != 1:
            raise ValueError(f"type {self.tag} has no parameter; k must be 1")

    def __str__(self) -> str:
        return self.tag if self.tag in ("IV", "V") else f"{self.tag}_{self.k}"

    @property
    def order(self) -> int:
        return TAGS.index(self.tag)


def pattern_size(t: TuckerType) -> int:
    """Vertex count of the pattern."""
    if t.tag == "I":
        return 2 * t.k + 4
    if t.tag == "II":
        return 2 * t.k + 6
    if t.tag == "III":
        return 2 * t.k + 5
    return 10 if t.tag == "IV" else 9



def type_for_size(tag: str, size: int) -> TuckerType:
    """Inverse of :func:`pattern_size` for a given tag."""
    if tag in ("IV", "V"):
        return TuckerType(tag)
    offset = {"I": 4, "II": 6, "III": 5}[tag]
    k, rem = divmod(size - offset, 2)
    if rem or k < 1:
        raise ValueError(f"no {tag} pattern has {size} vertices")
    return TuckerType(tag, k)


@dataclass(frozen=True)
class PatternGraph:
    type: TuckerType
    rows: int
    cols: int
    edges: tuple[tuple[int, int], ...]

    def matrix(self) -> BinaryMatrix:
        masks = [0] * self.rows
        for r, c in self.edges:
            masks[r] |= 1 << c
        return BinaryMatrix(self.rows, self.cols, tuple(masks))

    @property
    def size(self) -> int:
        return self.rows + self.cols


def _from_rows(t: TuckerType, rows: list[list[int]], ncols: int) -> PatternGraph:
    edges = tuple((i, j) for i, row in enumerate(rows) for j in sorted(row))
    return PatternGraph(t, len(rows), ncols, edges)


@lru_cache(maxsize=None)
def generate(t: TuckerType) -> PatternGraph:
    k = t.k
    if t.tag == "I":
        j = k + 2
        return _from_rows(t, [[i, (i + 1) % j] for i in range(j)], j)
    if t.tag == "II":
        rows = [[i, i + 1] for i in range(k + 1)]
        rows.append(list(range(k + 1)) + [k + 2])
        rows.append(list(range(1, k + 3)))
        return _from_rows(t, rows, k + 3)
    if t.tag == "III":
        # columns: y=0, z=1, x=2, v_i=2+i
        y, z, x = 0, 1, 2
        v = [3 + i for i in range(k)]
        path_cols = [y] + v + [z]
        rows = [[path_cols[i], path_cols[i + 1]] for i in range(k + 1)]
        rows.append([x] + v)
        return _from_rows(t, rows, k + 3)
    if t.tag == "IV":
        # columns x, u, y, v, z, w
        return _from_rows(t, [[0, 1], [2, 3], [4, 5], [1, 3, 5]], 6)
    # V: columns x, u, v, y, z
    return _from_rows(t, [[0, 1, 2], [1, 2, 3, 4], [2, 4], [1, 3]], 5)


# -- side-respecting isomorphism ------------------------------------------


def _adjacency(nrows: int, ncols: int, row_masks: Iterable[int]) -> list[int]:
    """Unified adjacency bitmasks: vertices 0..nrows-1 are rows, the rest columns."""
    adj = [0] * (nrows + ncols)
    for i, r in enumerate(row_masks):
        for j in iter_bits(r):
            adj[i] |= 1 << (nrows + j)
            adj[nrows + j] |= 1 << i
    return adj


def isomorphic(
    a: tuple[int, int, tuple[int, ...]], b: tuple[int, int, tuple[int, ...]]
) -> bool:
    """Side-preserving isomorphism of two bipartite graphs ``(rows, cols, row_masks)``."""
    if a[:2] != b[:2]:
        return False
    nrows = a[0]
    adj_a = _adjacency(*a)
    adj_b = _adjacency(*b)
    if sum(x.bit_count() for x in adj_a) != sum(x.bit_count() for x in adj_b):
        return False
    # refine both graphs jointly so color ids are comparable
    joint = adj_a + [x << len(adj_a) for x in adj_b]
    offset = len(adj_a)
    sides = [0 if v < nrows else 1 for v in range(offset)] * 2
    colors: list = [(sides[v], joint[v].bit_count()) for v in range(2 * offset)]
    for _ in range(2 * offset):
        palette = {c: i for i, c in enumerate(sorted(set(colors)))}
        ids = [palette[c] for c in colors]
        new = [(ids[v], tuple(sorted(ids[u] for u in iter_bits(joint[v])))) for v in range(2 * offset)]
        if len(set(new)) == len(set(colors)):
            colors = new
            break
        colors = new
    if sorted(colors[:offset]) != sorted(colors[offset:]):
        return False
    ca, cb = colors[:offset], colors[offset:]

    # match vertices of a in BFS order so each new vertex has a mapped neighbor
    order: list[int] = []
    placed = 0
    for start in sorted(range(offset), key=lambda v: (-adj_a[v].bit_count(), v)):
        if (placed >> start) & 1:
            continue
        queue = [start]
        placed |= 1 << start
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in iter_bits(adj_a[v] & ~placed):
                placed |= 1 << u
                queue.append(u)

    mapping = [-1] * offset
    used = 0

    def extend(pos: int) -> bool:
        nonlocal used
        if pos == len(order):
            return True
        v = order[pos]
        candidates = [u for u in range(offset) if not (used >> u) & 1 and cb[u] == ca[v]]
        for u in candidates:
            ok = True
            for w in order[:pos]:
                if bool((adj_a[v] >> w) & 1) != bool((adj_b[u] >> mapping[w]) & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = u
            used |= 1 << u
            if extend(pos + 1):
                return True
            used &= ~(1 << u)
            mapping[v] = -1
        return False

    return extend(0)


def _candidates(nrows: int, ncols: int, nedges: int) -> list[TuckerType]:
    out = []
    if nrows == ncols and nrows >= 3 and nedges == 2 * nrows:
        out.append(TuckerType("I", nrows - 2))
    if nrows == ncols and nrows >= 4 and nedges == 4 * (nrows - 3) + 6:
        out.append(TuckerType("II", nrows - 3))
    if ncols == nrows + 1 and nrows >= 3 and nedges == 3 * (nrows - 2) + 3:
        out.append(TuckerType("III", nrows - 2))
    if (nrows, ncols, nedges) == (4, 6, 9):
        out.append(TuckerType("IV"))
    if (nrows, ncols, nedges) == (4, 5, 11):
        out.append(TuckerType("V"))
    return out


def classify_rows(nrows: int, ncols: int, row_masks: tuple[int, ...]) -> TuckerType | None:
    nedges = sum(r.bit_count() for r in row_masks)
    for t in _candidates(nrows, ncols, nedges):
        p = generate(t)
        if isomorphic((nrows, ncols, tuple(row_masks)), (p.rows, p.cols, p.matrix().rows)):
            return t
    return None


def classify(H: InducedSubgraph) -> TuckerType | None:
    """Tucker type whose pattern is isomorphic to ``H`` (rows to rows), or None."""
    return classify_rows(len(H.rows), len(H.cols), H.local_rows())


def classify_matrix(M: BinaryMatrix) -> TuckerType | None:
    return classify_rows(M.m, M.n, M.rows)


# -- witnesses ------------------------------------------------------------


@dataclass(frozen=True)
class TuckerWitness:
    """Rows and columns of G(M) inducing a Tucker pattern of the given type."""

    type: TuckerType
    rows: tuple[int, ...]
    cols: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.rows) + len(self.cols)

    def sort_key(self) -> tuple:
        return (self.size, self.rows, self.cols)


def certify(
    G: BipartiteGraph,
    rows: Iterable[int],
    cols: Iterable[int],
    tag: str | None = None,
) -> TuckerWitness:
    """Classify the induced subgraph and wrap it as a witness.

    Raises :class:`CertificationError` if it is not a Tucker pattern, or not
    of type ``tag`` when one is given.
    """
    H = induced_by_index(G, rows, cols)
    t = classify(H)
    if t is None or (tag is not None and t.tag != tag):
        raise CertificationError(
            f"rows {H.rows} / cols {H.cols} do not induce a Tucker pattern"
            + (f" of type {tag}" if tag else "")
            + (f" (classified as {t})" if t else "")
        )
    return TuckerWitness(t, H.rows, H.cols)
