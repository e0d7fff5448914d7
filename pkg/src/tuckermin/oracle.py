"""Brute-force ground truth for small matrices.

Nothing here is used on the detection path. The C1P test is an exhaustive
search over column orders (memoized on the set of unplaced columns and the
set of rows whose run of ones is still open); minimum obstructions come from
enumerating row/column subsets in increasing size.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .bigraph import iter_bits
from .matrix import BinaryMatrix
from .patterns import TuckerType, classify_matrix

__all__ = [
    "OracleBoundError",
    "Obstruction",
    "DEFAULT_C1P_BOUND",
    "DEFAULT_OBSTRUCTION_BOUND",
    "oracle_c1p",
    "oracle_c1p_order",
    "oracle_min_obstruction",
    "oracle_is_minimal_pattern",
    "oracle_min_by_type",
]

DEFAULT_C1P_BOUND = 9
DEFAULT_OBSTRUCTION_BOUND = 7


class OracleBoundError(ValueError):
    """The instance exceeds the configured brute-force bound."""


@dataclass(frozen=True)
class Obstruction:
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    type: TuckerType

    @property
    def size(self) -> int:
        return len(self.rows) + len(self.cols)


def _column_masks(rows: tuple[int, ...], n: int) -> tuple[int, ...]:
    cols = [0] * n
    for i, r in enumerate(rows):
        for j in iter_bits(r):
            cols[j] |= 1 << i
    return tuple(cols)


@lru_cache(maxsize=1 << 18)
def _c1p_order(rows: tuple[int, ...], n: int) -> tuple[int, ...] | None:
    cols = _column_masks(rows, n)
    nonzero = [j for j in range(n) if cols[j]]
    zero = [j for j in range(n) if not cols[j]]
    full = 0
    for j in nonzero:
        full |= 1 << j

    def remaining_rows(unplaced: int) -> int:
        out = 0
        for j in iter_bits(unplaced):
            out |= cols[j]
        return out

    @lru_cache(maxsize=None)
    def search(unplaced: int, open_rows: int) -> tuple[int, ...] | None:
        if not unplaced:
            return ()
        placed_rows = remaining_rows(full & ~unplaced)
        for j in iter_bits(unplaced):
            S = cols[j]
            # a row whose run already closed cannot receive another one
            if S & placed_rows & ~open_rows:
                continue
            rest = unplaced & ~(1 << j)
            # an open row without a one here must be finished
            if open_rows & ~S & remaining_rows(rest):
                continue
            tail = search(rest, S)
            if tail is not None:
                return (j,) + tail
        return None

    order = search(full, 0)
    return None if order is None else order + tuple(zero)


def _check_bound(value: int, bound: int, what: str) -> None:
    if value > bound:
        raise OracleBoundError(f"{what} = {value} exceeds oracle bound {bound}")


def oracle_c1p_order(M: BinaryMatrix, bound: int = DEFAULT_C1P_BOUND) -> tuple[int, ...] | None:
    """A column order making every row's ones consecutive, or None."""
    _check_bound(M.n, bound, "column count")
    return _c1p_order(tuple(M.rows), M.n)


def oracle_c1p(M: BinaryMatrix, bound: int = DEFAULT_C1P_BOUND) -> bool:
    return oracle_c1p_order(M, bound) is not None


def _sub_rows(rows: tuple[int, ...], rsel: tuple[int, ...], csel: tuple[int, ...]) -> tuple[int, ...]:
    out = []
    for i in rsel:
        r = rows[i]
        mask = 0
        for k, j in enumerate(csel):
            if (r >> j) & 1:
                mask |= 1 << k
        out.append(mask)
    return tuple(out)


def _subsets_by_size(m: int, n: int):
    """(rows, cols) selections ordered by total size, then row count, then
    lexicographically; only selections with at least 3 rows and 3 columns,
    the smallest shape of any Tucker pattern."""
    for size in range(6, m + n + 1):
        for r in range(3, min(m, size - 3) + 1):
            c = size - r
            if c > n:
                continue
            for rsel in combinations(range(m), r):
                for csel in combinations(range(n), c):
                    yield rsel, csel


def oracle_min_obstruction(
    M: BinaryMatrix, bound: int = DEFAULT_OBSTRUCTION_BOUND
) -> Obstruction | None:
    """First non-C1P submatrix in (size, row count, lexicographic) order."""
    _check_bound(max(M.m, M.n), bound, "matrix dimension")
    rows = tuple(M.rows)
    if _c1p_order(rows, M.n) is not None:
        return None
    for rsel, csel in _subsets_by_size(M.m, M.n):
        sub = _sub_rows(rows, rsel, csel)
        if _c1p_order(sub, len(csel)) is None:
            t = classify_matrix(BinaryMatrix(len(rsel), len(csel), sub))
            if t is None:
                raise AssertionError(f"minimum non-C1P submatrix {rsel}/{csel} is not a Tucker pattern")
            return Obstruction(rsel, csel, t)
    raise AssertionError("non-C1P matrix without a non-C1P submatrix")


def _is_minimal(rows: tuple[int, ...], m: int, n: int) -> bool:
    if _c1p_order(rows, n) is not None:
        return False
    all_cols = tuple(range(n))
    for i in range(m):
        sub = rows[:i] + rows[i + 1 :]
        if _c1p_order(sub, n) is None:
            return False
    for j in range(n):
        csel = all_cols[:j] + all_cols[j + 1 :]
        if _c1p_order(_sub_rows(rows, tuple(range(m)), csel), n - 1) is None:
            return False
    return True


def oracle_is_minimal_pattern(M: BinaryMatrix, bound: int = DEFAULT_C1P_BOUND) -> bool:
    """Non-C1P, and deleting any single row or column makes it C1P."""
    _check_bound(M.n, bound, "column count")
    return _is_minimal(tuple(M.rows), M.m, M.n)


def oracle_all_obstructions(
    M: BinaryMatrix, bound: int = DEFAULT_OBSTRUCTION_BOUND
) -> list[Obstruction]:
    """Every vertex-minimal non-C1P submatrix, i.e. every induced Tucker pattern."""
    _check_bound(max(M.m, M.n), bound, "matrix dimension")
    rows = tuple(M.rows)
    out = []
    for rsel, csel in _subsets_by_size(M.m, M.n):
        sub = _sub_rows(rows, rsel, csel)
        if _is_minimal(sub, len(rsel), len(csel)):
            t = classify_matrix(BinaryMatrix(len(rsel), len(csel), sub))
            if t is None:
                raise AssertionError(f"minimal non-C1P submatrix {rsel}/{csel} is not a Tucker pattern")
            out.append(Obstruction(rsel, csel, t))
    return out


def oracle_min_by_type(
    M: BinaryMatrix, bound: int = DEFAULT_OBSTRUCTION_BOUND
) -> dict[str, Obstruction]:
    """Smallest induced pattern of each Tucker type present in ``M``."""
    best: dict[str, Obstruction] = {}
    for ob in oracle_all_obstructions(M, bound):
        if ob.type.tag not in best:
            best[ob.type.tag] = ob
    return best
