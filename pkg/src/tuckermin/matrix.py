"""Binary matrices: storage, parsing, serialization and normalization.

Rows are stored bit-packed as Python ints (bit ``j`` set means column ``j``
holds a one), so a bit test and most set operations used by the detectors
are single integer operations.
"""

from __future__ import annotations

import io
import re
from dataclasses import dataclass
from typing import IO, Iterable, Sequence, Union

__all__ = [
    "BinaryMatrix",
    "MatrixParseError",
    "MatrixStats",
    "RemovalReport",
    "parse_matrix",
    "serialize_matrix",
    "normalize",
    "stats",
    "read_matrix",
]

FORMATS = ("dense", "sparse")

_HEADER = re.compile(r"^#\s*(\d+)\s+(\d+)\s*$")


class MatrixParseError(ValueError):
    """Raised for malformed matrix input; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class BinaryMatrix:
    m: int
    n: int
    rows: tuple[int, ...]
    row_labels: tuple[str, ...] | None = None
    col_labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if len(self.rows) != self.m:
            raise ValueError(f"expected {self.m} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for i, r in enumerate(self.rows):
            if r < 0 or r & ~full:
                raise ValueError(f"row {i} has bits outside {self.n} columns")
        if self.row_labels is not None and len(self.row_labels) != self.m:
            raise ValueError("row_labels length does not match m")
        if self.col_labels is not None and len(self.col_labels) != self.n:
            raise ValueError("col_labels length does not match n")

    @classmethod
    def from_lists(
        cls,
        data: Sequence[Sequence[int]],
        row_labels: Sequence[str] | None = None,
        col_labels: Sequence[str] | None = None,
    ) -> "BinaryMatrix":
        m = len(data)
        n = len(data[0]) if m else (len(col_labels) if col_labels else 0)
        rows = []
        for i, row in enumerate(data):
            if len(row) != n:
                raise ValueError(f"row {i} has length {len(row)}, expected {n}")
            mask = 0
            for j, v in enumerate(row):
                if v not in (0, 1):
                    raise ValueError(f"entry ({i},{j}) = {v!r} is not binary")
                if v:
                    mask |= 1 << j
            rows.append(mask)
        return cls(
            m,
            n,
            tuple(rows),
            tuple(row_labels) if row_labels is not None else None,
            tuple(col_labels) if col_labels is not None else None,
        )

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return (self.rows[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.n)] for r in self.rows]

    def columns(self) -> tuple[int, ...]:
        """Column bitmasks over rows (bit ``i`` set means row ``i`` has a one)."""
        cols = [0] * self.n
        for i, r in enumerate(self.rows):
            while r:
                low = r & -r
                cols[low.bit_length() - 1] |= 1 << i
                r ^= low
        return tuple(cols)

    def transpose(self) -> "BinaryMatrix":
        return BinaryMatrix(self.n, self.m, self.columns(), self.col_labels, self.row_labels)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "BinaryMatrix":
        new_rows = []
        for i in rows:
            r = self.rows[i]
            mask = 0
            for jj, j in enumerate(cols):
                if (r >> j) & 1:
                    mask |= 1 << jj
            new_rows.append(mask)
        return BinaryMatrix(
            len(rows),
            len(cols),
            tuple(new_rows),
            tuple(self.row_labels[i] for i in rows) if self.row_labels else None,
            tuple(self.col_labels[j] for j in cols) if self.col_labels else None,
        )

    def row_name(self, i: int) -> str | int:
        return self.row_labels[i] if self.row_labels is not None else i

    def col_name(self, j: int) -> str | int:
        return self.col_labels[j] if self.col_labels is not None else j

    @property
    def ones(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def __str__(self) -> str:
        return serialize_matrix(self, "dense", header=False).rstrip("\n")


@dataclass(frozen=True)
class MatrixStats:
    e: int
    delta: int


def stats(M: BinaryMatrix) -> MatrixStats:
    """Number of ones and maximum row weight."""
    weights = [r.bit_count() for r in M.rows]
    return MatrixStats(e=sum(weights), delta=max(weights, default=0))


@dataclass(frozen=True)
class RemovalReport:
    """Maps indices of a normalized matrix back to the input matrix."""

    row_map: tuple[int, ...]
    col_map: tuple[int, ...]
    removed_rows: tuple[int, ...] = ()
    removed_cols: tuple[int, ...] = ()
    trivially_c1p: bool = False

    @property
    def empty(self) -> bool:
        return not self.removed_rows and not self.removed_cols


def normalize(M: BinaryMatrix) -> tuple[BinaryMatrix, RemovalReport]:
    """Drop all-zero rows and columns.

    Neither the C1P status nor the set of Tucker submatrices changes, since a
    zero row or column can never take part in an obstruction.
    """
    keep_rows = [i for i, r in enumerate(M.rows) if r]
    used = 0
    for r in M.rows:
        used |= r
    keep_cols = [j for j in range(M.n) if (used >> j) & 1]
    sub = M.submatrix(keep_rows, keep_cols)
    report = RemovalReport(
        row_map=tuple(keep_rows),
        col_map=tuple(keep_cols),
        removed_rows=tuple(i for i in range(M.m) if not M.rows[i]),
        removed_cols=tuple(j for j in range(M.n) if not (used >> j) & 1),
        trivially_c1p=sub.m == 0,
    )
    return sub, report


Source = Union[str, bytes, IO[str], IO[bytes]]


def _read_text(source: Source) -> str:
    if isinstance(source, bytes):
        return source.decode("utf-8")
    if isinstance(source, str):
        return source
    data = source.read()
    return data.decode("utf-8") if isinstance(data, bytes) else data


def parse_matrix(source: Source, format: str = "dense") -> BinaryMatrix:
    """Parse ``dense`` ('0'/'1' text, optional ``# m n`` header) or
    ``sparse`` (``row: col col ...``, optional ``# columns: ...`` line fixing
    column order) input. No normalization is applied."""
    text = _read_text(source)
    if format == "dense":
        return _parse_dense(text)
    if format == "sparse":
        return _parse_sparse(text)
    raise ValueError(f"unknown matrix format {format!r}; expected one of {FORMATS}")


def _parse_dense(text: str) -> BinaryMatrix:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    expected: tuple[int, int] | None = None
    start = 0
    if lines and lines[0].startswith("#"):
        match = _HEADER.match(lines[0].strip())
        if not match:
            raise MatrixParseError("malformed header, expected '# m n'", 1)
        expected = (int(match.group(1)), int(match.group(2)))
        start = 1
    data: list[list[int]] = []
    width: int | None = expected[1] if expected else None
    for lineno, raw in enumerate(lines[start:], start=start + 1):
        line = raw.rstrip("\r")
        if not line.strip():
            raise MatrixParseError("blank line inside matrix", lineno)
        bad = next((ch for ch in line if ch not in "01"), None)
        if bad is not None:
            raise MatrixParseError(f"non-binary symbol {bad!r}", lineno)
        if width is None:
            width = len(line)
        elif len(line) != width:
            raise MatrixParseError(f"ragged row: length {len(line)}, expected {width}", lineno)
        data.append([int(ch) for ch in line])
    if expected and len(data) != expected[0]:
        raise MatrixParseError(f"header declares {expected[0]} rows, found {len(data)}", 1)
    n = width or 0
    rows = tuple(sum(1 << j for j, v in enumerate(row) if v) for row in data)
    return BinaryMatrix(len(data), n, rows)


def _parse_sparse(text: str) -> BinaryMatrix:
    row_labels: list[str] = []
    col_index: dict[str, int] = {}
    rows: list[int] = []
    seen_rows: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("# columns:"):
            if col_index or rows:
                raise MatrixParseError("column declaration must precede all rows", lineno)
            for col in line[len("# columns:"):].split():
                if col in col_index:
                    raise MatrixParseError(f"duplicate column label {col!r}", lineno)
                col_index[col] = len(col_index)
            continue
        if not line or line.startswith("#"):
            continue
        label, sep, rest = line.partition(":")
        label = label.strip()
        if not sep or not label or any(ch.isspace() for ch in label):
            raise MatrixParseError("expected 'rowlabel: collabel ...'", lineno)
        if label in seen_rows:
            raise MatrixParseError(f"duplicate row label {label!r}", lineno)
        seen_rows.add(label)
        mask = 0
        for col in rest.split():
            j = col_index.setdefault(col, len(col_index))
            mask |= 1 << j
        row_labels.append(label)
        rows.append(mask)
    col_labels = tuple(sorted(col_index, key=col_index.__getitem__))
    return BinaryMatrix(len(rows), len(col_labels), tuple(rows), tuple(row_labels), col_labels)


def serialize_matrix(M: BinaryMatrix, format: str = "dense", header: bool = True) -> str:
    if format == "dense":
        out = io.StringIO()
        if header:
            out.write(f"# {M.m} {M.n}\n")
        for r in M.rows:
            out.write("".join("1" if (r >> j) & 1 else "0" for j in range(M.n)))
            out.write("\n")
        return out.getvalue()
    if format == "sparse":
        rl = M.row_labels or tuple(f"r{i}" for i in range(M.m))
        cl = M.col_labels or tuple(f"c{j}" for j in range(M.n))
        lines = [f"# columns: {' '.join(cl)}".rstrip()] if header else []
        for label, r in zip(rl, M.rows):
            cols = " ".join(cl[j] for j in range(M.n) if (r >> j) & 1)
            lines.append(f"{label}: {cols}".rstrip())
        return "\n".join(lines) + ("\n" if lines else "")
    raise ValueError(f"unknown matrix format {format!r}")


def read_matrix(path: str, format: str = "dense") -> BinaryMatrix:
    with open(path, "rb") as fh:
        return parse_matrix(fh, format)


def block_diagonal(blocks: Iterable[BinaryMatrix]) -> BinaryMatrix:
    rows: list[int] = []
    offset = 0
    for B in blocks:
        rows.extend(r << offset for r in B.rows)
        offset += B.n
    return BinaryMatrix(len(rows), offset, tuple(rows))


def permute(M: BinaryMatrix, row_order: Sequence[int], col_order: Sequence[int]) -> BinaryMatrix:
    """Reorder rows and columns; ``row_order[i]`` is the source row of row ``i``."""
    return M.submatrix(list(row_order), list(col_order))
