"""Seeded instance generators for tests and benchmarks."""

from __future__ import annotations

import random
import re
from dataclasses import dataclass

from .matrix import BinaryMatrix, block_diagonal, permute
from .patterns import TuckerType, generate

__all__ = [
    "random_matrix",
    "interval_matrix",
    "planted",
    "pattern_matrix",
    "GeneratorSpec",
    "parse_generator",
]


def random_matrix(m: int, n: int, density: float, seed: int = 0) -> BinaryMatrix:
    """Each entry is one with probability ``density``."""
    rng = random.Random(seed)
    rows = tuple(sum(1 << j for j in range(n) if rng.random() < density) for _ in range(m))
    return BinaryMatrix(m, n, rows)


def _interval_rows(m: int, n: int, width: int | None, rng: random.Random) -> list[int]:
    """``m`` intervals over ``n`` columns covering every column.

    With ``width`` given every interval has exactly that many ones, which needs
    ``m * width >= n``; otherwise widths vary around a staircase.
    """
    if m < 1 or n < 1:
        raise ValueError("interval block needs at least one row and one column")
    if width is not None:
        if not 1 <= width <= n or m * width < n:
            raise ValueError(f"cannot cover {n} columns with {m} intervals of width {width}")
        span = n - width
        for _ in range(100):
            starts = sorted([0, span] + [rng.randint(0, span) for _ in range(m - 2)])[:m]
            if m == 1 or all(b - a <= width for a, b in zip(starts, starts[1:])):
                break
        else:
            starts = [round(i * span / max(m - 1, 1)) for i in range(m)]
        return [((1 << width) - 1) << s for s in starts]
    rows = []
    for i in range(m):
        lo = (i * n) // m
        hi = max(lo, -(-((i + 1) * n) // m) - 1)
        lo = max(0, lo - rng.randint(0, 1))
        hi = min(n - 1, hi + rng.randint(0, 1))
        rows.append(((1 << (hi - lo + 1)) - 1) << lo)
    return rows


def _shuffle(M: BinaryMatrix, rng: random.Random) -> BinaryMatrix:
    r = list(range(M.m))
    c = list(range(M.n))
    rng.shuffle(r)
    rng.shuffle(c)
    return permute(M, r, c)


def interval_matrix(m: int, n: int, delta: int, seed: int = 0) -> BinaryMatrix:
    """A C1P matrix with every row holding exactly ``delta`` ones and no empty
    column, rows and columns shuffled."""
    rng = random.Random(seed)
    rows = _interval_rows(m, n, delta, rng)
    return _shuffle(BinaryMatrix(m, n, tuple(rows)), rng)


def pattern_matrix(t: TuckerType) -> BinaryMatrix:
    return generate(t).matrix()


def planted(t: TuckerType, padding: int, seed: int = 0) -> BinaryMatrix:
    """The pattern plus a disjoint C1P block, padded to ``padding x padding``
    and shuffled. The pattern stays the smallest obstruction."""
    P = pattern_matrix(t)
    pr, pc = padding - P.m, padding - P.n
    if pr == pc == 0:
        blocks = [P]
    elif pr < 1 or pc < 1:
        raise ValueError(f"padding {padding} too small for a {P.m}x{P.n} pattern")
    else:
        rng0 = random.Random(seed)
        blocks = [P, BinaryMatrix(pr, pc, tuple(_interval_rows(pr, pc, None, rng0)))]
    return _shuffle(block_diagonal(blocks), random.Random(seed + 1))


_SPEC = re.compile(r"^\s*(\w+)\s*\((.*)\)\s*$")
_SCALE_ARG = {"random": 1, "intervals": 1, "planted": 2, "pattern": 1}


@dataclass(frozen=True)
class GeneratorSpec:
    """A parsed ``name(arg, ...)`` generator description.

    ``size`` is the scale parameter that ``--sizes`` overrides: columns for
    ``random`` and ``intervals``, padding for ``planted``, k for ``pattern``.
    """

    name: str
    args: tuple
    seed: int = 0

    @property
    def size(self) -> int:
        return self.args[_SCALE_ARG[self.name]]

    def with_size(self, size: int) -> "GeneratorSpec":
        idx = _SCALE_ARG[self.name]
        args = list(self.args)
        args[idx] = size
        return GeneratorSpec(self.name, tuple(args), self.seed)

    def build(self, rep: int = 0) -> BinaryMatrix:
        seed = self.seed + rep
        if self.name == "random":
            m, n, density = self.args
            return random_matrix(m, n, density, seed)
        if self.name == "intervals":
            m, n, delta = self.args
            return interval_matrix(m, n, delta, seed)
        if self.name == "planted":
            tag, k, pad = self.args
            return planted(TuckerType(tag, k), pad, seed)
        tag, k = self.args
        return pattern_matrix(TuckerType(tag, k))

    def __str__(self) -> str:
        args = ",".join(map(str, self.args))
        return f"{self.name}({args})" if self.name == "pattern" else f"{self.name}({args},seed={self.seed})"


def _tag(s: str) -> str:
    s = s.strip().upper()
    if s not in ("I", "II", "III", "IV", "V"):
        raise ValueError(f"unknown Tucker type {s!r}")
    return s


def parse_generator(text: str, default_seed: int = 0) -> GeneratorSpec:
    """Parse ``random(m,n,density[,seed])``, ``intervals(m,n,delta[,seed])``,
    ``planted(type,k,padding)`` or ``pattern(type,k)``."""
    match = _SPEC.match(text)
    if not match:
        raise ValueError(f"malformed generator spec {text!r}")
    name = match.group(1)
    raw = [a.strip() for a in match.group(2).split(",") if a.strip()]
    seed = default_seed
    pos = []
    for a in raw:
        if a.startswith("seed="):
            seed = int(a[5:])
        else:
            pos.append(a)
    try:
        if name == "random":
            if len(pos) == 4:
                seed = int(pos.pop())
            m, n, density = int(pos[0]), int(pos[1]), float(pos[2])
            if len(pos) != 3 or not 0 <= density <= 1:
                raise ValueError
            return GeneratorSpec(name, (m, n, density), seed)
        if name == "intervals":
            if len(pos) == 4:
                seed = int(pos.pop())
            if len(pos) != 3:
                raise ValueError
            return GeneratorSpec(name, (int(pos[0]), int(pos[1]), int(pos[2])), seed)
        if name == "planted":
            if len(pos) != 3:
                raise ValueError
            return GeneratorSpec(name, (_tag(pos[0]), int(pos[1]), int(pos[2])), seed)
        if name == "pattern":
            if len(pos) != 2:
                raise ValueError
            return GeneratorSpec(name, (_tag(pos[0]), int(pos[1])), seed)
    except (ValueError, IndexError) as exc:
        raise ValueError(f"bad arguments in generator spec {text!r}") from exc
    raise ValueError(f"unknown generator {name!r}")
