"""Wall-clock timing of the detectors over generated instances."""

from __future__ import annotations

import csv
import io
import math
import statistics
import time
from functools import partial
from typing import Callable, Iterable, Iterator

from .bigraph import BipartiteGraph, build_graph
from .conditional import find_type3_conditional, find_type4_conditional, find_type5_conditional
from .exact import find_min_type1, find_min_type3, find_type4, find_type5
from .asteroidal import find_min_triple
from .generators import GeneratorSpec
from .matrix import normalize, stats
from .min_tucker import find_min_tucker


def _describe(result) -> str:
    if result is None:
        return "none"
    if hasattr(result, "status"):
        return f"{result.status}:{result.size}" if result.found else result.status
    if hasattr(result, "ell"):
        return f"ell={result.ell}"
    return f"{result.type}:{result.size}"


DETECTORS: dict[str, Callable[[BipartiteGraph], object]] = {
    "min-tucker": find_min_tucker,
    "min-tucker-exact": lambda G: find_min_tucker(G, mode="exact"),
    "triple": find_min_triple,
    "type1": find_min_type1,
    "type3": find_min_type3,
    "type4": find_type4,
    "type5": find_type5,
    "type3-cond": find_type3_conditional,
    "type4-cond": find_type4_conditional,
    "type5-cond": find_type5_conditional,
}

FIELDS = ["generator", "size", "m", "n", "e", "detector", "rep", "seconds", "result"]


def time_detector(fn: Callable[[BipartiteGraph], object], G: BipartiteGraph) -> tuple[float, object]:
    t0 = time.perf_counter()
    out = fn(G)
    return time.perf_counter() - t0, out


def run_bench(
    spec: GeneratorSpec,
    sizes: Iterable[int] | None = None,
    reps: int = 1,
    detectors: Iterable[str] = ("min-tucker",),
    workers: int = 1,
) -> Iterator[dict]:
    """One row per (size, detector, repetition); rep ``r`` uses seed ``seed + r``."""
    detectors = list(detectors)
    for name in detectors:
        if name not in DETECTORS:
            raise ValueError(f"unknown detector {name!r}; choose from {sorted(DETECTORS)}")
    for size in sizes or [spec.size]:
        s = spec.with_size(size)
        for rep in range(reps):
            M, _ = normalize(s.build(rep))
            G = build_graph(M)
            e = stats(M).e
            for name in detectors:
                fn = DETECTORS[name]
                if name.startswith("min-tucker") and workers > 1:
                    mode = "exact" if name.endswith("exact") else "conditional"
                    fn = partial(find_min_tucker, mode=mode, workers=workers)
                seconds, out = time_detector(fn, G)
                yield {
                    "generator": str(s),
                    "size": size,
                    "m": M.m,
                    "n": M.n,
                    "e": e,
                    "detector": name,
                    "rep": rep,
                    "seconds": f"{seconds:.6f}",
                    "result": _describe(out),
                }


def medians(rows: Iterable[dict]) -> list[dict]:
    groups: dict[tuple, list[dict]] = {}
    for r in rows:
        groups.setdefault((r["generator"], r["size"], r["detector"]), []).append(r)
    out = []
    for (gen, size, det), rs in groups.items():
        out.append(
            {
                "generator": gen,
                "size": size,
                "m": rs[0]["m"],
                "n": rs[0]["n"],
                "e": rs[0]["e"],
                "detector": det,
                "rep": "median",
                "seconds": f"{statistics.median(float(r['seconds']) for r in rs):.6f}",
                "result": rs[0]["result"],
            }
        )
    return out


def to_csv(rows: Iterable[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow(r)
    return buf.getvalue()


def loglog_slope(xs: list[float], ys: list[float]) -> float:
    """Least-squares slope of log(y) against log(x)."""
    lx = [math.log(x) for x in xs]
    ly = [math.log(y) for y in ys]
    return statistics.linear_regression(lx, ly).slope
