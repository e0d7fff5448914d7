"""Smallest forbidden subgraph of any type.

The shortest-paths asteroidal triple covers types I and II; the type III, IV
and V searches cover the rest. The triple's path sum is compared against the
other sizes as is, not the vertex count of its span.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .asteroidal import AsteroidalTriple, find_min_triple, span_witness
from .bigraph import BipartiteGraph
from .conditional import (
    DetectorOutcome,
    find_type3_conditional,
    find_type4_conditional,
    find_type5_conditional,
)
from .exact import find_min_type3, find_type4, find_type5
from .patterns import TuckerWitness

__all__ = ["MinTuckerResult", "find_min_tucker", "check_c1p", "MODES"]

log = logging.getLogger(__name__)

MODES = ("conditional", "exact")


@dataclass(frozen=True)
class MinTuckerResult:
    witness: TuckerWitness
    detector: str
    ell: int | None


def _run_triple(G: BipartiteGraph) -> AsteroidalTriple | None:
    return find_min_triple(G)


def _run_detector(args: tuple[str, str, BipartiteGraph]) -> tuple[str, TuckerWitness | None, str]:
    mode, tag, G = args
    if mode == "conditional":
        fn = {"III": find_type3_conditional, "IV": find_type4_conditional, "V": find_type5_conditional}[tag]
        out: DetectorOutcome = fn(G)
        return tag, out.witness if out.found else None, out.status
    fn = {"III": find_min_type3, "IV": find_type4, "V": find_type5}[tag]
    w = fn(G)
    return tag, w, "found" if w is not None else "not-found"


def find_min_tucker_result(
    G: BipartiteGraph, mode: str = "conditional", workers: int = 1
) -> MinTuckerResult | None:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    jobs = [(mode, tag, G) for tag in ("III", "IV", "V")]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=min(workers, 4)) as pool:
            triple_f = pool.submit(_run_triple, G)
            results = list(pool.map(_run_detector, jobs))
            triple = triple_f.result()
    else:
        triple = _run_triple(G)
        results = [_run_detector(j) for j in jobs]

    if triple is None:
        return None
    ell = triple.ell
    best_size: float = ell
    best: tuple[str, TuckerWitness] | None = None
    for tag, witness, status in results:
        if status != "found":
            log.debug("type %s search: %s", tag, status)
        if witness is not None and witness.size < best_size:
            best_size, best = witness.size, (tag, witness)
    if best is None:
        span = frozenset(triple.path_uv + triple.path_vw + triple.path_uw)
        return MinTuckerResult(span_witness(G, span), "asteroidal-triple", ell)
    tag, witness = best
    return MinTuckerResult(witness, f"type-{tag}-{mode}", ell)


def find_min_tucker(G: BipartiteGraph, mode: str = "conditional", workers: int = 1) -> TuckerWitness | None:
    """A smallest Tucker subgraph of G, or None if the matrix has the C1P."""
    res = find_min_tucker_result(G, mode, workers)
    return res.witness if res is not None else None


def check_c1p(G: BipartiteGraph, mode: str = "conditional", workers: int = 1) -> tuple[bool, TuckerWitness | None]:
    if G.m == 0 or G.n == 0:
        return True, None
    w = find_min_tucker(G, mode, workers)
    return w is None, w
