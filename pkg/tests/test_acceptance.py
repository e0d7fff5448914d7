"""Acceptance criteria, one test each. Every test records a PASS/FAIL line
that is printed in the terminal summary."""

import io
import json
import math
import random
from contextlib import redirect_stdout
from itertools import combinations

from tuckermin.asteroidal import find_min_triple, triple_span
from tuckermin.bench import loglog_slope, medians, run_bench
from tuckermin.bigraph import Side, build_graph, induced_matching_size_two
from tuckermin.cli import main
from tuckermin.conditional import cross_edge_case, find_type3_conditional, find_type4_conditional, find_type5_conditional
from tuckermin.exact import find_min_type1, find_min_type3, find_type4, find_type5
from tuckermin.generators import parse_generator, planted
from tuckermin.matrix import BinaryMatrix, block_diagonal, serialize_matrix
from tuckermin.min_tucker import check_c1p, find_min_tucker
from tuckermin.oracle import oracle_c1p, oracle_is_minimal_pattern, oracle_min_by_type, oracle_min_obstruction
from tuckermin.patterns import TuckerType, generate
from tests.helpers import ACCEPTANCE, random_matrices, with_edges


def record(name, ok, detail):
    ACCEPTANCE.append((name, ok, detail))
    print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    assert ok, detail


def all_matrices(max_dim):
    for m in range(1, max_dim + 1):
        for n in range(1, max_dim + 1):
            for bits in range(1 << (m * n)):
                mask = (1 << n) - 1
                yield BinaryMatrix(m, n, tuple((bits >> (i * n)) & mask for i in range(m)))


def test_1_oracle_equivalence():
    exhaustive = list(all_matrices(4))
    sampled = list(random_matrices(600, 6, 6, seed=2024))
    bad = 0
    for M in exhaustive + sampled:
        ok, w = check_c1p(build_graph(M))
        expect = oracle_c1p(M)
        if ok != expect or (not expect and (w is None or w.size != oracle_min_obstruction(M).size)):
            bad += 1
    record("1 oracle equivalence", bad == 0,
           f"{len(exhaustive)} exhaustive + {len(sampled)} random matrices, {bad} disagreements")


PATTERNS = (
    [TuckerType("I", k) for k in range(1, 6)]
    + [TuckerType("II", k) for k in range(1, 4)]
    + [TuckerType("III", k) for k in range(1, 6)]
    + [TuckerType("IV"), TuckerType("V")]
)

DETECTORS = {
    "I": [find_min_type1],
    "III": [find_min_type3, lambda G: find_type3_conditional(G).witness],
    "IV": [find_type4, lambda G: find_type4_conditional(G).witness],
    "V": [find_type5, lambda G: find_type5_conditional(G).witness],
    "II": [],
}


def test_2_pattern_self_recognition():
    failures = []
    for t in PATTERNS:
        P = generate(t)
        G = build_graph(P.matrix())
        whole = (tuple(range(P.rows)), tuple(range(P.cols)))
        for fn in DETECTORS[t.tag]:
            w = fn(G)
            if w is None or (w.rows, w.cols) != whole or w.type != t:
                failures.append(f"{t} detector")
        w = find_min_tucker(G)
        if w is None or w.size != P.size or w.type != t:
            failures.append(f"{t} global")
    record("2 pattern self-recognition", not failures,
           f"{len(PATTERNS)} patterns" + (f", failed: {failures}" if failures else ""))


def test_3_pattern_minimality():
    bad = [str(t) for t in PATTERNS if not oracle_is_minimal_pattern(generate(t).matrix())]
    record("3 pattern minimality", not bad, f"{len(PATTERNS)} patterns minimal" if not bad else f"not minimal: {bad}")


def expected_span(t, ell):
    return {"I": ell, "II": ell, "III": ell - 5, "IV": ell - 8, "V": ell - 1}[t.tag]


def test_4_ell_accounting():
    bad = []
    for t in PATTERNS:
        G = build_graph(generate(t).matrix())
        A = find_min_triple(G)
        span, st = triple_span(G, A)
        if st != t or len(span) != expected_span(t, A.ell):
            bad.append(f"{t}: span {len(span)} ell {A.ell}")
        if t.tag == "IV" and (A.ell, len(span)) != (18, 10):
            bad.append("IV not 10 = 18 - 8")
        if t.tag == "V" and (A.ell, len(span)) != (10, 9):
            bad.append("V not 9 = 10 - 1")
    record("4 ell accounting", not bad, "all spans match" if not bad else "; ".join(bad))


def _is_induced(G, pair):
    (x1, y1), (x2, y2) = pair
    ends = (x1, y1, x2, y2)
    rows = {v.index for v in ends if v.side is Side.BLACK}
    cols = {v.index for v in ends if v.side is Side.WHITE}
    return len(rows) == len(cols) == 2 and sum(G.has_edge(r, c) for r in rows for c in cols) == 2


def test_5_induced_matching():
    rng = random.Random(55)
    bad = 0
    for _ in range(1200):
        m, n = rng.randint(1, 10), rng.randint(1, 10)
        p = rng.choice((0.15, 0.3, 0.5, 0.7))
        G = build_graph(BinaryMatrix(m, n, tuple(sum(1 << j for j in range(n) if rng.random() < p) for _ in range(m))))
        edges = [(r, c) for r in range(m) for c in range(n) if G.has_edge(r, c)]
        brute = any(
            r1 != r2 and c1 != c2 and not G.has_edge(r1, c2) and not G.has_edge(r2, c1)
            for (r1, c1), (r2, c2) in combinations(edges, 2)
        )
        for side in (Side.BLACK, Side.WHITE):
            pair = induced_matching_size_two(G, side=side)
            if (pair is not None) != brute or (pair is not None and not _is_induced(G, pair)):
                bad += 1
    record("5 induced matching", bad == 0, f"1200 graphs x 2 sides, {bad} disagreements")


A, B, C, D = 0, 1, 2, 3
X, U, Y, V, Z, W = range(6)
CROSS_EDGE_CASES = {
    "none": ([], "IV"),
    "one": ([(B, U)], "III"),
    "two-meeting-left": ([(A, V), (A, W)], "III"),
    "two-meeting-right": ([(B, U), (C, U)], "III"),
    "two-disjoint": ([(A, V), (B, W)], "III"),
    "three-disjoint": ([(A, V), (B, W), (C, U)], "I"),
}


def test_6_cross_edge_cases():
    base = generate(TuckerType("IV")).matrix()
    bad = []
    for case, (edges, tag) in CROSS_EDGE_CASES.items():
        M = with_edges(base, edges)
        G = build_graph(M)
        if cross_edge_case(G, A, B, C, U, V, W) != (case, tag):
            bad.append(f"{case}: misclassified")
            continue
        out = find_type4_conditional(G)
        present = oracle_min_by_type(M)
        if tag == "IV":
            ok = out.found and out.size == 10
        else:
            ok = (out.status == "superseded" and out.superseded_by == {tag}
                  and tag in present and present[tag].size < 10)
        if not ok:
            bad.append(f"{case}: {out.status} {sorted(out.superseded_by)}")
    record("6 cross-edge cases", not bad, f"{len(CROSS_EDGE_CASES)} cases" if not bad else "; ".join(bad))


# Fixed m and row weight, so e stays constant while n doubles. The instances
# are C1P, so every search runs to completion. The type I search should grow
# by at most 2.5x per doubling; the conditional type IV search should be cubic.
SCALING_SIZES = [24, 48, 96, 192]


def _scaling(detector, reps):
    spec = parse_generator("intervals(64,24,6,seed=8)")
    rows = medians(run_bench(spec, SCALING_SIZES, reps=reps, detectors=[detector]))
    return [float(r["seconds"]) for r in rows]


def test_7_scaling():
    # type1 runs take milliseconds, so take more repetitions
    t1 = _scaling("type1", 9)
    t4 = _scaling("type4-cond", 3)
    s1 = loglog_slope(SCALING_SIZES, t1)
    s4 = loglog_slope(SCALING_SIZES, t4)
    ceiling = math.log2(2.5)
    ok1 = -0.5 <= s1 <= ceiling
    ok4 = abs(s4 - 3) <= 0.5
    detail = (f"n={SCALING_SIZES} at m=64, row weight 6; type1 slope {s1:.2f} (ceiling {ceiling:.2f}), "
              f"type4-cond slope {s4:.2f} (target 3 +/- 0.5)")
    record("7 empirical scaling", ok1 and ok4, detail)


def _cli_json(path, workers):
    buf = io.StringIO()
    with redirect_stdout(buf):
        main(["check", "--json", "--workers", str(workers), path])
    return buf.getvalue()


def test_8_determinism(tmp_path):
    instances = [generate(t).matrix() for t in PATTERNS[:8]]
    instances += [planted(TuckerType(tag), 14, seed=s) for s, tag in enumerate(("I", "III", "IV", "V"))]
    instances += list(random_matrices(8, 9, 9, seed=8, min_dim=5))
    instances.append(block_diagonal([generate(TuckerType("IV")).matrix(), generate(TuckerType("I", 3)).matrix()]))
    mismatches = 0
    for i, M in enumerate(instances):
        p = tmp_path / f"m{i}.txt"
        p.write_text(serialize_matrix(M))
        outs = {_cli_json(str(p), w) for w in (1, 4, 1, 4)}
        json.loads(next(iter(outs)))
        mismatches += len(outs) != 1
    record("8 determinism", mismatches == 0, f"{len(instances)} inputs x workers 1,4 twice, {mismatches} mismatches")
