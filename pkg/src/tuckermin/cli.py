"""Command-line interface.

Exit status: 0 when the matrix has the C1P (or a command succeeded without
finding an obstruction), 1 when an obstruction was found, 2 on input or
usage errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from .bench import DETECTORS, medians, run_bench, to_csv
from .bigraph import build_graph
from .conditional import find_type3_conditional, find_type4_conditional, find_type5_conditional
from .exact import find_min_type1, find_min_type3, find_type4, find_type5
from .generators import parse_generator
from .matrix import BinaryMatrix, MatrixParseError, RemovalReport, normalize, read_matrix
from .min_tucker import MODES, find_min_tucker_result
from .oracle import (
    DEFAULT_OBSTRUCTION_BOUND,
    OracleBoundError,
    oracle_min_by_type,
    oracle_min_obstruction,
)
from .patterns import TAGS, TuckerWitness

EXIT_C1P, EXIT_OBSTRUCTION, EXIT_ERROR = 0, 1, 2

log = logging.getLogger("tuckermin")


class UsageError(Exception):
    pass


def witness_record(
    M: BinaryMatrix,
    report: RemovalReport,
    witness: TuckerWitness | None,
    detector: str,
    ell: int | None = None,
) -> dict:
    """JSON-ready certificate; row/column ids refer to the input matrix."""
    if witness is None:
        return {"c1p": True, "type": None, "k": None, "rows": [], "cols": [], "size": 0,
                "detector": detector, "ell": ell}
    return {
        "c1p": False,
        "type": witness.type.tag,
        "k": witness.type.k,
        "rows": [M.row_name(report.row_map[i]) for i in witness.rows],
        "cols": [M.col_name(report.col_map[j]) for j in witness.cols],
        "size": witness.size,
        "detector": detector,
        "ell": ell,
    }


def _dump(record: dict) -> str:
    return json.dumps(record, sort_keys=True)


def _text(record: dict) -> str:
    if record.get("c1p"):
        return "C1P: yes"
    return (
        f"C1P: no\nwitness: type {record['type']} k={record['k']} size={record['size']}"
        f" ({record['detector']})\nrows: {' '.join(map(str, record['rows']))}"
        f"\ncols: {' '.join(map(str, record['cols']))}"
    )


def _load(args) -> tuple[BinaryMatrix, BinaryMatrix, RemovalReport]:
    M = read_matrix(args.path, args.format)
    N, report = normalize(M)
    return M, N, report


def cmd_check(args) -> int:
    M, N, report = _load(args)
    if report.trivially_c1p:
        record = witness_record(M, report, None, "trivial")
    else:
        res = find_min_tucker_result(build_graph(N), args.mode, args.workers)
        if res is None:
            record = witness_record(M, report, None, "asteroidal-triple")
        else:
            record = witness_record(M, report, res.witness, res.detector, res.ell)
    print(_dump(record) if args.json else _text(record))
    return EXIT_C1P if record["c1p"] else EXIT_OBSTRUCTION


_EXACT = {"I": find_min_type1, "III": find_min_type3, "IV": find_type4, "V": find_type5}
_CONDITIONAL = {"III": find_type3_conditional, "IV": find_type4_conditional, "V": find_type5_conditional}


def cmd_find_type(args) -> int:
    tag = args.type
    if tag == "II":
        raise UsageError("no type II detector; use `tuckermin oracle --type II` on small instances")
    if args.mode == "conditional" and tag not in _CONDITIONAL:
        raise UsageError(f"type {tag} has no conditional detector; use --mode exact")
    M, N, report = _load(args)
    G = build_graph(N)
    if args.mode == "exact":
        w = _EXACT[tag](G) if not report.trivially_c1p else None
        status, superseded = ("found" if w else "not-found"), []
    else:
        out = _CONDITIONAL[tag](G) if not report.trivially_c1p else None
        w = out.witness if out else None
        status = out.status if out else "not-found"
        superseded = sorted(out.superseded_by, key=TAGS.index) if out else []
    record = {
        "requested": tag,
        "mode": args.mode,
        "status": status,
        "superseded_by": superseded,
        "witness": witness_record(M, report, w, f"type-{tag}-{args.mode}") if w else None,
    }
    if args.json:
        print(_dump(record))
    else:
        line = f"type {tag} ({args.mode}): {status}"
        if superseded:
            line += f" by {' or '.join(superseded)}"
        print(line)
        if w:
            print(_text(record["witness"]).split("\n", 1)[1])
    return EXIT_OBSTRUCTION if w else EXIT_C1P


def cmd_oracle(args) -> int:
    M, N, report = _load(args)
    bound = args.oracle_bound
    if args.type:
        found = oracle_min_by_type(N, bound).get(args.type)
        w = TuckerWitness(found.type, found.rows, found.cols) if found else None
        record = {
            "requested": args.type,
            "status": "found" if found else "not-found",
            "witness": witness_record(M, report, w, "oracle") if w else None,
        }
        if args.json:
            print(_dump(record))
        else:
            print(f"type {args.type} (oracle): {record['status']}")
            if w:
                print(_text(record["witness"]).split("\n", 1)[1])
        return EXIT_OBSTRUCTION if w else EXIT_C1P
    ob = oracle_min_obstruction(N, bound)
    w = TuckerWitness(ob.type, ob.rows, ob.cols) if ob else None
    record = witness_record(M, report, w, "oracle")
    print(_dump(record) if args.json else _text(record))
    return EXIT_C1P if record["c1p"] else EXIT_OBSTRUCTION


def cmd_bench(args) -> int:
    spec = parse_generator(args.spec, args.seed)
    sizes = [int(s) for s in args.sizes.split(",")] if args.sizes else None
    rows = list(run_bench(spec, sizes, args.reps, args.detector or ["min-tucker"], args.workers))
    if args.median:
        rows = medians(rows)
    out = to_csv(rows)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="tuckermin",
        description="Consecutive ones property checks and minimum Tucker submatrices.",
    )
    p.add_argument("-v", "--verbose", action="store_true", help="log detector diagnostics")
    sub = p.add_subparsers(dest="command", required=True)

    def matrix_args(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("path", help="matrix file")
        sp.add_argument("--format", choices=["dense", "sparse"], default="dense")
        sp.add_argument("--json", action="store_true", help="print a JSON certificate")

    for name, help_ in (("check", "decide the C1P; print a minimum witness if absent"),
                        ("find-min", "find a minimum Tucker submatrix")):
        sp = sub.add_parser(name, help=help_)
        matrix_args(sp)
        sp.add_argument("--mode", choices=MODES, default="conditional",
                        help="type III/IV/V searches used by the global search")
        sp.add_argument("--workers", type=int, default=1)
        sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("find-type", help="run one per-type detector")
    matrix_args(sp)
    sp.add_argument("--type", required=True, type=str.upper, choices=list(TAGS))
    sp.add_argument("--mode", choices=MODES, default="exact")
    sp.set_defaults(func=cmd_find_type)

    sp = sub.add_parser("oracle", help="brute-force answer for small matrices")
    matrix_args(sp)
    sp.add_argument("--type", type=str.upper, choices=list(TAGS), help="smallest pattern of one type")
    sp.add_argument("--oracle-bound", type=int, default=DEFAULT_OBSTRUCTION_BOUND)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("bench", help="time detectors on generated instances (CSV)")
    sp.add_argument("spec", help="random(m,n,density[,seed]) | intervals(m,n,delta[,seed]) | "
                                 "planted(type,k,padding) | pattern(type,k)")
    sp.add_argument("--sizes", help="comma-separated values for the scale parameter")
    sp.add_argument("--reps", type=int, default=1)
    sp.add_argument("--detector", action="append", choices=sorted(DETECTORS))
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--median", action="store_true", help="one median row per size and detector")
    sp.add_argument("--output", help="write CSV here instead of stdout")
    sp.add_argument("--workers", type=int, default=1, help="worker processes for the min-tucker detectors")
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (OSError, MatrixParseError, OracleBoundError, UsageError, ValueError) as exc:
        print(f"tuckermin: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
