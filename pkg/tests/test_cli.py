import csv
import io
import json

import pytest

from tuckermin.cli import main
from tuckermin.matrix import serialize_matrix
from tuckermin.patterns import TuckerType, classify_matrix
from tests.helpers import STAIRCASE, mat, pattern, with_edges


def write(tmp_path, M, name="m.txt", fmt="dense"):
    p = tmp_path / name
    p.write_text(serialize_matrix(M, fmt))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_staircase(tmp_path, capsys):
    code, out, _ = run(capsys, "check", write(tmp_path, mat(STAIRCASE)))
    assert code == 0 and out.strip() == "C1P: yes"


def test_check_pattern_iv_json(tmp_path, capsys):
    code, out, _ = run(capsys, "check", "--json", write(tmp_path, pattern("IV")))
    rec = json.loads(out)
    assert code == 1
    assert rec["type"] == "IV" and len(rec["rows"]) == 4 and len(rec["cols"]) == 6
    assert rec["size"] == 10 and rec["ell"] == 18


def test_missing_file(capsys):
    code, _, err = run(capsys, "check", "/nonexistent/m.txt")
    assert code == 2 and "error" in err


def test_parse_error(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("11\n1\n")
    code, _, err = run(capsys, "check", str(p))
    assert code == 2 and "line 2" in err


def test_witness_uses_original_indices(tmp_path, capsys):
    # zero row and zero column in front shift every index by one
    M = mat([[0, 0, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [0, 1, 0, 1]])
    code, out, _ = run(capsys, "find-min", "--json", write(tmp_path, M))
    rec = json.loads(out)
    assert code == 1
    assert rec["rows"] == [1, 2, 3] and rec["cols"] == [1, 2, 3]
    assert classify_matrix(M.submatrix(rec["rows"], rec["cols"])) == TuckerType("I", 1)


def test_sparse_labels(tmp_path, capsys):
    p = tmp_path / "s.txt"
    p.write_text("g1: a b\ng2: b c\ng3: a c\nempty:\n")
    code, out, _ = run(capsys, "check", "--json", "--format", "sparse", str(p))
    rec = json.loads(out)
    assert code == 1
    assert rec["rows"] == ["g1", "g2", "g3"] and rec["cols"] == ["a", "b", "c"]


def test_find_type_exact(tmp_path, capsys):
    code, out, _ = run(capsys, "find-type", "--type", "III", "--json", write(tmp_path, pattern("III", 2)))
    assert code == 1 and json.loads(out)["witness"]["size"] == 9
    code, out, _ = run(capsys, "find-type", "--type", "I", write(tmp_path, mat(STAIRCASE)))
    assert code == 0 and "not-found" in out


def test_find_type_superseded(tmp_path, capsys):
    M = with_edges(pattern("IV"), [(1, 1)])
    code, out, _ = run(capsys, "find-type", "--type", "IV", "--mode", "conditional", "--json", write(tmp_path, M))
    rec = json.loads(out)
    assert code == 0
    assert rec["status"] == "superseded" and rec["superseded_by"] == ["III"]


@pytest.mark.parametrize("argv", [["--type", "II"], ["--type", "I", "--mode", "conditional"]])
def test_find_type_refusals(tmp_path, capsys, argv):
    code, _, err = run(capsys, "find-type", *argv, write(tmp_path, pattern("I")))
    assert code == 2 and "use" in err


def test_oracle(tmp_path, capsys):
    path = write(tmp_path, pattern("II", 1))
    code, out, _ = run(capsys, "oracle", "--json", path)
    assert code == 1 and json.loads(out)["type"] == "II"
    code, out, _ = run(capsys, "oracle", "--type", "V", path)
    assert code == 0 and "not-found" in out
    code, _, err = run(capsys, "oracle", "--oracle-bound", "3", path)
    assert code == 2


def bench_rows(capsys, *argv):
    code, out, _ = run(capsys, "bench", *argv)
    assert code == 0
    return list(csv.DictReader(io.StringIO(out)))


def test_bench_random(capsys):
    rows = bench_rows(capsys, "random(20,20,0.3,seed=1)", "--reps", "3")
    assert len(rows) == 3
    assert [r["rep"] for r in rows] == ["0", "1", "2"]
    assert all(float(r["seconds"]) >= 0 for r in rows)


def test_bench_planted(capsys):
    rows = bench_rows(capsys, "planted(IV,1,15)", "--reps", "3")
    assert [r["result"] for r in rows] == ["IV:10"] * 3


def test_bench_pattern_type1(capsys):
    rows = bench_rows(capsys, "pattern(I,4)", "--detector", "type1")
    assert rows[0]["result"] == "I_4:12"


def test_bench_sizes_and_median(capsys):
    rows = bench_rows(capsys, "intervals(12,12,3)", "--sizes", "12,24", "--reps", "3", "--median",
                      "--detector", "type1", "--detector", "type4-cond")
    assert [(r["size"], r["detector"], r["rep"]) for r in rows] == [
        ("12", "type1", "median"), ("12", "type4-cond", "median"),
        ("24", "type1", "median"), ("24", "type4-cond", "median"),
    ]
    assert {r["result"] for r in rows} <= {"none", "not-found"}


def test_bench_bad_spec(capsys):
    code, _, err = run(capsys, "bench", "random(1,2)")
    assert code == 2


def test_bench_is_deterministic(capsys):
    a = bench_rows(capsys, "random(15,15,0.35)", "--seed", "4", "--reps", "2")
    b = bench_rows(capsys, "random(15,15,0.35)", "--seed", "4", "--reps", "2")
    strip = lambda rows: [{k: v for k, v in r.items() if k != "seconds"} for r in rows]
    assert strip(a) == strip(b)


def test_json_identical_across_workers(tmp_path, capsys):
    path = write(tmp_path, pattern("V"))
    outs = {run(capsys, "check", "--json", "--workers", w, path)[1] for w in ("1", "4", "1")}
    assert len(outs) == 1


def test_output_file(tmp_path, capsys):
    target = tmp_path / "bench.csv"
    code, out, _ = run(capsys, "bench", "pattern(V,1)", "--output", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("generator,")
