import pytest

from tuckermin.matrix import BinaryMatrix
from tuckermin.oracle import (
    OracleBoundError,
    oracle_all_obstructions,
    oracle_c1p,
    oracle_c1p_order,
    oracle_is_minimal_pattern,
    oracle_min_by_type,
    oracle_min_obstruction,
)
from tuckermin.patterns import TuckerType
from tests.helpers import C6, STAIRCASE, mat, pattern


def test_single_row():
    assert oracle_c1p(mat([[1, 0, 1]]))


def test_c6_is_not_c1p():
    assert not oracle_c1p(mat(C6))


def test_all_ones():
    assert oracle_c1p(mat([[1] * 4] * 3))


def test_order_is_valid():
    M = mat([[1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 0, 1]])
    order = oracle_c1p_order(M)
    assert order is not None
    for r in M.rows:
        pos = [order.index(j) for j in range(M.n) if r >> j & 1]
        assert max(pos) - min(pos) + 1 == len(pos)


def test_bound_refusal():
    with pytest.raises(OracleBoundError):
        oracle_c1p(BinaryMatrix(1, 10, (1,)))
    with pytest.raises(OracleBoundError):
        oracle_min_obstruction(BinaryMatrix(8, 1, (1,) * 8))


def test_min_obstruction_pattern_v():
    ob = oracle_min_obstruction(pattern("V"))
    assert (ob.rows, ob.cols, ob.type) == ((0, 1, 2, 3), (0, 1, 2, 3, 4), TuckerType("V"))


def test_min_obstruction_with_duplicate_row():
    ob = oracle_min_obstruction(mat(C6 + [C6[0]]))
    assert ob.size == 6
    assert ob.type == TuckerType("I", 1)


def test_min_obstruction_c1p():
    assert oracle_min_obstruction(mat(STAIRCASE)) is None


@pytest.mark.parametrize("tag", ["I", "IV", "V"])
def test_patterns_minimal(tag):
    assert oracle_is_minimal_pattern(pattern(tag))


def test_non_minimal():
    assert not oracle_is_minimal_pattern(mat(STAIRCASE))
    assert not oracle_is_minimal_pattern(mat(C6 + [[1, 1, 1]]))


def test_all_obstructions_of_chorded_cycle():
    # C8 with a chord splitting it into C6 and C4: the only pattern is the C6
    M = mat([[1, 1, 1, 0], [0, 1, 1, 0], [0, 0, 1, 1], [1, 0, 0, 1]])
    obs = oracle_all_obstructions(M)
    assert [o.type for o in obs] == [TuckerType("I", 1)]
    assert oracle_min_by_type(M).keys() == {"I"}
