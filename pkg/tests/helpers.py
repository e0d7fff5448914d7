import random


from tuckermin.bigraph import build_graph
from tuckermin.matrix import BinaryMatrix
from tuckermin.patterns import TuckerType, generate


def mat(rows):
    return BinaryMatrix.from_lists(rows)


def graph(rows):
    return build_graph(mat(rows) if not isinstance(rows, BinaryMatrix) else rows)


def pattern(tag, k=1):
    return generate(TuckerType(tag, k)).matrix()


def with_edges(M, edges):
    """Copy of ``M`` with extra ones at the given (row, col) positions."""
    rows = list(M.rows)
    for r, c in edges:
        rows[r] |= 1 << c
    return BinaryMatrix(M.m, M.n, tuple(rows))


def random_matrices(count, max_m, max_n, seed, densities=(0.2, 0.4, 0.6), min_dim=1):
    rng = random.Random(seed)
    for i in range(count):
        m = rng.randint(min_dim, max_m)
        n = rng.randint(min_dim, max_n)
        p = densities[i % len(densities)]
        yield BinaryMatrix(m, n, tuple(sum(1 << j for j in range(n) if rng.random() < p) for _ in range(m)))


STAIRCASE = [[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]]
C6 = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]





# (criterion, passed, detail) lines collected by the acceptance suite
ACCEPTANCE: list[tuple[str, bool, str]] = []
