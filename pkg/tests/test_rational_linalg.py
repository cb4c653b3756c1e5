import random

from qkverify.rational_linalg import (
    QQ, Matrix, LinearSubspace, rank, rank_naive, rref, kernel, solve,
    column_space, orthogonal_complement, subspace_equal,
    rational_str, parse_rational, random_rational_matrix, Polynomial,
)


def test_rational_strings():
    assert rational_str(QQ(3, 6)) == "1/2"
    assert rational_str(QQ(-4, 2)) == "-2"
    assert parse_rational("7/3") == QQ(7, 3)
    assert parse_rational("-5") == QQ(-5)


def test_rank_small():
    m = Matrix.from_rows([[1, 2], [2, 4]])
    assert rank(m) == 1
    assert rank_naive(m) == 1
    assert rank(Matrix.identity(5)) == 5


def test_rank_matches_naive_seeded():
    rng = random.Random(3)
    for _ in range(25):
        m = random_rational_matrix(rng, rng.randint(1, 8), rng.randint(1, 8),
                                   density=0.6)
        assert rank(m) == rank_naive(m)


def test_rank_nullity_seeded():
    rng = random.Random(4)
    for _ in range(20):
        m = random_rational_matrix(rng, rng.randint(1, 9), rng.randint(1, 9),
                                   density=0.5)
        assert rank(m) + kernel(m).dim == m.cols


def test_rref_is_canonical():
    # two different spanning sets of the same space reduce identically
    rows_a = [[1, 2, 3], [0, 1, 1]]
    rows_b = [[2, 5, 7], [1, 3, 4]]
    ra, pa = rref(Matrix.from_rows(rows_a))
    rb, pb = rref(Matrix.from_rows(rows_b))
    assert pa == pb
    assert ra == rb


def test_solve_consistent_and_inconsistent():
    m = Matrix.from_rows([[1, 1], [1, -1]])
    rhs = Matrix.from_rows([[2], [0]])
    x = solve(m, rhs)
    assert x is not None
    assert (m * x) == rhs
    bad = Matrix.from_rows([[1, 1], [2, 2]])
    assert solve(bad, Matrix.from_rows([[1], [3]])) is None


def test_subspace_operations():
    a = LinearSubspace.from_vectors([{0: QQ(1)}, {1: QQ(1)}], 3)
    b = LinearSubspace.from_vectors([{1: QQ(1)}, {2: QQ(1)}], 3)
    assert a.sum(b).dim == 3
    inter = a.intersection(b)
    assert inter.dim == 1
    assert inter.contains({1: QQ(5)})
    comp = orthogonal_complement(a)
    assert comp.dim == 1
    assert comp.contains({2: QQ(1)})
    assert subspace_equal(a, LinearSubspace.from_vectors(
        [{0: QQ(2), 1: QQ(2)}, {1: QQ(-1)}], 3))


def test_matvec_and_mul_agree():
    rng = random.Random(5)
    m = random_rational_matrix(rng, 6, 4, density=0.7)
    v = {i: QQ(rng.randint(-5, 5), rng.randint(1, 4)) for i in range(4)}
    col = Matrix.from_columns([v], 4)
    prod = m * col
    mv = m.matvec(v)
    for i in range(6):
        assert prod[i, 0] == mv.get(i, QQ(0))


def test_column_space_dim():
    m = Matrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 0, 1]])
    assert column_space(m).dim == rank(m) == 2


def test_polynomial_arithmetic():
    n = Polynomial.n()
    p = (2 * n + 1) * (n - 2)
    assert p.coeffs == {0: QQ(-2), 1: QQ(-3), 2: QQ(2)}
    assert (p - p).is_zero()
    assert p(QQ(3)) == 7
