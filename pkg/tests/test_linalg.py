import random
from fractions import Fraction

from nakayama.linalg import Matrix, kernel, rank, rref, solve
from nakayama.scalars import QQ, QQ_q

Q = QQ_q.q


def rand_matrix(rng, rows, cols, field=QQ):
    return Matrix.from_rows(
        [[Fraction(rng.randint(-3, 3)) for _ in range(cols)] for _ in range(rows)],
        field,
    )


def test_rref_identity():
    m = Matrix.identity(4, QQ)
    red, rk, piv = rref(m)
    assert red == m and rk == 4 and piv == [0, 1, 2, 3]


def test_rref_zero():
    m = Matrix.zero(3, 5, QQ)
    red, rk, piv = rref(m)
    assert red == m and rk == 0 and piv == []


def test_rref_rank_one_over_function_field():
    # 2x2 determinant oracle: q*q - q^2 = 0, so the rank is 1
    m = Matrix.from_rows([[1, Q], [Q, Q * Q]], QQ_q)
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    assert not det
    _, rk, _ = rref(m)
    assert rk == 1


def test_kernel_identity_and_zero():
    assert kernel(Matrix.identity(3, QQ)) == []
    basis = kernel(Matrix.zero(2, 4, QQ))
    assert len(basis) == 4


def test_kernel_substitute_back():
    m = Matrix.from_rows([[1, Q]], QQ_q)
    basis = kernel(m)
    assert len(basis) == 1
    v = basis[0]
    assert not any(m.apply(v))
    # spanned by (-q, 1)
    assert v[0] == -Q and v[1] == QQ_q.one


def test_solve_identity():
    m = Matrix.identity(3, QQ)
    b = [Fraction(1), Fraction(-2), Fraction(5)]
    assert solve(m, b) == b


def test_solve_inconsistent():
    m = Matrix.from_rows([[1], [1]], QQ)
    assert solve(m, [Fraction(1), Fraction(2)]) is None


def test_solve_function_field_substitute_back():
    m = Matrix.from_rows([[Q]], QQ_q)
    x = solve(m, [Q * Q])
    assert x == [Q]
    assert m.apply(x) == [Q * Q]


def test_rref_idempotent():
    rng = random.Random(5)
    for _ in range(25):
        m = rand_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        red, _, _ = rref(m)
        red2, _, _ = rref(red)
        assert red == red2


def test_rank_nullity():
    rng = random.Random(9)
    for _ in range(25):
        m = rand_matrix(rng, rng.randint(1, 5), rng.randint(1, 6))
        assert rank(m) + len(kernel(m)) == m.cols


def test_kernel_vectors_annihilated():
    rng = random.Random(13)
    for _ in range(15):
        m = rand_matrix(rng, 3, 5)
        for v in kernel(m):
            assert not any(m.apply(v))
