"""Exact linear algebra: echelon forms, Smith normal form, polynomial gcds."""

from fractions import Fraction

from greenring import linalg
from greenring.cyclotomic import zeta, rational


def _frac(mat):
    return [[Fraction(e) for e in row] for row in mat]


def test_rank_and_nullspace():
    mat = _frac([[1, 2, 3], [2, 4, 6], [1, 1, 1]])
    assert linalg.rank(mat) == 2
    null = linalg.nullspace(mat)
    assert len(null) == 1
    vec = null[0]
    assert all(
        sum(row[k] * vec[k] for k in range(3)) == 0 for row in mat
    )


def test_solve_and_inverse():
    mat = _frac([[2, 1], [1, 1]])
    sol = linalg.solve(mat, [Fraction(3), Fraction(2)])
    assert sol == [Fraction(1), Fraction(1)]
    inv = linalg.inverse(mat)
    assert linalg.mat_mul(mat, inv) == linalg.identity_matrix(2)
    assert linalg.inverse(_frac([[1, 2], [2, 4]])) is None


def test_smith_normal_form():
    assert linalg.smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, 4, 16]]) == [2, 2, 156]
    assert linalg.integer_rank([[1, 2], [2, 4]]) == 1
    assert linalg.is_unimodular([[1, 1], [1, 2]])
    assert not linalg.is_unimodular([[2, 0], [0, 1]])
    assert linalg.smith_normal_form([[0, 0], [0, 0]]) == [0, 0]


def test_column_solver():
    cols = [[Fraction(1), Fraction(0), Fraction(1)], [Fraction(0), Fraction(1), Fraction(1)]]
    solver = linalg.ColumnSolver(cols)
    assert solver.coordinates([Fraction(2), Fraction(3), Fraction(5)]) == [2, 3]
    assert solver.coordinates([Fraction(1), Fraction(0), Fraction(0)]) is None


def test_cyclotomic_matrices():
    z = zeta(4)
    mat = [[z, rational(0)], [rational(0), z]]
    assert linalg.rank(mat) == 2
    inv = linalg.inverse(mat)
    assert inv[0][0] == zeta(4, 3)


def test_poly_gcd_and_distinct_roots():
    one = rational(1)
    # (x - 1)^2 (x + 1) = x^3 - x^2 - x + 1: two distinct roots
    p = [one, -one, -one, one]
    assert linalg.distinct_root_count(p) == 2
    # x^2 + 1 over Q(zeta4): roots +-i, both simple
    q = [one, one * 0, one]
    assert linalg.distinct_root_count(q) == 2
    g = linalg.poly_gcd([one * -1, one], [one * -1, one])  # gcd(x-1, x-1) = x-1, monic
    assert g == [-one, one]


def test_kronecker():
    a = _frac([[1, 2], [3, 4]])
    b = _frac([[0, 1], [1, 0]])
    k = linalg.kronecker(a, b)
    assert k[0] == [0, 1, 0, 2]
    assert k[3] == [3, 0, 4, 0]
