from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from skewalg.linalg import GF, QQ, identity, inverse, kernel_basis, matmul, rank, rref, solve, transpose

F = Fraction


def q(rows):
    return [[F(x) for x in r] for r in rows]


def test_rref_identity():
    R, rk, piv = rref(identity(QQ, 2))
    assert R == identity(QQ, 2) and rk == 2 and piv == [0, 1]


def test_rref_dependent_rows():
    R, rk, _ = rref(q([[1, 2], [2, 4]]))
    assert R == q([[1, 2], [0, 0]]) and rk == 1


def test_rank_mod_two():
    F2 = GF(2)
    m = [[F2(1), F2(1)], [F2(1), F2(2)]]
    R, rk, _ = rref(m)
    assert rk == 2
    assert R == identity(F2, 2)


def test_solve_identity():
    assert solve(identity(QQ, 3), q([[4, 5, 6]])[0]) == q([[4, 5, 6]])[0]


def test_solve_free_variable_zeroed():
    assert solve(q([[1, 1]]), [F(2)]) == [F(2), F(0)]


def test_solve_inconsistent():
    assert solve(q([[1], [1]]), [F(1), F(2)]) is None


def test_kernel_identity_empty():
    assert kernel_basis(identity(QQ, 2)) == []


def test_kernel_of_zero():
    assert kernel_basis(q([[0, 0], [0, 0]])) == q([[1, 0], [0, 1]])


def test_kernel_row():
    (v,) = kernel_basis(q([[1, 2]]))
    assert v == [F(-2), F(1)]


def test_inverse_singular():
    with pytest.raises(ZeroDivisionError):
        inverse(q([[1, 2], [2, 4]]))


def test_gf_requires_prime():
    with pytest.raises(ValueError):
        GF(6)


def test_gf_arithmetic():
    F5 = GF(5)
    assert F5(3) * F5(2) == F5(1)
    assert 1 / F5(2) == F5(3)
    assert F5.has_roots_of_unity(4) and not F5.has_roots_of_unity(3)
    assert QQ.has_roots_of_unity(2) and not QQ.has_roots_of_unity(3)


small = st.integers(-3, 3)
matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(lambda c: st.lists(st.lists(small, min_size=c, max_size=c),
                                                           min_size=r, max_size=r)))


@given(matrices)
def test_rank_matches_sympy(m):
    assert rank(q(m)) == sympy.Matrix(m).rank()


@given(matrices)
def test_kernel_is_kernel_of_full_dimension(m):
    a = q(m)
    ker = kernel_basis(a)
    assert len(ker) == len(m[0]) - sympy.Matrix(m).rank()
    for v in ker:
        assert all(sum(x * y for x, y in zip(row, v)) == 0 for row in a)


@given(matrices, st.lists(small, min_size=4, max_size=4))
def test_solve_against_sympy(m, b):
    a = q(m)
    rhs = [F(x) for x in b[:len(m)]]
    x = solve(a, rhs)
    M = sympy.Matrix(m)
    consistent = M.rank() == M.row_join(sympy.Matrix(b[:len(m)])).rank()
    assert (x is not None) == consistent
    if x is not None:
        assert [sum(r * xi for r, xi in zip(row, x)) for row in a] == rhs


@given(matrices)
def test_rref_over_gf5_is_idempotent(m):
    F5 = GF(5)
    a = [[F5(x) for x in r] for r in m]
    R, rk, _ = rref(a)
    assert rref(R)[0] == R
    assert rk <= min(len(m), len(m[0]))


@given(matrices)
def test_transpose_product(m):
    a = q(m)
    at = transpose(a)
    assert transpose(matmul(a, at)) == matmul(a, at)
