import pytest

from algebras import a2, bound
from skewalg.groups import skew_basic_presentation, skew_group_algebra
from skewalg.isomorphism import iso_test
from skewalg.linalg import GF, QQ
from skewalg.worked_example import algebra_A, swap_A
from skewalg.structure import (StructureAlgebra, basic_presentation, from_bound_quiver, idempotent_classes,
                               lift_idempotents, matrix_algebra, product_algebra, trace_radical, upper_triangular)


def bare(sa):
    """Same table with no structural radical hint, so the generic route runs."""
    return StructureAlgebra(sa.field, sa.table, sa.unit)


@pytest.fixture(scope="module")
def skew():
    A = algebra_A()
    return A, skew_group_algebra(A, swap_A(A))


def test_from_bound_quiver_dimensions(skew):
    A, _ = skew
    assert from_bound_quiver(A).dim == 11
    assert from_bound_quiver(bound("1", [])).dim == 1


def test_a2_unit_is_sum_of_idempotents():
    alg = a2()
    sa = from_bound_quiver(alg)
    assert sa.dim == 3
    e = [x + y for x, y in zip(alg.vertex_idempotent("1"), alg.vertex_idempotent("2"))]
    assert sa.unit == e
    assert sa.check_associative() and sa.check_unit()


def test_radical_upper_triangular():
    assert len(upper_triangular(QQ).radical()) == 1


def test_radical_semisimple():
    assert product_algebra(QQ, 2).radical() == []


def test_radical_of_skew_example(skew):
    A, S = skew
    assert S.dim == 22
    assert len(from_bound_quiver(A).radical()) == 6
    assert len(S.radical()) == 12


def test_structural_radical_agrees_with_trace_form(skew):
    _, S = skew
    structural = S.span(S.radical())
    generic = S.span(trace_radical(bare(S)))
    assert len(structural) == len(generic) == 12
    assert S.span(structural + generic) == structural


def test_trace_radical_needs_large_characteristic():
    from skewalg.errors import UnsupportedCharacteristic
    with pytest.raises(UnsupportedCharacteristic):
        bare(matrix_algebra(GF(2), 2)).radical()


def test_idempotents_product():
    idems = lift_idempotents(product_algebra(QQ, 2))
    assert sorted(map(tuple, idems)) == [(0, 1), (1, 0)]


def test_idempotents_matrix_algebra():
    M = matrix_algebra(QQ, 2)
    idems = lift_idempotents(M)
    assert len(idems) == 2
    assert len(idempotent_classes(M, idems)) == 1
    for e in idems:
        assert M.multiply(e, e) == e


def test_skew_idempotents(skew):
    _, S = skew
    idems = lift_idempotents(S)
    assert len(idems) == 6
    classes = idempotent_classes(S, idems)
    # one class per orbit with free stabilizer, one per character of a fixed vertex
    assert sorted(len(c) for c in classes) == [1, 1, 2, 2]
    for i, e in enumerate(idems):
        for j, f in enumerate(idems):
            prod = S.multiply(e, f)
            assert prod == (e if i == j else S.zero())
    total = S.zero()
    for e in idems:
        total = S.add(total, e)
    assert total == S.unit


def test_basic_presentation_of_skew(skew):
    _, S = skew
    bp = skew_basic_presentation(S)
    assert len(bp.algebra.quiver.vertices) == 4
    assert len(bp.algebra.quiver.arrows) == 4
    assert len(bp.algebra.relations) == 1
    assert sorted(bp.multiplicities.values()) == [1, 1, 2, 2]
    assert bp.algebra.dimension == 4 + 4 + 1


def test_basic_presentation_matrix_algebra():
    bp = basic_presentation(matrix_algebra(QQ, 2))
    assert len(bp.algebra.quiver.vertices) == 1 and not bp.algebra.quiver.arrows
    assert list(bp.multiplicities.values()) == [2]


def test_basic_presentation_of_basic_algebra_is_itself(skew):
    A, _ = skew
    bp = basic_presentation(from_bound_quiver(A))
    assert iso_test(bp.algebra, A)


def test_basic_presentation_image_is_multiplicative(skew):
    _, S = skew
    bp = skew_basic_presentation(S)
    B = bp.algebra
    for i in range(B.dimension):
        for j in range(B.dimension):
            x, y = B.basis_vector(i), B.basis_vector(j)
            assert bp.image(B.multiply(x, y)) == S.multiply(bp.image(x), bp.image(y))
