import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from algebras import a2, bound, dual_numbers
from skewalg.errors import MalformedQuiver, MalformedRelation, NotAdmissibleAtCap
from skewalg.worked_example import algebra_A
from skewalg.quiver import BoundQuiverAlgebra, Quiver, relation


@pytest.fixture(scope="module")
def A():
    return algebra_A()


def test_swap_example_is_valid(A):
    assert len(A.quiver.vertices) == 5 and len(A.relations) == 2


def test_basis_of_swap_example(A):
    names = sorted(str(p) for p in A.basis)
    assert A.dimension == 11
    expected = ["e_1", "e_1'", "e_2", "e_3", "e_3'", "alpha", "alpha'", "beta", "beta'",
                "alpha*beta'", "alpha'*beta"]
    assert names == sorted(expected)


def test_short_relation_rejected():
    q = Quiver(["1", "2"], [("a", "1", "2")])
    with pytest.raises(MalformedRelation):
        BoundQuiverAlgebra(q, [relation(q, (1, ["a"]))])


def test_mixed_endpoints_rejected():
    q = Quiver(["1", "2", "3", "4"], [("a", "1", "2"), ("b", "2", "3"), ("c", "2", "4")])
    with pytest.raises(MalformedRelation):
        BoundQuiverAlgebra(q, [relation(q, (1, ["a", "b"]), (1, ["a", "c"]))])


def test_unknown_vertex_rejected():
    with pytest.raises(MalformedQuiver):
        Quiver(["1"], [("a", "1", "2")])


def test_empty_quiver_rejected():
    with pytest.raises(MalformedQuiver):
        BoundQuiverAlgebra(Quiver([], []))


def test_small_dimensions():
    assert a2().dimension == 3
    assert dual_numbers().dimension == 2


def test_loop_without_relation_is_not_admissible():
    with pytest.raises(NotAdmissibleAtCap):
        bound("1", [("x", "1", "1")])


def test_idempotent_squares(A):
    for v in A.quiver.vertices:
        e = A.vertex_idempotent(v)
        assert A.multiply(e, e) == e


def test_relation_kills_product(A):
    assert A.multiply(A.arrow_element("alpha"), A.arrow_element("beta")) == [0] * A.dimension


def test_surviving_product(A):
    prod = A.multiply(A.arrow_element("alpha"), A.arrow_element("beta'"))
    assert prod == A.path_element(["alpha", "beta'"]) and any(prod)


def test_unit(A):
    one = A.unit()
    for i in range(A.dimension):
        x = A.basis_vector(i)
        assert A.multiply(one, x) == x == A.multiply(x, one)


def test_opposite(A):
    Aop = A.opposite()
    assert Aop.dimension == 11
    assert Aop.opposite().structurally_equal(A)
    r = a2().opposite()
    (arr,) = r.quiver.arrows
    assert (arr.source, arr.target) == ("2", "1")


def test_opposite_multiplication_reversed(A):
    Aop = A.opposite()
    x = Aop.multiply(Aop.arrow_element("beta'"), Aop.arrow_element("alpha"))
    assert any(x)


@st.composite
def dags(draw):
    n = draw(st.integers(1, 5))
    verts = [str(i) for i in range(n)]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=6)) if pairs else []
    arrows = [(f"a{k}", str(i), str(j)) for k, (i, j) in enumerate(chosen)]
    return verts, arrows


@given(dags())
def test_path_count_matches_adjacency_oracle(g):
    verts, arrows = g
    n = len(verts)
    adj = sympy.zeros(n, n)
    for _, s, t in arrows:
        adj[int(s), int(t)] += 1
    total = sympy.zeros(n, n)
    power = sympy.eye(n)
    for _ in range(n):
        total += power
        power = power * adj
    alg = bound(verts, arrows)
    assert alg.dimension == sum(total)


@settings(max_examples=30)
@given(dags())
def test_associativity_on_basis(g):
    alg = bound(*g)
    b = [alg.basis_vector(i) for i in range(alg.dimension)]
    for x in b:
        for y in b:
            for z in b:
                assert alg.multiply(alg.multiply(x, y), z) == alg.multiply(x, alg.multiply(y, z))
