"""Invariants over random G-quivers."""
from hypothesis import given, settings
from hypothesis import strategies as st

from skewalg.groups import check_action, skew_basic_presentation, skew_group_algebra, twist, twist_hom
from skewalg.induction import SkewContext, free_induce
from skewalg.modules import hom_space, is_isomorphic
from skewalg.structure import idempotent_classes, lift_idempotents
from strategies import g_quivers, modules, splits


@settings(max_examples=15)
@given(g_quivers(max_vertices=3))
def test_skew_algebra_is_unital_associative(inst):
    alg, act = inst
    S = skew_group_algebra(alg, act)
    assert S.dim == act.group.order * alg.dimension
    assert S.check_unit() and S.check_associative()


@settings(max_examples=40)
@given(g_quivers())
def test_action_is_a_group_action(inst):
    alg, act = inst
    check_action(alg, act)
    G = act.group
    for g in range(G.order):
        for h in range(G.order):
            for v in alg.quiver.vertices:
                assert act.vertex[G.mul(g, h)][v] == act.vertex[g][act.vertex[h][v]]


@settings(max_examples=30)
@given(g_quivers())
def test_simple_count_of_skew_algebra(inst):
    """With abelian G over a splitting field, each vertex orbit contributes
    one simple per character of its stabilizer, with multiplicity the orbit size."""
    alg, act = inst
    if not splits(act):
        return
    S = skew_group_algebra(alg, act)
    idems = lift_idempotents(S)
    classes = idempotent_classes(S, idems)
    expected, mults = 0, []
    for orbit in act.orbits():
        stab = len(act.stabilizer(orbit[0]))
        expected += stab
        mults.extend([len(orbit)] * stab)
    assert len(classes) == expected
    assert sorted(len(c) for c in classes) == sorted(mults)
    bp = skew_basic_presentation(S)
    assert len(bp.algebra.quiver.vertices) == expected


@settings(max_examples=40)
@given(g_quivers(), st.data())
def test_twists_compose(inst, data):
    alg, act = inst
    M = data.draw(modules(alg))
    G = act.group
    for g in range(G.order):
        for h in range(G.order):
            lhs = twist(twist(M, h, act), g, act)
            rhs = twist(M, G.mul(g, h), act)
            assert lhs.dims == rhs.dims and lhs.maps == rhs.maps


@settings(max_examples=25)
@given(g_quivers(max_vertices=4), st.data())
def test_twist_preserves_homs(inst, data):
    alg, act = inst
    M = data.draw(modules(alg))
    N = data.draw(modules(alg))
    basis = hom_space(M, N)
    for g in range(act.group.order):
        assert len(hom_space(twist(M, g, act), twist(N, g, act))) == len(basis)
        for h in basis:
            assert twist_hom(h, g, act).check()


@settings(max_examples=40)
@given(g_quivers(), st.data())
def test_free_induction_is_equivariant(inst, data):
    alg, act = inst
    M = data.draw(modules(alg))
    Y = free_induce(M, act)
    assert Y.check()
    assert Y.rep.total_dim == act.group.order * M.total_dim
    assert not Y.rep.relation_defects()


@settings(max_examples=25)
@given(g_quivers(max_vertices=4), st.data())
def test_induction_roundtrip_through_basic(inst, data):
    alg, act = inst
    if not splits(act):
        return
    ctx = SkewContext(act)
    M = data.draw(modules(alg))
    Z = ctx.induce(M)
    assert not Z.relation_defects()
    Y = ctx.to_eq(Z)
    assert Y.check()
    assert is_isomorphic(Y.rep, free_induce(M, act).rep)
