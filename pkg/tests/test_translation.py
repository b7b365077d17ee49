import pytest
from hypothesis import given
from hypothesis import strategies as st

from algebras import a3, a3_zigzag, d4_sink, d4_source
from skewalg.errors import NotTauEquivariant, SliceImagesInconsistent
from skewalg.groups import AlgebraAction, cyclic_group
from skewalg.modules import hom_dim, is_injective, projective, tau_inv
from skewalg.worked_example import SEED, SIGMA_LABELS, component, hprime
from skewalg.quiver import BoundQuiverAlgebra, Quiver
from skewalg.translation import (Section, hereditary_component, is_sectional, mesh_hom, section_action, section_endo,
                                 sigma_section, standard_slice, transfer_action, trivial_action, verify_section,
                                 z_delta)
from skewalg.isomorphism import iso_test

A2 = Quiver(["x", "y"], [("a", "x", "y")])
A3 = Quiver(["x", "y", "z"], [("a", "x", "y"), ("b", "y", "z")])
A5 = Quiver(["r1", "r2", "r3", "r4", "r5"], [("p", "r2", "r1"), ("q", "r2", "r3"), ("s", "r4", "r3"),
                                              ("t", "r4", "r5")])


@pytest.fixture(scope="module")
def fixture():
    return component()


def test_za2_window():
    tq = z_delta(A2, (0, 2))
    assert len(tq.vertices) == 6
    assert tq.tau(("x", 1)) == ("x", 0) and tq.tau_inv(("x", 1)) == ("x", 2)


@pytest.mark.parametrize("delta", [A2, A3, A5])
def test_orbit_count(delta):
    for window in [(0, 0), (-2, 3)]:
        assert len(z_delta(delta, window).orbits()) == len(delta.vertices)


def test_fixture_is_z_a5(fixture):
    tq, _ = fixture
    ref = z_delta(A5, tq.window)
    assert set(tq.vertices) == set(ref.vertices)
    assert {(a.source, a.target) for a in tq.arrows()} == {(a.source, a.target) for a in ref.arrows()}


def test_fixture_swap(fixture):
    tq, act = fixture
    names = {x: tq.name(x) for x in tq.vertices if x in tq.labels}
    by_name = {v: k for k, v in names.items()}
    for n in range(tq.window[0], tq.window[1] + 1):
        assert act.apply(1, ("r3", n)) == ("r3", n)
    assert act.apply(1, by_name["(1,3)_n"]) == by_name["(1',3')_n"]
    assert act.apply(1, by_name["(1',3')_n"]) == by_name["(1,3)_n"]
    assert act.check() == []


def test_trivial_actions():
    tq = z_delta(A3, (0, 2))
    triv = trivial_action(tq)
    assert all(triv.apply(0, x) == x for x in tq.vertices)
    tq2, act = hereditary_component(AlgebraAction.trivial(BoundQuiverAlgebra(A2, [])))
    assert all(act.apply(0, x) == x for x in tq2.vertices)


def test_action_must_commute_with_tau():
    tq = z_delta(A3, (0, 2))
    with pytest.raises((NotTauEquivariant, SliceImagesInconsistent)):
        transfer_action(tq, cyclic_group(2), {1: {("x", 0): ("y", 0), ("y", 0): ("x", 0), ("z", 0): ("z", 0)}})


def test_sectional_paths(fixture):
    tq = z_delta(A2, (0, 2))
    assert is_sectional(tq, [("x", 0), ("y", 0)])
    assert not is_sectional(tq, [("x", 0), ("y", 0), ("x", 1)])
    ftq, _ = fixture
    assert is_sectional(ftq, [("r2", 0), ("r3", 0)])


def test_trivial_slice_a2():
    tq = z_delta(A2, (0, 2))
    s = sigma_section(tq, trivial_action(tq), ("y", 0))
    assert len(s.vertices) == 2 and ("y", 0) in s.vertices
    assert not verify_section(s.tq, s, trivial_action(s.tq))


def test_trivial_slice_a3_end():
    tq = z_delta(A3, (0, 3))
    s = sigma_section(tq, trivial_action(tq), ("x", 0))
    assert sorted(s.vertices) == [("x", 0), ("y", 0), ("z", 0)]
    # the sectional paths out of the seed reach exactly these vertices
    for x in s.vertices[1:]:
        assert is_sectional(tq, [("x", 0)] + ([("y", 0)] if x == ("z", 0) else []) + [x])


def test_example_section(fixture):
    tq, act = fixture
    s = sigma_section(tq, act, SEED)
    assert sorted(s.names()) == sorted(SIGMA_LABELS)
    assert verify_section(s.tq, s, act) == []


def test_extra_translate_breaks_orbit_axiom(fixture):
    tq, act = fixture
    s = sigma_section(tq, act, SEED)
    bad = Section(s.tq, s.vertices + [("r3", 1)])
    assert "orbits" in {d.kind for d in verify_section(s.tq, bad, act)}


def test_dropping_a_partner_breaks_stability(fixture):
    tq, act = fixture
    s = sigma_section(tq, act, SEED)
    bad = Section(s.tq, [x for x in s.vertices if x != ("r4", 0)])
    kinds = {d.kind for d in verify_section(s.tq, bad, act)}
    assert {"G-stable", "orbits", "connected"} <= kinds


def test_mesh_hom_small():
    tq = z_delta(A2, (0, 2))
    assert mesh_hom(tq, ("x", 0), ("x", 0)).dim == 1
    assert mesh_hom(tq, ("x", 0), ("x", 1)).dim == 0


def test_mesh_hom_fixture(fixture):
    tq, _ = fixture
    assert mesh_hom(tq, ("r2", 0), ("r1", 0)).dim == 1


def _preprojective(alg):
    """tau^-n P_v for every v and n until injective."""
    out = {}
    for v in alg.quiver.vertices:
        M, n = projective(alg, v), 0
        while True:
            out[(v, n)] = M
            if is_injective(M):
                break
            M, n = tau_inv(M), n + 1
    return out


@pytest.mark.parametrize("make", [a3, a3_zigzag, d4_sink, d4_source])
def test_mesh_hom_matches_module_homs(make):
    alg = make()
    tq, _ = hereditary_component(AlgebraAction.trivial(alg))
    mods = _preprojective(alg)
    for x, X in mods.items():
        for y, Y in mods.items():
            assert mesh_hom(tq, x, y).dim == hom_dim(X, Y), (x, y)


def test_section_endo_small():
    tq = z_delta(A2, (0, 2))
    s = standard_slice(tq, ("x", 0))
    H = section_endo(tq, s)
    assert not H.relations and H.dimension == 3


def test_example_section_endo(fixture):
    tq, act = fixture
    s = sigma_section(tq, act, SEED)
    H = section_endo(s.tq, s)
    assert not H.relations and len(H.quiver.vertices) == 5 and H.dimension == 5 + 4 + 0
    assert iso_test(H, hprime())
    # the section itself has its sources at the two outer rows
    assert {(a.source, a.target) for a in s.arrows()} == {(("r2", 0), ("r1", 0)), (("r2", 0), ("r3", 0)),
                                                           (("r4", 0), ("r3", 0)), (("r4", 0), ("r5", 0))}


def test_example_section_action(fixture):
    tq, act = fixture
    s = sigma_section(tq, act, SEED)
    H = section_endo(s.tq, s)
    sa = section_action(s, act, H)
    assert sa.vertex[1] == {"r1@0": "r5@0", "r2@0": "r4@0", "r3@0": "r3@0", "r4@0": "r2@0", "r5@0": "r1@0"}


@given(st.sampled_from([A2, A3, A5]), st.integers(-3, 3), st.data())
def test_trivial_sections_are_standard_slices(delta, n, data):
    tq = z_delta(delta, (n, n + 2))
    x = (data.draw(st.sampled_from(list(delta.vertices))), n)
    s = sigma_section(tq, trivial_action(tq), x)
    assert sorted(s.vertices) == sorted(standard_slice(s.tq, x).vertices)
