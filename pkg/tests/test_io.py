import json

import pytest

from skewalg import io
from skewalg.ar import knit
from skewalg.errors import InputError, SchemaError
from skewalg.isomorphism import iso_test
from skewalg.modules import is_isomorphic
from skewalg.worked_example import _data, algebra_A, boxed_T, component, hprime, swap_A


def roundtrip(doc):
    return json.loads(io.dumps(doc))


def test_algebra_roundtrip():
    A = algebra_A()
    B = io.parse_algebra(roundtrip(io.algebra_to_doc(A)))
    assert B.structurally_equal(A)


def test_action_roundtrip():
    A = algebra_A()
    act = swap_A(A)
    again = io.parse_action(roundtrip(io.action_to_doc(act)), A)
    assert again.vertex == act.vertex and again.arrow == act.arrow


def test_module_roundtrip():
    H = hprime()
    T = boxed_T(H)
    doc = roundtrip(io.module_to_doc(T, io.algebra_to_doc(H)))
    T2 = io.parse_module(doc)
    assert T2.dims == T.dims and is_isomorphic(io.parse_module(doc, H), T)


def test_module_relative_algebra_path():
    with open(_data("module_T.json")) as fh:
        doc = json.load(fh)
    M = io.parse_module(doc, base_dir=_data("."))
    assert M.dim_vector() == boxed_T().dim_vector()


def test_component_roundtrip():
    tq, act = component()
    tq2, act2 = io.parse_component(roundtrip(io.component_to_doc(tq, act)))
    assert tq2.vertices == tq.vertices and tq2.labels == tq.labels
    assert all(act2.apply(1, x) == act.apply(1, x) for x in tq.vertices)


def test_gf_field_scalars():
    doc = io.algebra_to_doc(algebra_A())
    doc["field"] = "GF(5)"
    doc["relations"].append([{"coef": "3/2", "path": ["alpha'", "beta"]}])
    alg = io.parse_algebra(doc)
    assert str(alg.field) == "GF(5)" and alg.dimension == 10


@pytest.mark.parametrize("mutate", [
    lambda d: d.update(colour="red"),
    lambda d: d.pop("vertices"),
    lambda d: d["arrows"].append({"name": "x", "from": "1"}),
    lambda d: d.update(field="R"),
    lambda d: d.update(vertices=[], arrows=[], relations=[]),
])
def test_schema_errors(mutate):
    doc = io.algebra_to_doc(algebra_A())
    mutate(doc)
    with pytest.raises(SchemaError):
        io.parse_algebra(doc)


def test_bad_json(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(SchemaError):
        io.load_json(p)


def test_missing_file(tmp_path):
    with pytest.raises(InputError):
        io.load_json(tmp_path / "absent.json")


def test_module_wrong_shape():
    doc = io.module_to_doc(boxed_T(), io.algebra_to_doc(hprime()))
    doc["dims"]["1"] = 7
    with pytest.raises(InputError):
        io.parse_module(doc)


def test_dumps_deterministic():
    doc = io.algebra_to_doc(algebra_A())
    assert io.dumps(doc) == io.dumps(json.loads(io.dumps(doc)))


def test_dot_stable():
    H = hprime()
    a = io.ar_to_dot(knit(H))
    b = io.ar_to_dot(knit(hprime()))
    assert a == b and a.startswith("digraph")
    q = io.quiver_to_dot(H.quiver)
    assert q.count("->") == len(H.quiver.arrows)
    tq, _ = component()
    assert io.translation_to_dot(tq) == io.translation_to_dot(component()[0])


def test_iso_after_roundtrip_of_fixtures():
    from skewalg.worked_example import square, d4_star
    for make in (square, d4_star):
        alg = make()
        assert iso_test(io.parse_algebra(roundtrip(io.algebra_to_doc(alg))), alg)
