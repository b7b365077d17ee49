"""Small algebras shared by the tests."""
from skewalg.linalg import QQ
from skewalg.quiver import BoundQuiverAlgebra, Quiver, relation


def bound(vertices, arrows, rels=(), field=QQ):
    q = Quiver(list(vertices), arrows)
    return BoundQuiverAlgebra(q, [relation(q, *r) for r in rels], field)


def a2(field=QQ):
    return bound("12", [("a", "1", "2")], field=field)


def a3(field=QQ):
    return bound("123", [("a", "1", "2"), ("b", "2", "3")], field=field)


def a3_zigzag(field=QQ):
    return bound("123", [("a", "1", "2"), ("b", "3", "2")], field=field)


def d4_sink(field=QQ):
    return bound(["1", "2", "3", "4"], [("x", "2", "1"), ("y", "3", "1"), ("z", "4", "1")], field=field)


def d4_source(field=QQ):
    return bound(["1", "2", "3", "4"], [("x", "1", "2"), ("y", "1", "3"), ("z", "1", "4")], field=field)


def kronecker(field=QQ):
    return bound("12", [("a", "1", "2"), ("b", "1", "2")], field=field)


def dual_numbers(field=QQ):
    return bound("1", [("x", "1", "1")], [[(1, ["x", "x"])]], field=field)
