"""JSON file formats and Graphviz export.

Scalars travel as strings ("3", "-1/2", "4 mod 5") so nothing passes
through floating point.  Every document is validated against a JSON schema
that rejects unknown keys.
"""
from __future__ import annotations

import json
from pathlib import Path as FsPath

import jsonschema

from .errors import InputError, SchemaError
from .groups import AlgebraAction, FiniteGroup, check_action
from .linalg import FieldSpec
from .modules import Rep
from .quiver import BoundQuiverAlgebra, Quiver, Relation
from .translation import ComponentAction, TranslationQuiver, parse_vertex_key, transfer_action, vertex_key

_NAME = {"type": "string", "minLength": 1}
_SCALAR = {"type": ["string", "integer"]}
_ARROW = {"type": "object", "additionalProperties": False, "required": ["name", "from", "to"],
          "properties": {"name": _NAME, "from": _NAME, "to": _NAME}}
_QUIVER_PROPS = {"vertices": {"type": "array", "minItems": 1, "items": _NAME},
                 "arrows": {"type": "array", "items": _ARROW}}
_GROUP_PROPS = {"elements": {"type": "array", "items": _NAME, "minItems": 1},
                "mult_table": {"type": "array", "items": {"type": "array", "items": _NAME}}}

ALGEBRA_SCHEMA = {
    "type": "object", "additionalProperties": False,
    "required": ["field", "vertices", "arrows"],
    "properties": {
        "field": {"type": "string"},
        **_QUIVER_PROPS,
        "relations": {"type": "array", "items": {"type": "array", "minItems": 1, "items": {
            "type": "object", "additionalProperties": False, "required": ["coef", "path"],
            "properties": {"coef": _SCALAR, "path": {"type": "array", "items": _NAME, "minItems": 1}}}}},
    },
}

ACTION_SCHEMA = {
    "type": "object", "additionalProperties": False,
    "required": ["elements", "mult_table", "per_element"],
    "properties": {
        **_GROUP_PROPS,
        "per_element": {"type": "object", "additionalProperties": {
            "type": "object", "additionalProperties": False, "required": ["vertex_images", "arrow_images"],
            "properties": {
                "vertex_images": {"type": "object", "additionalProperties": _NAME},
                "arrow_images": {"type": "object", "additionalProperties": {
                    "type": "object", "additionalProperties": False, "required": ["arrow"],
                    "properties": {"arrow": _NAME, "scalar": _SCALAR}}}}}},
    },
}

MODULE_SCHEMA = {
    "type": "object", "additionalProperties": False,
    "required": ["algebra", "dims", "matrices"],
    "properties": {
        "algebra": {"type": ["string", "object"]},
        "name": {"type": "string"},
        "dims": {"type": "object", "additionalProperties": {"type": "integer", "minimum": 0}},
        "matrices": {"type": "object", "additionalProperties": {
            "type": "array", "items": {"type": "array", "items": _SCALAR}}},
    },
}

COMPONENT_SCHEMA = {
    "type": "object", "additionalProperties": False,
    "required": ["delta", "window"],
    "properties": {
        "delta": {"type": "object", "additionalProperties": False, "required": ["vertices", "arrows"],
                  "properties": _QUIVER_PROPS},
        "window": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
        "labels": {"type": "object", "additionalProperties": {"type": "string"}},
        "group": {"type": "object", "additionalProperties": False, "required": ["elements", "mult_table"],
                  "properties": _GROUP_PROPS},
        "slice_images": {"type": "object", "additionalProperties": {
            "type": "object", "additionalProperties": _NAME}},
    },
}


def validate(doc, schema, what: str):
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as e:
        where = "/".join(str(p) for p in e.absolute_path) or "<root>"
        raise SchemaError(f"{what}: {e.message} at {where}") from None


def load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise SchemaError(f"{path}: invalid JSON ({e.msg} at line {e.lineno})") from None
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _scalar(field: FieldSpec, x):
    try:
        return field.parse(str(x))
    except (ValueError, ZeroDivisionError) as e:
        raise SchemaError(f"bad scalar {x!r}: {e}") from None


# ---------------------------------------------------------------------------
# algebras


def _quiver(doc) -> Quiver:
    return Quiver(doc["vertices"], [(a["name"], a["from"], a["to"]) for a in doc["arrows"]])


def _quiver_doc(q: Quiver):
    return {"vertices": list(q.vertices),
            "arrows": [{"name": a.name, "from": a.source, "to": a.target} for a in q.arrows]}


def parse_algebra(doc) -> BoundQuiverAlgebra:
    validate(doc, ALGEBRA_SCHEMA, "algebra")
    try:
        field = FieldSpec.from_string(doc["field"])
    except ValueError as e:
        raise SchemaError(str(e)) from None
    q = _quiver(doc)
    rels = []
    for r in doc.get("relations", []):
        terms = []
        for t in r:
            for a in t["path"]:
                if a not in q.arrow:
                    raise SchemaError(f"relation uses unknown arrow {a!r}")
            terms.append((_scalar(field, t["coef"]), q.path(t["path"])))
        rels.append(Relation(terms))
    return BoundQuiverAlgebra(q, rels, field)


def algebra_to_doc(alg: BoundQuiverAlgebra):
    f = alg.field
    return {"field": str(f), **_quiver_doc(alg.quiver),
            "relations": [[{"coef": f.format(c), "path": list(p.arrows)} for c, p in r] for r in alg.relations]}


# ---------------------------------------------------------------------------
# groups and actions


def _group(doc) -> FiniteGroup:
    names = list(doc["elements"])
    if len(set(names)) != len(names):
        raise SchemaError("duplicate group element names")
    idx = {n: i for i, n in enumerate(names)}
    table = doc["mult_table"]
    if len(table) != len(names) or any(len(row) != len(names) for row in table):
        raise SchemaError("mult_table must be square over the listed elements")
    try:
        tab = [[idx[x] for x in row] for row in table]
    except KeyError as e:
        raise SchemaError(f"mult_table mentions unknown element {e.args[0]!r}") from None
    G = FiniteGroup(names, tab)
    G.validate()
    return G


def _group_doc(G: FiniteGroup):
    return {"elements": list(G.names),
            "mult_table": [[G.names[G.mul(i, j)] for j in range(G.order)] for i in range(G.order)]}


def parse_action(doc, alg: BoundQuiverAlgebra) -> AlgebraAction:
    """Images may be given for generators only; the rest is generated."""
    validate(doc, ACTION_SCHEMA, "action")
    G = _group(doc)
    f = alg.field
    gens = {}
    for name, spec in doc["per_element"].items():
        if name not in G.names:
            raise SchemaError(f"unknown group element {name!r}")
        vm = dict(spec["vertex_images"])
        am = {a: (img["arrow"], _scalar(f, img.get("scalar", "1"))) for a, img in spec["arrow_images"].items()}
        if set(vm) != set(alg.quiver.vertices) or set(am) != set(alg.quiver.arrow):
            raise SchemaError(f"element {name!r} must give images of every vertex and arrow")
        gens[G.index(name)] = (vm, am)
    gens.pop(0, None)
    if G.order > 1 and not gens:
        raise SchemaError("no images given for a nontrivial group")
    act = AlgebraAction.from_generators(alg, G, gens) if gens else AlgebraAction.trivial(alg, G)
    return check_action(alg, act)


def action_to_doc(action: AlgebraAction):
    G = action.group
    f = action.alg.field
    per = {}
    for g in range(1, G.order):
        per[G.names[g]] = {
            "vertex_images": dict(action.vertex[g]),
            "arrow_images": {a: {"arrow": b, "scalar": f.format(c)} for a, (b, c) in action.arrow[g].items()}}
    return {**_group_doc(G), "per_element": per}


# ---------------------------------------------------------------------------
# modules


def parse_module(doc, alg: BoundQuiverAlgebra | None = None, base_dir=".") -> Rep:
    validate(doc, MODULE_SCHEMA, "module")
    if alg is None:
        ref = doc["algebra"]
        alg = parse_algebra(load_json(FsPath(base_dir) / ref) if isinstance(ref, str) else ref)
    q = alg.quiver
    f = alg.field
    dims = {v: int(doc["dims"].get(v, 0)) for v in q.vertices}
    extra = set(doc["dims"]) - set(q.vertices)
    if extra:
        raise SchemaError(f"dims mention unknown vertex {sorted(extra)[0]!r}")
    maps = {}
    for a in q.arrows:
        rows = doc["matrices"].get(a.name)
        if rows is None:
            if dims[a.source] and dims[a.target]:
                raise SchemaError(f"missing matrix for arrow {a.name!r}")
            rows = [[]] * dims[a.source]
        if len(rows) != dims[a.source] or any(len(r) != dims[a.target] for r in rows):
            raise SchemaError(f"arrow {a.name!r} needs a {dims[a.source]}x{dims[a.target]} matrix")
        maps[a.name] = [[_scalar(f, x) for x in r] for r in rows]
    extra = set(doc["matrices"]) - set(q.arrow)
    if extra:
        raise SchemaError(f"matrices mention unknown arrow {sorted(extra)[0]!r}")
    M = Rep(alg, dims, maps, doc.get("name"))
    bad = M.relation_defects()
    if bad:
        raise InputError(f"module violates relation {bad[0]}")
    return M


def module_to_doc(M: Rep, algebra_ref=None):
    f = M.field
    doc = {"algebra": algebra_ref if algebra_ref is not None else algebra_to_doc(M.alg),
           "dims": {v: M.dims[v] for v in M.quiver.vertices},
           "matrices": {a: [[f.format(x) for x in row] for row in m] for a, m in M.maps.items()}}
    if M.name:
        doc["name"] = M.name
    return doc


# ---------------------------------------------------------------------------
# labelled components


def parse_component(doc):
    """(TranslationQuiver, ComponentAction)."""
    validate(doc, COMPONENT_SCHEMA, "component")
    delta = _quiver(doc["delta"])
    labels = {}
    for key, lab in doc.get("labels", {}).items():
        x = parse_vertex_key(key)
        if x[0] not in delta.vindex:
            raise SchemaError(f"label for unknown vertex {key!r}")
        labels[x] = lab
    tq = TranslationQuiver(delta, tuple(doc["window"]), labels)
    if "group" in doc:
        G = _group(doc["group"])
    else:
        G = FiniteGroup(["e"], [[0]])
    images = {}
    for name, img in doc.get("slice_images", {}).items():
        if name not in G.names:
            raise SchemaError(f"unknown group element {name!r}")
        pairs = {}
        for k, v in img.items():
            x, y = parse_vertex_key(k), parse_vertex_key(v)
            if x[0] not in delta.vindex or y[0] not in delta.vindex:
                raise SchemaError(f"slice image {k!r} -> {v!r} uses an unknown vertex")
            pairs[x] = y
        images[G.index(name)] = pairs
    if G.order > 1:
        # generators suffice when they determine the rest through the table
        images = _close_images(G, delta, images)
    return tq, transfer_action(tq, G, images)


def _close_images(G, delta, images):
    maps = {0: {d: (d, 0) for d in delta.vertices}}
    for g, pairs in images.items():
        maps[g] = {x[0]: (y[0], y[1] - x[1]) for x, y in pairs.items()}
    changed = True
    while changed:
        changed = False
        for g in list(maps):
            for h in list(maps):
                gh = G.mul(g, h)
                if gh in maps or len(maps[g]) != len(delta.vertices) or len(maps[h]) != len(delta.vertices):
                    continue
                maps[gh] = {d: (maps[g][maps[h][d][0]][0], maps[h][d][1] + maps[g][maps[h][d][0]][1])
                            for d in delta.vertices}
                changed = True
    out = {}
    for g, m in maps.items():
        out[g] = {(d, 0): (e, k) for d, (e, k) in m.items()}
        for x, y in images.get(g, {}).items():
            out[g][x] = y
    return out


def component_to_doc(tq: TranslationQuiver, action: ComponentAction | None = None):
    doc = {"delta": _quiver_doc(tq.delta), "window": list(tq.window),
           "labels": {vertex_key(x): lab for x, lab in sorted(tq.labels.items(), key=lambda t: tq.order_key(t[0]))}}
    if action is not None:
        G = action.group
        doc["group"] = _group_doc(G)
        doc["slice_images"] = {G.names[g]: {vertex_key((d, 0)): vertex_key(action.apply(g, (d, 0)))
                                            for d in tq.delta.vertices}
                               for g in range(1, G.order)}
    return doc


# ---------------------------------------------------------------------------
# Graphviz


def _q(s) -> str:
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def _dot(name, nodes, edges, rankdir="LR"):
    """nodes: [(id, label)], edges: [(src, tgt, label)]; output sorted by id."""
    lines = [f"digraph {_q(name)} {{", f"  rankdir={rankdir};", "  node [shape=box];"]
    for nid, lab in sorted(nodes):
        lines.append(f"  {_q(nid)} [label={_q(lab)}];")
    for s, t, lab in sorted(edges):
        extra = f" [label={_q(lab)}]" if lab else ""
        lines.append(f"  {_q(s)} -> {_q(t)}{extra};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def quiver_to_dot(q: Quiver, name="Q"):
    return _dot(name, [(v, v) for v in q.vertices], [(a.source, a.target, a.name) for a in q.arrows])


def ar_to_dot(ar, name="AR"):
    nodes = [(f"m{i:03d}", ar.label(i)) for i in range(len(ar))]
    edges = [(f"m{i:03d}", f"m{j:03d}", str(m) if m > 1 else "") for (i, j), m in ar.arrows.items()]
    edges += [(f"m{y:03d}", f"m{x:03d}", "tau") for y, x in ar.tau.items()]
    return _dot(name, nodes, edges)


def translation_to_dot(tq: TranslationQuiver, name="ZDelta", highlight=()):
    hl = set(highlight)
    nodes = [(vertex_key(x), tq.name(x) + (" *" if x in hl else "")) for x in tq.vertices]
    edges = [(vertex_key(a.source), vertex_key(a.target), "") for a in tq.arrows()]
    return _dot(name, nodes, edges)


def section_to_dot(s, name="Section"):
    nodes = [(vertex_key(x), s.tq.name(x)) for x in s.vertices]
    edges = [(vertex_key(a.source), vertex_key(a.target), a.name) for a in s.arrows()]
    return _dot(name, nodes, edges)
