"""Quivers, paths, admissible relations and bound quiver algebras kQ/I.

Paths compose diagrammatically: ``Path(("a", "b"))`` traverses ``a`` first,
so ``a * b`` is nonzero only when target(a) == source(b).  Bound quiver
algebras carry a normal-form basis of paths computed by linear algebra on
the truncated path space; the leading terms (length-lexicographic order,
arrows ordered by declaration) form the rewriting rules.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import CapExceeded, MalformedQuiver, MalformedRelation, NotAdmissibleAtCap
from .linalg import FieldSpec, QQ, rref

PATH_BUDGET = 50000


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Path:
    source: str
    target: str
    arrows: tuple = ()

    def __len__(self):
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def __str__(self):
        if not self.arrows:
            return f"e_{self.source}"
        return "*".join(self.arrows)


@dataclass(frozen=True)
class Diagnostic:
    kind: str
    message: str
    term: object = None


class Quiver:
    def __init__(self, vertices: Iterable[str], arrows: Iterable):
        self.vertices = tuple(str(v) for v in vertices)
        arrs = []
        for a in arrows:
            if isinstance(a, Arrow):
                arrs.append(a)
            else:
                name, s, t = a
                arrs.append(Arrow(str(name), str(s), str(t)))
        self.arrows = tuple(arrs)
        if len(set(self.vertices)) != len(self.vertices):
            raise MalformedQuiver("duplicate vertex names")
        if len({a.name for a in self.arrows}) != len(self.arrows):
            raise MalformedQuiver("duplicate arrow names")
        vset = set(self.vertices)
        for a in self.arrows:
            if a.source not in vset or a.target not in vset:
                raise MalformedQuiver(f"arrow {a.name} uses an undeclared vertex")
        self.vindex = {v: i for i, v in enumerate(self.vertices)}
        self.aindex = {a.name: i for i, a in enumerate(self.arrows)}
        self.arrow = {a.name: a for a in self.arrows}
        self.out_arrows = {v: [a for a in self.arrows if a.source == v] for v in self.vertices}
        self.in_arrows = {v: [a for a in self.arrows if a.target == v] for v in self.vertices}

    def __eq__(self, other):
        return isinstance(other, Quiver) and self.vertices == other.vertices and self.arrows == other.arrows

    def __hash__(self):
        return hash((self.vertices, self.arrows))

    def __repr__(self):
        arrs = ", ".join(f"{a.name}:{a.source}->{a.target}" for a in self.arrows)
        return f"Quiver({list(self.vertices)}; {arrs})"

    def trivial(self, v: str) -> Path:
        return Path(v, v, ())

    def path(self, arrows) -> Path:
        arrows = tuple(arrows)
        if not arrows:
            raise ValueError("use trivial(v) for trivial paths")
        for x, y in zip(arrows, arrows[1:]):
            if self.arrow[x].target != self.arrow[y].source:
                raise MalformedRelation(f"arrows {x} and {y} do not compose", arrows)
        return Path(self.arrow[arrows[0]].source, self.arrow[arrows[-1]].target, arrows)

    def concat(self, p: Path, q: Path):
        if p.target != q.source:
            return None
        return Path(p.source, q.target, p.arrows + q.arrows)

    def sort_key(self, p: Path):
        if p.arrows:
            return (len(p.arrows), tuple(self.aindex[a] for a in p.arrows), 0)
        return (0, (), self.vindex[p.source])

    def paths_from(self, v: str, max_len: int):
        """All paths starting at ``v`` of length < max_len."""
        out = [self.trivial(v)]
        frontier = [out[0]]
        for _ in range(max_len - 1):
            nxt = []
            for p in frontier:
                for a in self.out_arrows[p.target]:
                    nxt.append(Path(p.source, a.target, p.arrows + (a.name,)))
            if len(out) + len(nxt) > PATH_BUDGET:
                raise CapExceeded("path enumeration budget exceeded")
            out.extend(nxt)
            frontier = nxt
            if not frontier:
                break
        return out

    def is_acyclic(self) -> bool:
        indeg = {v: 0 for v in self.vertices}
        for a in self.arrows:
            indeg[a.target] += 1
        stack = [v for v in self.vertices if indeg[v] == 0]
        seen = 0
        while stack:
            v = stack.pop()
            seen += 1
            for a in self.out_arrows[v]:
                indeg[a.target] -= 1
                if indeg[a.target] == 0:
                    stack.append(a.target)
        return seen == len(self.vertices)

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj = {v: set() for v in self.vertices}
        for a in self.arrows:
            adj[a.source].add(a.target)
            adj[a.target].add(a.source)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            v = stack.pop()
            for w in adj[v] - seen:
                seen.add(w)
                stack.append(w)
        return len(seen) == len(self.vertices)

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, [Arrow(a.name, a.target, a.source) for a in self.arrows])

    def arrow_count(self, u: str, w: str) -> int:
        return sum(1 for a in self.out_arrows[u] if a.target == w)


class Relation:
    """A linear combination of parallel paths of length >= 2."""

    def __init__(self, terms):
        self.terms = tuple((c, p) for c, p in terms)

    def __iter__(self):
        return iter(self.terms)

    def __eq__(self, other):
        return isinstance(other, Relation) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        return " + ".join(f"{c}*{p}" for c, p in self.terms)

    @property
    def source(self):
        return self.terms[0][1].source

    @property
    def target(self):
        return self.terms[0][1].target

    def reversed(self) -> "Relation":
        return Relation([(c, Path(p.target, p.source, tuple(reversed(p.arrows)))) for c, p in self.terms])


def validate(quiver: Quiver, relations) -> list[Diagnostic]:
    """Structural checks on relations; returns a list of violations."""
    diags = []
    for r in relations:
        terms = list(r)
        if not terms:
            diags.append(Diagnostic("empty", "relation has no terms", r))
            continue
        ends = None
        for c, p in terms:
            if any(a not in quiver.arrow for a in p.arrows):
                diags.append(Diagnostic("unknown-arrow", f"unknown arrow in {p}", (c, p)))
                continue
            if len(p.arrows) < 2:
                diags.append(Diagnostic("short-path", f"term {p} has length < 2", (c, p)))
            ok = True
            for x, y in zip(p.arrows, p.arrows[1:]):
                if quiver.arrow[x].target != quiver.arrow[y].source:
                    diags.append(Diagnostic("not-composable", f"{x},{y} do not compose in {p}", (c, p)))
                    ok = False
            if ok and p.arrows:
                if quiver.arrow[p.arrows[0]].source != p.source or quiver.arrow[p.arrows[-1]].target != p.target:
                    diags.append(Diagnostic("bad-endpoints", f"declared endpoints of {p} are wrong", (c, p)))
            if ends is None:
                ends = (p.source, p.target)
            elif ends != (p.source, p.target):
                diags.append(Diagnostic("mixed-endpoints", f"term {p} has endpoints different from {ends}", (c, p)))
    return diags


def default_degree_cap(quiver: Quiver, relations) -> int:
    return len(quiver.vertices) + sum(max((len(p) for _, p in r), default=0) for r in relations)


class BoundQuiverAlgebra:
    """kQ/I with a normal-form basis of paths.

    ``basis`` lists the normal-form paths (trivial paths first, then by the
    term order).  Elements are dense coefficient lists over ``basis``.
    """

    def __init__(self, quiver: Quiver, relations=(), field: FieldSpec = QQ, degree_cap: int | None = None):
        if not quiver.vertices:
            raise MalformedQuiver("an algebra needs at least one vertex")
        self.field = field
        self.quiver = quiver
        rels = []
        for r in relations:
            r = r if isinstance(r, Relation) else Relation(r)
            rels.append(Relation([(field(c), p) for c, p in r]))
        diags = validate(quiver, rels)
        if diags:
            raise MalformedRelation(diags[0].message, diags[0].term)
        self.relations = tuple(rels)
        self.degree_cap = degree_cap if degree_cap is not None else default_degree_cap(quiver, rels)
        self._complete_rewriting()

    # -- construction ------------------------------------------------------

    def _paths_between(self, max_len: int):
        blocks = {}
        for v in self.quiver.vertices:
            for p in self.quiver.paths_from(v, max_len):
                blocks.setdefault((p.source, p.target), []).append(p)
        return blocks

    def _ideal_rows(self, blocks, trunc: int):
        """Rows spanning the ideal modulo paths of length >= trunc, grouped
        per endpoint block; columns follow ``blocks`` order."""
        q = self.quiver
        from_v = {}
        to_v = {}
        for (s, t), ps in blocks.items():
            for p in ps:
                from_v.setdefault(s, []).append(p)
                to_v.setdefault(t, []).append(p)
        rows = {}
        for r in self.relations:
            minlen = min(len(p) for _, p in r)
            for left in to_v.get(r.source, []):
                if len(left) + minlen >= trunc:
                    continue
                for right in from_v.get(r.target, []):
                    if len(left) + len(right) + minlen >= trunc:
                        continue
                    key = (left.source, right.target)
                    row = {}
                    for c, p in r:
                        full = Path(left.source, right.target, left.arrows + p.arrows + right.arrows)
                        if len(full) < trunc:
                            row[full] = row.get(full, 0) + c
                    rows.setdefault(key, []).append(row)
        return rows

    def _complete_rewriting(self):
        q = self.quiver
        f = self.field
        L = 1
        while True:
            if L > self.degree_cap:
                raise NotAdmissibleAtCap(
                    f"paths of every length up to {self.degree_cap} survive; the ideal is not admissible at this cap")
            blocks = self._paths_between(L + 1)
            top = [p for ps in blocks.values() for p in ps if len(p) == L]
            if not top:
                break
            rows = self._ideal_rows(blocks, L + 1)
            all_in = True
            for key, ps in blocks.items():
                tops = [p for p in ps if len(p) == L]
                if not tops:
                    continue
                cols = sorted(ps, key=q.sort_key, reverse=True)
                idx = {p: i for i, p in enumerate(cols)}
                mat = []
                for row in rows.get(key, []):
                    vec = [f.zero] * len(cols)
                    for p, c in row.items():
                        vec[idx[p]] += c
                    mat.append(vec)
                rk = rref(mat)[1] if mat else 0
                ext = mat + [[f.one if i == idx[p] else f.zero for i in range(len(cols))] for p in tops]
                if rref(ext)[1] != rk:
                    all_in = False
                    break
            if all_in:
                break
            L += 1
        self.nilpotency = L
        blocks = self._paths_between(L)
        rows = self._ideal_rows(blocks, L)
        basis = []
        rules = {}
        for key, ps in blocks.items():
            cols = sorted(ps, key=q.sort_key, reverse=True)
            idx = {p: i for i, p in enumerate(cols)}
            mat = []
            for row in rows.get(key, []):
                vec = [f.zero] * len(cols)
                for p, c in row.items():
                    vec[idx[p]] += c
                mat.append(vec)
            if mat:
                red, rk, piv = rref(mat)
            else:
                red, rk, piv = [], 0, []
            pivset = set(piv)
            for c, p in enumerate(cols):
                if c not in pivset:
                    basis.append(p)
            for i, pc in enumerate(piv):
                rules[cols[pc]] = {cols[j]: -red[i][j] for j in range(len(cols)) if j != pc and red[i][j]}
        basis.sort(key=q.sort_key)
        self.basis = basis
        self.index = {p: i for i, p in enumerate(basis)}
        self.rules = {lead: {self.index[p]: c for p, c in tail.items()} for lead, tail in rules.items()}
        self._build_table()

    def _build_table(self):
        q = self.quiver
        n = len(self.basis)
        table = [[None] * n for _ in range(n)]
        for i, p in enumerate(self.basis):
            for j, r in enumerate(self.basis):
                c = q.concat(p, r)
                table[i][j] = {} if c is None else self.normal_form(c)
        self.table = table

    # -- arithmetic --------------------------------------------------------

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def dim(self) -> int:
        return len(self.basis)

    def normal_form(self, path: Path) -> dict:
        """Sparse coordinates {basis index: coefficient} of a path."""
        if len(path) >= self.nilpotency:
            return {}
        if path in self.index:
            return {self.index[path]: self.field.one}
        return dict(self.rules.get(path, {}))

    def reduce(self, combo) -> list:
        """Dense coordinates of a combination [(coef, path), ...]."""
        v = [self.field.zero] * self.dimension
        for c, p in combo:
            for k, x in self.normal_form(p).items():
                v[k] += self.field(c) * x
        return v

    def element(self, combo) -> list:
        return self.reduce(combo)

    def basis_vector(self, i: int) -> list:
        v = [self.field.zero] * self.dimension
        v[i] = self.field.one
        return v

    def vertex_idempotent(self, v: str) -> list:
        return self.basis_vector(self.index[self.quiver.trivial(v)])

    def arrow_element(self, a: str) -> list:
        return self.reduce([(1, self.quiver.path([a]))])

    def path_element(self, arrows) -> list:
        return self.reduce([(1, self.quiver.path(arrows))])

    def unit(self) -> list:
        v = [self.field.zero] * self.dimension
        for x in self.quiver.vertices:
            v[self.index[self.quiver.trivial(x)]] = self.field.one
        return v

    def multiply(self, x, y) -> list:
        out = [self.field.zero] * self.dimension
        nx = [(i, a) for i, a in enumerate(x) if a]
        ny = [(j, b) for j, b in enumerate(y) if b]
        for i, a in nx:
            row = self.table[i]
            for j, b in ny:
                for k, c in row[j].items():
                    out[k] += a * b * c
        return out

    def basis_between(self, s: str, t: str) -> list[int]:
        return [i for i, p in enumerate(self.basis) if p.source == s and p.target == t]

    def is_hereditary_presentation(self) -> bool:
        return not self.relations

    def opposite(self) -> "BoundQuiverAlgebra":
        return BoundQuiverAlgebra(self.quiver.opposite(), [r.reversed() for r in self.relations],
                                  self.field, self.degree_cap)

    def structurally_equal(self, other: "BoundQuiverAlgebra") -> bool:
        return (self.field == other.field and self.quiver == other.quiver
                and self.relations == other.relations)

    def __repr__(self):
        return f"BoundQuiverAlgebra({self.quiver!r}, {len(self.relations)} relations, dim {self.dimension}, {self.field})"


def complete_rewriting(quiver: Quiver, relations, field: FieldSpec = QQ, degree_cap: int | None = None) -> BoundQuiverAlgebra:
    return BoundQuiverAlgebra(quiver, relations, field, degree_cap)


def path_algebra(quiver: Quiver, field: FieldSpec = QQ) -> BoundQuiverAlgebra:
    return BoundQuiverAlgebra(quiver, (), field)


def relation(quiver: Quiver, *terms) -> Relation:
    """``relation(q, (1, "ab"), (-1, ["c", "d"]))`` builds a relation; arrow
    sequences may be given as lists of names."""
    out = []
    for c, arrows in terms:
        out.append((c, quiver.path(arrows)))
    return Relation(out)
