"""Isomorphism test for bound quiver algebras.

Searches for isomorphisms that send each arrow to a nonzero scalar multiple
of an arrow (vertex bijection, arrow bijection, scalars).  Scalars along a
spanning forest are gauge-fixed to 1 by conjugating with vertex scalings;
the rest are found by solving the polynomial system coming from the
relations.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .config import BUDGETS
from .errors import SearchBudgetExceeded
from .quiver import BoundQuiverAlgebra, Path


@dataclass
class IsoResult:
    isomorphic: bool
    vertex_map: dict | None = None
    arrow_map: dict | None = None  # arrow of A -> (scalar, arrow of B)
    reason: str = ""

    def __bool__(self):
        return self.isomorphic


def _vertex_invariants(alg: BoundQuiverAlgebra, v):
    q = alg.quiver
    return (len(q.out_arrows[v]), len(q.in_arrows[v]),
            sum(1 for a in q.out_arrows[v] if a.target == v),
            len(alg.basis_between(v, v)),
            sum(1 for p in alg.basis if p.source == v),
            sum(1 for p in alg.basis if p.target == v))


def _forest(quiver):
    parent = {v: v for v in quiver.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tree = set()
    for a in quiver.arrows:
        r1, r2 = find(a.source), find(a.target)
        if r1 != r2:
            parent[r1] = r2
            tree.add(a.name)
    return tree


class _Budget:
    def __init__(self, limit):
        self.limit = limit
        self.used = 0

    def tick(self, n=1):
        self.used += n
        if self.used > self.limit:
            raise SearchBudgetExceeded(f"isomorphism search exceeded {self.limit} nodes")


def iso_test(A: BoundQuiverAlgebra, B: BoundQuiverAlgebra, budget: int | None = None) -> IsoResult:
    if A.field != B.field:
        return IsoResult(False, reason="different fields")
    qa, qb = A.quiver, B.quiver
    if len(qa.vertices) != len(qb.vertices) or len(qa.arrows) != len(qb.arrows):
        return IsoResult(False, reason="different vertex or arrow counts")
    if A.dimension != B.dimension:
        return IsoResult(False, reason="different dimensions")
    inv_a = {v: _vertex_invariants(A, v) for v in qa.vertices}
    inv_b = {w: _vertex_invariants(B, w) for w in qb.vertices}
    if sorted(inv_a.values()) != sorted(inv_b.values()):
        return IsoResult(False, reason="vertex invariants differ")
    bud = _Budget(budget or BUDGETS.iso_budget)
    order = list(qa.vertices)
    tree = _forest(qa)

    def compatible(v, w, assign):
        if inv_a[v] != inv_b[w]:
            return False
        for v2, w2 in assign.items():
            if qa.arrow_count(v, v2) != qb.arrow_count(w, w2) or qa.arrow_count(v2, v) != qb.arrow_count(w2, w):
                return False
            if len(A.basis_between(v, v2)) != len(B.basis_between(w, w2)):
                return False
            if len(A.basis_between(v2, v)) != len(B.basis_between(w2, w)):
                return False
        return True

    def vertex_maps(i, assign, used):
        if i == len(order):
            yield dict(assign)
            return
        v = order[i]
        for w in qb.vertices:
            if w in used:
                continue
            bud.tick()
            if compatible(v, w, assign):
                assign[v] = w
                used.add(w)
                yield from vertex_maps(i + 1, assign, used)
                del assign[v]
                used.discard(w)

    for vmap in vertex_maps(0, {}, set()):
        groups = {}
        for a in qa.arrows:
            groups.setdefault((a.source, a.target), []).append(a.name)
        keys = sorted(groups)
        choices = []
        for s, t in keys:
            targets = [b.name for b in qb.arrows if b.source == vmap[s] and b.target == vmap[t]]
            choices.append(list(itertools.permutations(targets)))
        for combo in itertools.product(*choices):
            bud.tick()
            amap = {}
            for (k, perm) in zip(keys, combo):
                for a, b in zip(groups[k], perm):
                    amap[a] = b
            scalars = _solve_scalars(A, B, amap, tree, bud)
            if scalars is not None:
                return IsoResult(True, vmap, {a: (scalars[a], amap[a]) for a in amap})
    return IsoResult(False, reason="no monomial isomorphism found")


def _image_coords(A, B, amap, lam, rel):
    """Coordinates in B of the image of a relation of A, with arrow scalars
    ``lam`` (any ring supporting * and +)."""
    out = {}
    qb = B.quiver
    for c, p in rel:
        coef = c
        for a in p.arrows:
            coef = coef * lam[a]
        img = Path(amap_vertex(B, amap, p, first=True), amap_vertex(B, amap, p, first=False),
                   tuple(amap[a] for a in p.arrows))
        for k, x in B.normal_form(img).items():
            out[k] = out.get(k, 0) + coef * x
    return out


def amap_vertex(B, amap, p, first):
    a = p.arrows[0] if first else p.arrows[-1]
    arr = B.quiver.arrow[amap[a]]
    return arr.source if first else arr.target


def _solve_scalars(A, B, amap, tree, bud):
    f = A.field
    free = [a.name for a in A.quiver.arrows if a.name not in tree]
    base = {a.name: f.one for a in A.quiver.arrows}
    if not A.relations:
        return base
    if not free:
        return base if _check(A, B, amap, base) else None
    if f.kind == "GF":
        nonzero = [x for x in f.elements() if x]
        total = len(nonzero) ** len(free)
        bud.tick(0)
        if bud.used + total > bud.limit:
            raise SearchBudgetExceeded(f"scalar search needs {total} trials")
        for vals in itertools.product(nonzero, repeat=len(free)):
            bud.tick()
            lam = dict(base)
            lam.update(zip(free, vals))
            if _check(A, B, amap, lam):
                return lam
        return None
    import sympy
    syms = sympy.symbols(f"t0:{len(free)}")
    lam = {a.name: sympy.Integer(1) for a in A.quiver.arrows}
    lam.update(zip(free, syms))
    eqs = []
    for rel in A.relations:
        rel_s = [(sympy.Rational(c.numerator, c.denominator), p) for c, p in rel]
        coords = _image_coords(A, B, amap, lam, rel_s)
        for k in sorted(coords):
            e = sympy.expand(coords[k])
            if e != 0:
                eqs.append(e)
    if not eqs:
        return base
    sols = sympy.solve(eqs, syms, dict=True)
    for sol in sols:
        vals = {}
        ok = True
        for s, name in zip(syms, free):
            v = sol.get(s, s)
            v = sympy.sympify(v)
            if v.free_symbols:
                v = v.subs({x: 1 for x in v.free_symbols})
            if not v.is_Rational or v == 0:
                ok = False
                break
            vals[name] = f(Fraction(int(v.p), int(v.q)))
        if not ok:
            continue
        lam2 = dict(base)
        lam2.update(vals)
        if _check(A, B, amap, lam2):
            return lam2
    return None


def _check(A, B, amap, lam):
    for rel in A.relations:
        coords = _image_coords(A, B, amap, lam, list(rel))
        if any(coords.values()):
            return False
    return True
