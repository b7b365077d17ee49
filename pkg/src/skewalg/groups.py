"""Finite groups acting on bound quiver algebras, twists and skew group algebras.

An action sends each group element to a quiver automorphism with nonzero
scalars on arrows.  Conventions: (st)(x) = s(t(x)); in A[G] the product is
(p s)(q t) = p s(q) st.  The twist ^sM has (^sM)_v = M_{s^-1 v}, and an
arrow a acts there as M does on s^-1(a).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BadCharacteristic, NonSplitQuotient, NotAutomorphism, NotHomomorphism, RelationsNotPreserved
from .linalg import FieldSpec
from .modules import Hom, Rep
from .quiver import BoundQuiverAlgebra, Diagnostic, Path
from .structure import StructureAlgebra


@dataclass(frozen=True)
class FiniteGroup:
    names: tuple
    table: tuple  # table[i][j] = index of names[i] * names[j]

    @property
    def order(self) -> int:
        return len(self.names)

    identity = 0

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inv(self, i: int) -> int:
        for j in range(self.order):
            if self.table[i][j] == 0:
                return j
        raise NotHomomorphism(f"{self.names[i]} has no inverse")

    def index(self, name) -> int:
        return self.names.index(name)

    def element_order(self, i: int) -> int:
        k, cur = 1, i
        while cur != 0:
            cur = self.mul(cur, i)
            k += 1
        return k

    def exponent(self) -> int:
        from math import lcm
        out = 1
        for i in range(self.order):
            out = lcm(out, self.element_order(i))
        return out

    def validate(self):
        n = self.order
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise NotHomomorphism("multiplication table has the wrong shape")
        for i in range(n):
            if self.table[0][i] != i or self.table[i][0] != i:
                raise NotHomomorphism("element 0 is not the identity")
            if sorted(self.table[i]) != list(range(n)):
                raise NotHomomorphism("a table row is not a permutation")
        for i, j, k in itertools.product(range(n), repeat=3):
            if self.mul(self.mul(i, j), k) != self.mul(i, self.mul(j, k)):
                raise NotHomomorphism("multiplication is not associative")
        return self


def cyclic_group(n: int) -> FiniteGroup:
    names = tuple("e" if i == 0 else (f"g^{i}" if i > 1 else "g") for i in range(n))
    return FiniteGroup(names, tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    pairs = [(i, j) for i in range(G.order) for j in range(H.order)]
    idx = {p: k for k, p in enumerate(pairs)}
    names = tuple("e" if k == 0 else f"({G.names[i]},{H.names[j]})" for k, (i, j) in enumerate(pairs))
    table = tuple(tuple(idx[(G.mul(a, c), H.mul(b, d))] for (c, d) in pairs) for (a, b) in pairs)
    return FiniteGroup(names, table)


def klein_four() -> FiniteGroup:
    return direct_product(cyclic_group(2), cyclic_group(2))


class AlgebraAction:
    """``vertex[g]`` maps vertices, ``arrow[g]`` maps arrow -> (arrow, scalar)."""

    def __init__(self, alg: BoundQuiverAlgebra, group: FiniteGroup, vertex, arrow):
        self.alg = alg
        self.group = group
        self.field = alg.field
        self.vertex = [dict(v) for v in vertex]
        self.arrow = [{a: (b, alg.field(c)) for a, (b, c) in m.items()} for m in arrow]
        self._mats = {}

    @classmethod
    def trivial(cls, alg, group=None):
        group = group or cyclic_group(1)
        return cls(alg, group, [{v: v for v in alg.quiver.vertices}] * group.order,
                   [{a.name: (a.name, 1) for a in alg.quiver.arrows}] * group.order)

    @classmethod
    def from_generators(cls, alg, group: FiniteGroup, gens: dict):
        """Extend images of generators (index -> (vertex map, arrow map)) to
        the whole group by closing under products."""
        f = alg.field
        vmaps = {0: {v: v for v in alg.quiver.vertices}}
        amaps = {0: {a.name: (a.name, f.one) for a in alg.quiver.arrows}}
        for g, (vm, am) in gens.items():
            vmaps[g] = dict(vm)
            amaps[g] = {a: (b, f(c)) for a, (b, c) in am.items()}
        changed = True
        while changed:
            changed = False
            for g, h in itertools.product(list(vmaps), list(vmaps)):
                gh = group.mul(g, h)
                vm = {v: vmaps[g][vmaps[h][v]] for v in alg.quiver.vertices}
                am = {}
                for a in amaps[h]:
                    b, c = amaps[h][a]
                    b2, c2 = amaps[g][b]
                    am[a] = (b2, c * c2)
                if gh not in vmaps:
                    vmaps[gh], amaps[gh] = vm, am
                    changed = True
                elif vmaps[gh] != vm or amaps[gh] != am:
                    raise NotHomomorphism(f"generator images are inconsistent at {group.names[gh]}")
        if len(vmaps) != group.order:
            raise NotHomomorphism("generators do not generate the group")
        return cls(alg, group, [vmaps[g] for g in range(group.order)], [amaps[g] for g in range(group.order)])

    # -- applying the action ---------------------------------------------

    def act_path(self, g: int, p: Path):
        """(scalar, path) with g(p) = scalar * path."""
        if p.is_trivial:
            v = self.vertex[g][p.source]
            return self.field.one, Path(v, v, ())
        c = self.field.one
        arrs = []
        for a in p.arrows:
            b, s = self.arrow[g][a]
            c = c * s
            arrs.append(b)
        return c, Path(self.vertex[g][p.source], self.vertex[g][p.target], tuple(arrs))

    def act(self, g: int, x):
        out = [self.field.zero] * self.alg.dimension
        for i, c in enumerate(x):
            if c:
                s, p = self.act_path(g, self.alg.basis[i])
                for k, y in self.alg.normal_form(p).items():
                    out[k] += c * s * y
        return out

    def matrix(self, g: int):
        """Columns = images of basis vectors."""
        if g not in self._mats:
            A = self.alg
            cols = [self.act(g, A.basis_vector(i)) for i in range(A.dimension)]
            self._mats[g] = cols
        return self._mats[g]

    def orbits(self):
        seen, out = set(), []
        for v in self.alg.quiver.vertices:
            if v in seen:
                continue
            orb = sorted({self.vertex[g][v] for g in range(self.group.order)}, key=self.alg.quiver.vindex.get)
            seen.update(orb)
            out.append(orb)
        return out

    def stabilizer(self, v):
        return [g for g in range(self.group.order) if self.vertex[g][v] == v]


def validate_action(alg: BoundQuiverAlgebra, action: AlgebraAction) -> list[Diagnostic]:
    out = []
    G = action.group
    q = alg.quiver
    try:
        G.validate()
    except NotHomomorphism as exc:
        return [Diagnostic("NotHomomorphism", str(exc))]
    if len(action.vertex) != G.order or len(action.arrow) != G.order:
        return [Diagnostic("NotHomomorphism", "action must list every group element")]
    p = alg.field.characteristic
    if p and G.order % p == 0:
        out.append(Diagnostic("BadCharacteristic", f"characteristic {p} divides |G| = {G.order}"))
    for g in range(G.order):
        vm, am = action.vertex[g], action.arrow[g]
        if set(vm) != set(q.vertices) or sorted(vm.values()) != sorted(q.vertices):
            out.append(Diagnostic("NotAutomorphism", f"{G.names[g]} does not permute the vertices"))
            continue
        if set(am) != set(q.arrow) or sorted(b for b, _ in am.values()) != sorted(q.arrow):
            out.append(Diagnostic("NotAutomorphism", f"{G.names[g]} does not permute the arrows"))
            continue
        for a, (b, c) in am.items():
            src, tgt = q.arrow[a], q.arrow[b]
            if vm[src.source] != tgt.source or vm[src.target] != tgt.target:
                out.append(Diagnostic("NotAutomorphism", f"{G.names[g]} sends {a} to {b} with wrong endpoints", a))
            if not c:
                out.append(Diagnostic("NotAutomorphism", f"zero scalar on {a}", a))
    if out:
        return out
    for v in q.vertices:
        if action.vertex[0][v] != v:
            out.append(Diagnostic("NotHomomorphism", "identity moves a vertex"))
    for a in q.arrows:
        b, c = action.arrow[0][a.name]
        if b != a.name or c != 1:
            out.append(Diagnostic("NotHomomorphism", "identity moves an arrow"))
    for g, h in itertools.product(range(G.order), repeat=2):
        gh = G.mul(g, h)
        for v in q.vertices:
            if action.vertex[g][action.vertex[h][v]] != action.vertex[gh][v]:
                out.append(Diagnostic("NotHomomorphism", f"vertex action fails at ({G.names[g]}, {G.names[h]})"))
                break
        for a in q.arrows:
            b, c = action.arrow[h][a.name]
            b2, c2 = action.arrow[g][b]
            if (b2, c * c2) != action.arrow[gh][a.name]:
                out.append(Diagnostic("NotHomomorphism", f"arrow action fails at ({G.names[g]}, {G.names[h]})"))
                break
    if out:
        return out
    for g in range(G.order):
        for r in alg.relations:
            img = [alg.field.zero] * alg.dimension
            for c, path in r:
                s, p2 = action.act_path(g, path)
                for k, y in alg.normal_form(p2).items():
                    img[k] += c * s * y
            # relation paths lie in the ideal, so their image must reduce to 0
            if any(img):
                out.append(Diagnostic("RelationsNotPreserved", f"{G.names[g]} does not preserve {r!r}", r))
    return out


_ERRORS = {"NotAutomorphism": NotAutomorphism, "NotHomomorphism": NotHomomorphism,
           "RelationsNotPreserved": RelationsNotPreserved, "BadCharacteristic": BadCharacteristic}


def check_action(alg, action):
    diags = validate_action(alg, action)
    if diags:
        raise _ERRORS[diags[0].kind](diags[0].message)
    return action


# ---------------------------------------------------------------------------
# skew group algebras


def skew_structure(sa: StructureAlgebra, group: FiniteGroup, act, radical=None,
                   provenance="skew", labels=None) -> StructureAlgebra:
    """S[G] for an algebra with a linear G-action ``act(g, x)``.

    Basis index i*|G| + g stands for b_i g.  ``radical`` (basis vectors of a
    radical of ``sa``) yields the radical J[G] of the skew algebra."""
    n, d = group.order, sa.dim
    f = sa.field
    img = [[act(g, sa.basis_vector(j)) for j in range(d)] for g in range(n)]
    table = [[None] * (d * n) for _ in range(d * n)]
    for i in range(d):
        bi = sa.basis_vector(i)
        for g in range(n):
            for j in range(d):
                prod = sa.multiply(bi, img[g][j])
                for h in range(n):
                    gh = group.mul(g, h)
                    table[i * n + g][j * n + h] = {k * n + gh: c for k, c in enumerate(prod) if c}
    unit = [f.zero] * (d * n)
    for k, c in enumerate(sa.unit):
        unit[k * n] = c
    rad = None
    if radical is not None:
        rad = []
        for r in radical:
            for g in range(n):
                v = [f.zero] * (d * n)
                for k, c in enumerate(r):
                    v[k * n + g] = c
                rad.append(v)
    labels = labels or [f"{sa.labels[i]}.{group.names[g]}" for i in range(d) for g in range(n)]
    S = StructureAlgebra(f, table, unit, provenance, known_radical=rad, labels=labels)
    S.skew_base = sa
    S.skew_group = group
    S.skew_act = act
    return S


def skew_group_algebra(alg: BoundQuiverAlgebra, action: AlgebraAction) -> StructureAlgebra:
    check_action(alg, action)
    from .structure import from_bound_quiver
    sa = from_bound_quiver(alg)
    S = skew_structure(sa, action.group, action.act, radical=sa.known_radical)
    S.action = action
    S.source = alg
    return S


def skew_basic_presentation(S: StructureAlgebra):
    """basic_presentation with a field hint when the quotient does not split."""
    from .structure import basic_presentation
    try:
        return basic_presentation(S)
    except NonSplitQuotient as exc:
        field: FieldSpec = S.field
        n = S.skew_group.exponent()
        p = field.smallest_prime_with_roots(n)
        raise NonSplitQuotient(f"{exc}; for roots of unity of order {n} use GF({p})") from None


# ---------------------------------------------------------------------------
# twisting modules and homomorphisms


def twist(M: Rep, g: int, action: AlgebraAction) -> Rep:
    """^gM: (^gM)_v = M_{g^-1 v}; an arrow a acts as g^-1(a) does on M."""
    G = action.group
    gi = G.inv(g)
    vm = action.vertex[gi]
    dims = {v: M.dims[vm[v]] for v in M.quiver.vertices}
    maps = {}
    for a in M.quiver.arrows:
        b, c = action.arrow[gi][a.name]
        maps[a.name] = [[c * x for x in row] for row in M.maps[b]]
    name = M.name if g == 0 else (f"^{G.names[g]}{M.name}" if M.name else None)
    return Rep(M.alg, dims, maps, name)


def twist_hom(h: Hom, g: int, action: AlgebraAction) -> Hom:
    gi = action.group.inv(g)
    vm = action.vertex[gi]
    return Hom(twist(h.source, g, action), twist(h.target, g, action),
               {v: h.mats[vm[v]] for v in h.source.quiver.vertices})
