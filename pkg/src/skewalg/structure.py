"""Finite-dimensional algebras given by structure constants.

Covers the Jacobson radical, primitive idempotents (split semisimple
quotient plus lifting), iso-classes of idempotents and the Morita-basic
presentation as a bound quiver algebra.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import (NonSplitQuotient, PresentationDegreeOverflow, UnsupportedCharacteristic)
from .linalg import FieldSpec, coordinates, kernel_basis, rref, solve
from .quiver import Arrow, BoundQuiverAlgebra, Path, Quiver, Relation

MAX_LIFT_STEPS = 64


class StructureAlgebra:
    """Associative algebra with basis b_0..b_{n-1} and b_i b_j = sum_k c_ijk b_k.

    ``table[i][j]`` is a sparse dict ``{k: c_ijk}``.  ``provenance`` is one of
    "bound", "skew", "endo", "generic"; ``known_radical`` (if given) is a
    list of vectors spanning the Jacobson radical, supplied by constructors
    that know it structurally.
    """

    def __init__(self, field: FieldSpec, table, unit, provenance: str = "generic",
                 known_radical=None, labels=None, source=None):
        self.field = field
        self.table = table
        self.dim = len(table)
        self.unit = list(unit)
        self.provenance = provenance
        self.known_radical = known_radical
        self.labels = labels or [f"b{i}" for i in range(self.dim)]
        self.source = source
        self._radical = None

    def __repr__(self):
        return f"StructureAlgebra(dim={self.dim}, {self.field}, provenance={self.provenance})"

    # -- arithmetic --------------------------------------------------------

    def zero(self):
        return [self.field.zero] * self.dim

    def basis_vector(self, i):
        v = self.zero()
        v[i] = self.field.one
        return v

    def multiply(self, x, y):
        out = [self.field.zero] * self.dim
        ny = [(j, b) for j, b in enumerate(y) if b]
        if not ny:
            return out
        for i, a in enumerate(x):
            if not a:
                continue
            row = self.table[i]
            for j, b in ny:
                ab = a * b
                for k, c in row[j].items():
                    out[k] += ab * c
        return out

    def add(self, x, y):
        return [a + b for a, b in zip(x, y)]

    def sub(self, x, y):
        return [a - b for a, b in zip(x, y)]

    def scale(self, c, x):
        return [c * a for a in x]

    def is_zero(self, x):
        return not any(x)

    def power(self, x, n):
        r = self.unit
        for _ in range(n):
            r = self.multiply(r, x)
        return r

    def left_matrix(self, x):
        """Matrix of y -> x*y in the basis (columns = images of b_j)."""
        cols = [self.multiply(x, self.basis_vector(j)) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def check_associative(self) -> bool:
        e = [self.basis_vector(i) for i in range(self.dim)]
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.multiply(e[i], e[j])
                for k in range(self.dim):
                    if self.multiply(ij, e[k]) != self.multiply(e[i], self.multiply(e[j], e[k])):
                        return False
        return True

    def check_unit(self) -> bool:
        return all(self.multiply(self.unit, self.basis_vector(i)) == self.basis_vector(i)
                   and self.multiply(self.basis_vector(i), self.unit) == self.basis_vector(i)
                   for i in range(self.dim))

    # -- subspaces -----------------------------------------------------------

    def span(self, vectors):
        """Row-reduced basis of the span."""
        vectors = [v for v in vectors if any(v)]
        if not vectors:
            return []
        red, rk, _ = rref(vectors)
        return red[:rk]

    def product_space(self, U, V):
        return self.span([self.multiply(u, v) for u in U for v in V])

    def corner(self, e, f, space=None):
        """Basis of e * space * f (space defaults to the whole algebra)."""
        vecs = space if space is not None else [self.basis_vector(i) for i in range(self.dim)]
        return self.span([self.multiply(self.multiply(e, v), f) for v in vecs])

    # -- radical ---------------------------------------------------------------

    def radical(self):
        if self._radical is None:
            if self.known_radical is not None:
                self._radical = self.span(self.known_radical)
            else:
                self._radical = trace_radical(self)
        return self._radical

    def radical_powers(self):
        """[J, J^2, ..., 0]; the last entry is the zero space."""
        J = self.radical()
        powers = [J]
        while powers[-1]:
            nxt = self.product_space(powers[-1], J)
            if len(nxt) == len(powers[-1]):
                raise ValueError("radical is not nilpotent")
            powers.append(nxt)
        return powers


def trace_radical(sa: StructureAlgebra):
    """Dickson's criterion {x : tr(L_x L_y) = 0 for all y}.  Valid in
    characteristic 0 and in characteristic p > dim."""
    f = sa.field
    if f.characteristic and f.characteristic <= sa.dim:
        raise UnsupportedCharacteristic(
            f"radical of a generic algebra of dim {sa.dim} over {f} needs characteristic 0 or > dim")
    n = sa.dim
    # L_i[k][l] = c_{i l k}
    gram = [[f.zero] * n for _ in range(n)]
    for i in range(n):
        Ti = sa.table[i]
        for j in range(i, n):
            Tj = sa.table[j]
            s = f.zero
            # tr(L_i L_j) = sum_{l,m} c_{i m l} c_{j l m}
            for m in range(n):
                row = Ti[m]
                if not row:
                    continue
                for l, c in row.items():
                    d = Tj[l].get(m)
                    if d:
                        s += c * d
            gram[i][j] = s
            gram[j][i] = s
    return kernel_basis(gram, n, f)


def quotient_data(sa: StructureAlgebra, J):
    """Complement coordinates for sa/J.

    Returns (comp, reduce) where ``comp`` lists the basis indices spanning a
    complement and ``reduce(v)`` gives the coordinates of v mod J on comp."""
    if J:
        red, rk, piv = rref(J)
        red = red[:rk]
    else:
        red, piv = [], []
    pivset = set(piv)
    comp = [i for i in range(sa.dim) if i not in pivset]

    def reduce(v):
        v = list(v)
        for row, pc in zip(red, piv):
            c = v[pc]
            if c:
                for k, x in enumerate(row):
                    if x:
                        v[k] -= c * x
        return [v[i] for i in comp]

    return comp, reduce


def semisimple_quotient(sa: StructureAlgebra):
    J = sa.radical()
    comp, reduce = quotient_data(sa, J)
    m = len(comp)
    table = []
    for a in comp:
        row = []
        for b in comp:
            prod = sa.table[a][b]
            v = [sa.field.zero] * sa.dim
            for k, c in prod.items():
                v[k] = c
            r = reduce(v)
            row.append({k: c for k, c in enumerate(r) if c})
        table.append(row)
    unit = reduce(sa.unit)
    q = StructureAlgebra(sa.field, table, unit, "generic", known_radical=[])
    return q, comp, reduce


# ---------------------------------------------------------------------------
# splitting a split semisimple algebra


def minimal_polynomial(alg: StructureAlgebra, x, e):
    """Coefficients c_0..c_d (monic) of the minimal polynomial of x in the
    corner algebra with unit e."""
    powers = [e]
    while True:
        nxt = alg.multiply(powers[-1], x)
        coeffs = coordinates(powers, nxt)
        if coeffs is not None:
            return [-c for c in coeffs] + [alg.field.one]
        powers.append(nxt)


def field_roots(field: FieldSpec, coeffs):
    """Distinct roots in the field of sum coeffs[i] t^i."""
    if field.kind == "GF":
        roots = []
        for a in field.elements():
            s = field.zero
            for c in reversed(coeffs):
                s = s * a + c
            if not s:
                roots.append(a)
        return roots
    import sympy
    t = sympy.Symbol("t")
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)], t, domain="QQ")
    out = []
    for r in poly.ground_roots():
        out.append(field(__import__("fractions").Fraction(int(r.p), int(r.q))))
    return sorted(out)


def _candidates(alg: StructureAlgebra, C, rng):
    yield from C
    for i in range(len(C)):
        for j in range(i + 1, len(C)):
            yield alg.add(C[i], C[j])
            yield alg.multiply(C[i], C[j])
            yield alg.multiply(C[j], C[i])
    for _ in range(24):
        v = alg.zero()
        for c in C:
            v = alg.add(v, alg.scale(alg.field(rng.randint(-3, 3)), c))
        yield v


def _idempotent_in_right_ideal(alg: StructureAlgebra, y, e, C):
    """An idempotent f generating y*C (with y in the corner eAe, semisimple)."""
    gens = alg.span([alg.multiply(y, c) for c in C])
    # f = y*w, w in C, with f*g = g for every g in gens; linear in w
    n = len(C)
    yC = [alg.multiply(y, c) for c in C]
    rows, rhs = [], []
    for g in gens:
        cols = [alg.multiply(yc, g) for yc in yC]
        for k in range(alg.dim):
            rows.append([cols[j][k] for j in range(n)])
            rhs.append(g[k])
    w = solve(rows, rhs, alg.field)
    if w is None:
        return None
    f = alg.zero()
    for c, yc in zip(w, yC):
        if c:
            f = alg.add(f, alg.scale(c, yc))
    return f


def split_semisimple(alg: StructureAlgebra, seed: int = 0):
    """Primitive orthogonal idempotents of a split semisimple algebra."""
    rng = random.Random(seed)
    out = []
    stack = [alg.unit]
    while stack:
        e = stack.pop()
        C = alg.corner(e, e)
        if len(C) <= 1:
            out.append(e)
            continue
        found = None
        for x in _candidates(alg, C, rng):
            if not any(x):
                continue
            poly = minimal_polynomial(alg, x, e)
            if len(poly) <= 2:
                continue  # scalar multiple of e
            roots = field_roots(alg.field, poly)
            if not roots:
                continue
            y = alg.sub(x, alg.scale(roots[0], e))
            f = _idempotent_in_right_ideal(alg, y, e, C)
            if f is None or not any(f) or f == e:
                continue
            found = f
            break
        if found is None:
            raise NonSplitQuotient(
                f"a simple factor of dimension {len(C)} over {alg.field} does not split; "
                "try a prime field GF(p) containing the needed roots of unity")
        stack.append(alg.sub(e, found))
        stack.append(found)
    return _order_idempotents(alg, out)


def _order_idempotents(alg, idems):
    # deterministic order: by first nonzero coordinate position, then values
    def key(v):
        nz = [i for i, x in enumerate(v) if x]
        return (nz[0] if nz else -1, len(nz))
    return sorted(idems, key=key)


def lift_idempotents(sa: StructureAlgebra):
    """Complete list of primitive orthogonal idempotents of ``sa``."""
    q, comp, reduce = semisimple_quotient(sa)
    eps = split_semisimple(q)
    f = sa.field

    def embed(v):
        out = sa.zero()
        for c, i in zip(v, comp):
            out[i] = c
        return out

    rem = list(sa.unit)
    lifted = []
    for idx, ep in enumerate(eps):
        if idx == len(eps) - 1:
            x = rem
        else:
            y = embed(ep)
            x = sa.multiply(sa.multiply(rem, y), rem)
            for _ in range(MAX_LIFT_STEPS):
                x2 = sa.multiply(x, x)
                if x2 == x:
                    break
                x3 = sa.multiply(x2, x)
                x = [3 * a - 2 * b for a, b in zip(x2, x3)]
            else:
                raise RuntimeError("idempotent lifting did not converge")
        lifted.append(x)
        rem = sa.sub(rem, x)
    return lifted


def in_space(space, v) -> bool:
    if not any(v):
        return True
    if not space:
        return False
    return rref(space + [v])[1] == len(space)


def isomorphic_idempotents(sa: StructureAlgebra, e, f, J=None):
    """Witness (u, v) with u in e A f, v in f A e, u*v not in J, or None."""
    J = sa.radical() if J is None else J
    EF = sa.corner(e, f)
    FE = sa.corner(f, e)
    for u in EF:
        for v in FE:
            uv = sa.multiply(u, v)
            if not in_space(J, uv):
                return u, v
    return None


def corner_inverse(sa: StructureAlgebra, x, e):
    """Inverse of x inside the corner algebra eAe."""
    C = sa.corner(e, e)
    n = len(C)
    rows, rhs = [], []
    prods = [sa.multiply(x, c) for c in C]
    for k in range(sa.dim):
        rows.append([p[k] for p in prods])
        rhs.append(e[k])
    w = solve(rows, rhs, sa.field)
    if w is None:
        raise ZeroDivisionError("element not invertible in the corner")
    y = sa.zero()
    for c, v in zip(w, C):
        if c:
            y = sa.add(y, sa.scale(c, v))
    return y


@dataclass
class MoritaPiece:
    idempotent: list
    vertex: str
    u: list  # in e_vertex A f
    v: list  # in f A e_vertex; v*u = f, u*v = e_vertex


@dataclass
class BasicPresentation:
    algebra: BoundQuiverAlgebra
    multiplicities: dict
    vertex_idempotents: dict
    arrow_elements: dict
    path_images: list
    morita: list
    source: StructureAlgebra
    idempotents: list = field(default_factory=list)

    def image(self, x):
        """Image in the source algebra of an element of the basic algebra."""
        sa = self.source
        out = sa.zero()
        for c, img in zip(x, self.path_images):
            if c:
                out = sa.add(out, sa.scale(c, img))
        return out

    def preimage(self, y):
        """Coordinates in the basic algebra of y in e A e."""
        c = coordinates(self.path_images, y)
        if c is None:
            raise ValueError("element does not lie in the basic corner")
        return c


def idempotent_classes(sa: StructureAlgebra, idems):
    J = sa.radical()
    classes = []  # list of lists of indices
    reps = []
    for i, e in enumerate(idems):
        for cl in classes:
            if isomorphic_idempotents(sa, idems[cl[0]], e, J) is not None:
                cl.append(i)
                break
        else:
            classes.append([i])
    return classes


def basic_presentation(sa: StructureAlgebra, degree_budget: int = 64) -> BasicPresentation:
    f = sa.field
    idems = lift_idempotents(sa)
    J = sa.radical()
    classes = idempotent_classes(sa, idems)
    names = [f"v{i}" for i in range(len(classes))]
    reps = [idems[cl[0]] for cl in classes]
    morita = []
    for ci, cl in enumerate(classes):
        ec = reps[ci]
        for k in cl:
            fk = idems[k]
            if k == cl[0]:
                morita.append(MoritaPiece(fk, names[ci], fk, fk))
                continue
            u, v = isomorphic_idempotents(sa, ec, fk, J)  # u in ec A fk, v in fk A ec
            vu = sa.multiply(v, u)  # in fk A fk, invertible there
            w = corner_inverse(sa, vu, fk)
            v2 = sa.multiply(w, v)
            morita.append(MoritaPiece(fk, names[ci], u, v2))
    powers = sa.radical_powers()
    J2 = powers[1] if len(powers) > 1 else []
    nil = len(powers)  # J^nil = 0
    if nil > degree_budget:
        raise PresentationDegreeOverflow(f"radical nilpotency {nil} exceeds budget {degree_budget}")
    arrows = []
    arrow_elements = {}
    counter = 0
    for i, ei in enumerate(reps):
        for j, ej in enumerate(reps):
            top = sa.corner(ei, ej, J)
            low = sa.corner(ei, ej, J2)
            chosen = list(low)
            for x in top:
                if not in_space(chosen, x):
                    chosen.append(x)
                    name = f"a{counter}"
                    counter += 1
                    arrows.append(Arrow(name, names[i], names[j]))
                    arrow_elements[name] = x
    quiver = Quiver(names, arrows)
    videm = {names[i]: reps[i] for i in range(len(reps))}

    def image_of(p: Path):
        if p.is_trivial:
            return videm[p.source]
        x = arrow_elements[p.arrows[0]]
        for a in p.arrows[1:]:
            x = sa.multiply(x, arrow_elements[a])
        return x

    # kernel of kQ_{<=nil} -> eAe, per endpoint block
    blocks = {}
    for v in names:
        for p in quiver.paths_from(v, nil + 1):
            blocks.setdefault((p.source, p.target), []).append(p)
    candidates = []
    for key, ps in blocks.items():
        cols = sorted(ps, key=quiver.sort_key, reverse=True)
        imgs = [image_of(p) for p in cols]
        mat = [[img[k] for img in imgs] for k in range(sa.dim)]
        ker = kernel_basis(mat, len(cols), f)
        if ker:
            red, rk, piv = rref(ker)
            for row, pc in zip(red[:rk], piv):
                terms = [(row[c], cols[c]) for c in range(len(cols)) if row[c]]
                candidates.append((quiver.sort_key(cols[pc]), terms))
    candidates.sort(key=lambda t: t[0])
    relations = _minimal_relations(quiver, f, [t for _, t in candidates], nil + 1)
    cap = nil + 1 + len(names)
    B = BoundQuiverAlgebra(quiver, relations, f, degree_cap=cap)
    dim_e = len(sa.corner(_sum(sa, reps), _sum(sa, reps)))
    if B.dimension != dim_e:
        # fall back to every kernel element as a relation
        B = BoundQuiverAlgebra(quiver, [Relation(t) for _, t in candidates], f, degree_cap=cap)
        if B.dimension != dim_e:
            raise RuntimeError(f"presentation has dim {B.dimension}, corner has dim {dim_e}")
    path_images = [image_of(p) for p in B.basis]
    mult = {names[i]: len(cl) for i, cl in enumerate(classes)}
    return BasicPresentation(B, mult, videm, arrow_elements, path_images, morita, sa, idems)


def _sum(sa, vecs):
    out = sa.zero()
    for v in vecs:
        out = sa.add(out, v)
    return out


def _minimal_relations(quiver: Quiver, field: FieldSpec, candidates, trunc: int):
    """Greedy selection: keep a candidate unless it lies in the ideal
    generated (modulo paths of length >= trunc) by the ones kept so far."""
    from_v, to_v = {}, {}
    for v in quiver.vertices:
        for p in quiver.paths_from(v, trunc):
            from_v.setdefault(p.source, []).append(p)
            to_v.setdefault(p.target, []).append(p)
    spans = {}  # block -> (cols index, rows)
    chosen = []

    def block_cols(key):
        if key not in spans:
            s, t = key
            ps = [p for p in from_v.get(s, []) if p.target == t]
            ps.sort(key=quiver.sort_key, reverse=True)
            spans[key] = ({p: i for i, p in enumerate(ps)}, [])
        return spans[key]

    def as_row(idx, terms):
        row = [field.zero] * len(idx)
        for c, p in terms:
            if p in idx:
                row[idx[p]] += c
        return row

    for terms in candidates:
        s, t = terms[0][1].source, terms[0][1].target
        idx, rows = block_cols((s, t))
        row = as_row(idx, terms)
        if rows:
            red, rk, _ = rref(rows)
            if in_space(red[:rk], row):
                continue
        rel = Relation(terms)
        chosen.append(rel)
        minlen = min(len(p) for _, p in terms)
        for left in to_v.get(s, []):
            for right in from_v.get(t, []):
                if len(left) + len(right) + minlen >= trunc:
                    continue
                key = (left.source, right.target)
                idx2, rows2 = block_cols(key)
                new = []
                for c, p in terms:
                    full = Path(left.source, right.target, left.arrows + p.arrows + right.arrows)
                    if len(full) < trunc:
                        new.append((c, full))
                if new:
                    rows2.append(as_row(idx2, new))
    return chosen


def from_bound_quiver(alg: BoundQuiverAlgebra) -> StructureAlgebra:
    rad = [alg.basis_vector(i) for i, p in enumerate(alg.basis) if not p.is_trivial]
    labels = [str(p) for p in alg.basis]
    table = [[dict(alg.table[i][j]) for j in range(alg.dimension)] for i in range(alg.dimension)]
    return StructureAlgebra(alg.field, table, alg.unit(), "bound", known_radical=rad,
                            labels=labels, source=alg)


def matrix_algebra(field: FieldSpec, n: int) -> StructureAlgebra:
    """Full n x n matrix algebra with basis E_ij (index i*n + j)."""
    d = n * n
    table = [[{} for _ in range(d)] for _ in range(d)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                table[i * n + j][j * n + k] = {i * n + k: field.one}
    unit = [field.zero] * d
    for i in range(n):
        unit[i * n + i] = field.one
    return StructureAlgebra(field, table, unit, "generic", labels=[f"E{i}{j}" for i in range(n) for j in range(n)])


def product_algebra(field: FieldSpec, r: int) -> StructureAlgebra:
    table = [[({i: field.one} if i == j else {}) for j in range(r)] for i in range(r)]
    return StructureAlgebra(field, table, [field.one] * r, "generic")


def upper_triangular(field: FieldSpec) -> StructureAlgebra:
    """2x2 upper triangular matrices, basis E11, E12, E22."""
    o = field.one
    t = [[{} for _ in range(3)] for _ in range(3)]
    t[0][0] = {0: o}
    t[0][1] = {1: o}
    t[1][2] = {1: o}
    t[2][2] = {2: o}
    return StructureAlgebra(field, t, [o, field.zero, o], "generic", labels=["E11", "E12", "E22"])
