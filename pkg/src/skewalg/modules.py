"""Finite-dimensional right modules over bound quiver algebras.

A module is a representation: a vector space per vertex and, for each
arrow a: s -> t, a matrix of shape dim(s) x dim(t) acting on row vectors
(x -> x M_a).  Paths act by the product of their arrow matrices in order.

Homomorphisms are dicts vertex -> matrix (dim M_v x dim N_v) with the same
row-vector convention; ``f.then(g)`` is g after f.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import HasInjectiveSummand, HasProjectiveSummand, NonSplitEndo, RelationsNotPreserved
from .linalg import (coordinates, identity, inverse, kernel_basis, matmul, rref, transpose, zeros)
from .quiver import BoundQuiverAlgebra, Path
from .structure import StructureAlgebra, field_roots


def mul(field, X, Y, cols):
    """X (r x k) times Y (k x cols), robust to empty dimensions."""
    if not X:
        return []
    if not X[0]:
        return zeros(field, len(X), cols)
    if cols == 0:
        return [[] for _ in X]
    return matmul(X, Y)


def row_kernel(field, F, rows):
    """Basis of {x : x F = 0} for an (rows x c) matrix F."""
    if rows == 0:
        return []
    if not F or not F[0]:
        return identity(field, rows)
    return kernel_basis(transpose(F), rows, field)


def row_span(vectors):
    vectors = [v for v in vectors if any(v)]
    if not vectors:
        return []
    red, rk, _ = rref(vectors)
    return red[:rk]


def opposite_of(alg: BoundQuiverAlgebra) -> BoundQuiverAlgebra:
    """Cached opposite algebra; ``opposite_of(opposite_of(A)) is A``."""
    op = getattr(alg, "_opposite", None)
    if op is None:
        op = alg.opposite()
        op._opposite = alg
        alg._opposite = op
    return op


class Rep:
    def __init__(self, alg: BoundQuiverAlgebra, dims: dict, maps: dict, name: str | None = None):
        self.alg = alg
        self.field = alg.field
        self.quiver = alg.quiver
        self.dims = {v: int(dims.get(v, 0)) for v in self.quiver.vertices}
        self.maps = {}
        f = self.field
        for a in self.quiver.arrows:
            r, c = self.dims[a.source], self.dims[a.target]
            m = maps.get(a.name)
            if m is None or r == 0:
                m = zeros(f, r, c)
            m = [[f(x) for x in row] for row in m]
            if len(m) != r or any(len(row) != c for row in m):
                raise ValueError(f"arrow {a.name} needs a {r}x{c} matrix")
            self.maps[a.name] = m
        self.name = name

    def __repr__(self):
        return f"Rep({self.name or ''} dims={self.dim_vector()})"

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def dim_vector(self):
        return tuple(self.dims[v] for v in self.quiver.vertices)

    def path_matrix(self, p: Path):
        f = self.field
        if p.is_trivial:
            return identity(f, self.dims[p.source])
        m = self.maps[p.arrows[0]]
        for a in p.arrows[1:]:
            m = mul(f, m, self.maps[a], self.dims[self.quiver.arrow[a].target])
        return m

    def relation_defects(self):
        out = []
        f = self.field
        for r in self.alg.relations:
            r_, c_ = self.dims[r.source], self.dims[r.target]
            tot = zeros(f, r_, c_)
            for c, p in r:
                pm = self.path_matrix(p)
                for i in range(r_):
                    for j in range(c_):
                        tot[i][j] += c * pm[i][j]
            if any(x for row in tot for x in row):
                out.append(r)
        return out

    def check(self):
        bad = self.relation_defects()
        if bad:
            raise RelationsNotPreserved(f"module violates relation {bad[0]!r}")
        return self

    def act(self, v, vec, arrow):
        a = self.quiver.arrow[arrow]
        return mul(self.field, [vec], self.maps[arrow], self.dims[a.target])[0] if self.dims[v] else []

    def same_as(self, other: "Rep") -> bool:
        return self.alg is other.alg and self.dims == other.dims and self.maps == other.maps


@dataclass
class Hom:
    source: Rep
    target: Rep
    mats: dict

    @property
    def field(self):
        return self.source.field

    def then(self, g: "Hom") -> "Hom":
        """g after self."""
        f = self.field
        return Hom(self.source, g.target,
                   {v: mul(f, self.mats[v], g.mats[v], g.target.dims[v]) for v in self.source.quiver.vertices})

    def add(self, g: "Hom") -> "Hom":
        return Hom(self.source, self.target, {v: [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.mats[v], g.mats[v])]
                                              for v in self.mats})

    def scale(self, c) -> "Hom":
        return Hom(self.source, self.target, {v: [[c * a for a in r] for r in m] for v, m in self.mats.items()})

    def is_zero(self) -> bool:
        return all(not x for m in self.mats.values() for r in m for x in r)

    def is_iso(self) -> bool:
        for v in self.source.quiver.vertices:
            d = self.source.dims[v]
            if d != self.target.dims[v]:
                return False
            if d and rref(self.mats[v])[1] != d:
                return False
        return True

    def inverse(self) -> "Hom":
        f = self.field
        return Hom(self.target, self.source,
                   {v: (inverse(m, f) if m else []) for v, m in self.mats.items()})

    def flat(self):
        return [x for v in self.source.quiver.vertices for r in self.mats[v] for x in r]

    def rank(self) -> int:
        return sum(rref(m)[1] for m in self.mats.values() if m and m[0])

    def check(self) -> bool:
        f = self.field
        M, N = self.source, self.target
        for a in M.quiver.arrows:
            s, t = a.source, a.target
            lhs = mul(f, M.maps[a.name], self.mats[t], N.dims[t])
            rhs = mul(f, self.mats[s], N.maps[a.name], N.dims[t])
            if lhs != rhs:
                return False
        return True


def identity_hom(M: Rep) -> Hom:
    return Hom(M, M, {v: identity(M.field, d) for v, d in M.dims.items()})


def zero_hom(M: Rep, N: Rep) -> Hom:
    return Hom(M, N, {v: zeros(M.field, M.dims[v], N.dims[v]) for v in M.quiver.vertices})


def unflatten(M: Rep, N: Rep, vec) -> Hom:
    mats = {}
    k = 0
    for v in M.quiver.vertices:
        r, c = M.dims[v], N.dims[v]
        mats[v] = [list(vec[k + i * c:k + (i + 1) * c]) for i in range(r)]
        k += r * c
    return Hom(M, N, mats)


# ---------------------------------------------------------------------------
# standard modules


def zero_rep(alg) -> Rep:
    return Rep(alg, {}, {}, "0")


def simple(alg: BoundQuiverAlgebra, v: str) -> Rep:
    return Rep(alg, {v: 1}, {}, f"S_{v}")


def projective(alg: BoundQuiverAlgebra, v: str) -> Rep:
    """P_v = e_v A, spanned by the basis paths starting at v."""
    q = alg.quiver
    idx = {w: alg.basis_between(v, w) for w in q.vertices}
    pos = {w: {b: i for i, b in enumerate(idx[w])} for w in q.vertices}
    dims = {w: len(idx[w]) for w in q.vertices}
    maps = {}
    f = alg.field
    for a in q.arrows:
        s, t = a.source, a.target
        m = zeros(f, dims[s], dims[t])
        av = alg.arrow_element(a.name)
        for i, b in enumerate(idx[s]):
            prod = alg.multiply(alg.basis_vector(b), av)
            for k, c in enumerate(prod):
                if c:
                    m[i][pos[t][k]] = c
        maps[a.name] = m
    return Rep(alg, dims, maps, f"P_{v}")


def injective(alg: BoundQuiverAlgebra, v: str) -> Rep:
    """I_v = D(A e_v): at w the dual of the basis paths w -> v."""
    q = alg.quiver
    idx = {w: alg.basis_between(w, v) for w in q.vertices}
    pos = {w: {b: i for i, b in enumerate(idx[w])} for w in q.vertices}
    dims = {w: len(idx[w]) for w in q.vertices}
    maps = {}
    f = alg.field
    for a in q.arrows:
        s, t = a.source, a.target
        m = zeros(f, dims[s], dims[t])
        av = alg.arrow_element(a.name)
        # (phi_p . a)(y) = phi_p(a y), y among paths t -> v
        for j, b in enumerate(idx[t]):
            prod = alg.multiply(av, alg.basis_vector(b))
            for k, c in enumerate(prod):
                if c:
                    m[pos[s][k]][j] = c
        maps[a.name] = m
    return Rep(alg, dims, maps, f"I_{v}")


def direct_sum(mods, alg=None):
    """(sum module, inclusions, projections)."""
    if not mods:
        return zero_rep(alg), [], []
    alg = mods[0].alg
    f = alg.field
    q = alg.quiver
    dims = {v: sum(M.dims[v] for M in mods) for v in q.vertices}
    maps = {}
    for a in q.arrows:
        m = zeros(f, dims[a.source], dims[a.target])
        r0 = c0 = 0
        for M in mods:
            for i, row in enumerate(M.maps[a.name]):
                for j, x in enumerate(row):
                    m[r0 + i][c0 + j] = x
            r0 += M.dims[a.source]
            c0 += M.dims[a.target]
        maps[a.name] = m
    S = Rep(alg, dims, maps, "+".join(M.name or "?" for M in mods))
    incs, projs = [], []
    off = {v: 0 for v in q.vertices}
    for M in mods:
        inc, pr = {}, {}
        for v in q.vertices:
            d, D, o = M.dims[v], dims[v], off[v]
            inc[v] = [[f.one if j == o + i else f.zero for j in range(D)] for i in range(d)]
            pr[v] = [[f.one if i == o + j else f.zero for j in range(d)] for i in range(D)]
            off[v] += d
        incs.append(Hom(M, S, inc))
        projs.append(Hom(S, M, pr))
    return S, incs, projs


def power(M: Rep, n: int) -> Rep:
    return direct_sum([M] * n, M.alg)[0] if n else zero_rep(M.alg)


# ---------------------------------------------------------------------------
# sub and quotient modules


def subrep(M: Rep, bases: dict, name=None):
    """Submodule spanned at each vertex by the given (independent, invariant)
    row vectors; returns (module, inclusion)."""
    f = M.field
    q = M.quiver
    dims = {v: len(bases.get(v, [])) for v in q.vertices}
    maps = {}
    for a in q.arrows:
        s, t = a.source, a.target
        rows = []
        for b in bases.get(s, []):
            img = mul(f, [b], M.maps[a.name], M.dims[t])[0]
            c = coordinates(bases.get(t, []), img) if dims[t] else []
            if c is None:
                raise ValueError("subspace is not invariant")
            rows.append(c)
        maps[a.name] = rows
    S = Rep(M.alg, dims, maps, name)
    inc = Hom(S, M, {v: [list(b) for b in bases.get(v, [])] for v in q.vertices})
    return S, inc


def quotient_rep(M: Rep, bases: dict, name=None):
    """M / U for an invariant U; returns (quotient, projection)."""
    f = M.field
    q = M.quiver
    comp = {}
    proj = {}
    for v in q.vertices:
        d = M.dims[v]
        U = row_span(bases.get(v, []))
        if U:
            red, rk, piv = rref(U)
        else:
            red, piv = [], []
        free = [i for i in range(d) if i not in set(piv)]
        comp[v] = free
        # x -> coordinates of x mod U on the free columns
        P = zeros(f, d, len(free))
        for i in range(d):
            e = [f.one if j == i else f.zero for j in range(d)]
            for row, pc in zip(red, piv):
                c = e[pc]
                if c:
                    e = [x - c * y for x, y in zip(e, row)]
            for k, j in enumerate(free):
                P[i][k] = e[j]
        proj[v] = P
    dims = {v: len(comp[v]) for v in q.vertices}
    maps = {}
    for a in q.arrows:
        s, t = a.source, a.target
        rows = []
        for j in comp[s]:
            e = [f.one if i == j else f.zero for i in range(M.dims[s])]
            img = mul(f, [e], M.maps[a.name], M.dims[t])[0] if M.dims[t] else []
            rows.append(mul(f, [img], proj[t], dims[t])[0] if M.dims[t] else [])
        maps[a.name] = rows
    Q = Rep(M.alg, dims, maps, name)
    return Q, Hom(M, Q, proj)


def kernel(h: Hom, name=None):
    M = h.source
    bases = {v: row_kernel(M.field, h.mats[v], M.dims[v]) for v in M.quiver.vertices}
    return subrep(M, bases, name)


def image(h: Hom, name=None):
    N = h.target
    bases = {v: row_span(h.mats[v]) for v in N.quiver.vertices}
    return subrep(N, bases, name)


def cokernel(h: Hom, name=None):
    N = h.target
    return quotient_rep(N, {v: row_span(h.mats[v]) for v in N.quiver.vertices}, name)


def radical_basis(M: Rep):
    f = M.field
    bases = {v: [] for v in M.quiver.vertices}
    for a in M.quiver.arrows:
        bases[a.target].extend(M.maps[a.name])
    return {v: row_span(b) for v, b in bases.items()}


def radical(M: Rep):
    return subrep(M, radical_basis(M))


def top_dims(M: Rep):
    rb = radical_basis(M)
    return {v: M.dims[v] - len(rb[v]) for v in M.quiver.vertices}


def socle_basis(M: Rep):
    f = M.field
    out = {}
    for v in M.quiver.vertices:
        arrs = M.quiver.out_arrows[v]
        if not arrs:
            out[v] = identity(f, M.dims[v])
            continue
        F = [sum((M.maps[a.name][i] for a in arrs), []) for i in range(M.dims[v])]
        out[v] = row_kernel(f, F, M.dims[v])
    return out


def socle_dims(M: Rep):
    return {v: len(b) for v, b in socle_basis(M).items()}


# ---------------------------------------------------------------------------
# Hom spaces


def hom_space(M: Rep, N: Rep):
    """Basis of Hom_A(M, N)."""
    f = M.field
    q = M.quiver
    offs = {}
    n = 0
    for v in q.vertices:
        offs[v] = n
        n += M.dims[v] * N.dims[v]
    if n == 0:
        return []
    rows = []
    for a in q.arrows:
        s, t = a.source, a.target
        ds, dt = M.dims[s], N.dims[t]
        if ds == 0 or dt == 0:
            continue
        Ma, Na = M.maps[a.name], N.maps[a.name]
        # (M_a f_t - f_s N_a)[i][j] = 0
        for i in range(ds):
            for j in range(dt):
                row = [f.zero] * n
                for k in range(M.dims[t]):
                    c = Ma[i][k]
                    if c:
                        row[offs[t] + k * dt + j] += c
                for k in range(N.dims[s]):
                    c = Na[k][j]
                    if c:
                        row[offs[s] + i * N.dims[s] + k] -= c
                if any(row):
                    rows.append(row)
    basis = kernel_basis(rows, n, f) if rows else kernel_basis([], n, f)
    return [unflatten(M, N, b) for b in basis]


def hom_dim(M: Rep, N: Rep) -> int:
    return len(hom_space(M, N))


def endomorphism_algebra(M: Rep):
    """(StructureAlgebra with f*g = f after g, list of basis homs)."""
    basis = hom_space(M, M)
    f = M.field
    flats = [h.flat() for h in basis]
    n = len(basis)
    table = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            prod = basis[j].then(basis[i])
            c = coordinates(flats, prod.flat())
            table[i][j] = {k: x for k, x in enumerate(c) if x}
    unit = coordinates(flats, identity_hom(M).flat()) if n else []
    sa = StructureAlgebra(f, table, unit, "endo", labels=[f"h{i}" for i in range(n)], source=M)
    sa.homs = basis
    return sa, basis


# ---------------------------------------------------------------------------
# projective covers, syzygies, Ext


@dataclass
class Cover:
    module: Rep
    map: Hom
    vertices: list  # vertex of each indecomposable summand, in order
    generators: list  # generator element (vector in M_v) of each summand


def projective_cover(M: Rep) -> Cover:
    alg = M.alg
    f = M.field
    q = M.quiver
    rb = radical_basis(M)
    verts, gens = [], []
    for v in q.vertices:
        span = list(rb[v])
        for i in range(M.dims[v]):
            e = [f.one if j == i else f.zero for j in range(M.dims[v])]
            if not span or rref(span + [e])[1] > len(span):
                span.append(e)
                span = row_span(span)
                verts.append(v)
                gens.append(e)
    projs = [projective(alg, v) for v in verts]
    P, incs, _ = direct_sum(projs, alg)
    mats = {w: [] for w in q.vertices}
    for v, g in zip(verts, gens):
        for w in q.vertices:
            for b in alg.basis_between(v, w):
                pm = M.path_matrix(alg.basis[b])
                mats[w].append(mul(f, [g], pm, M.dims[w])[0] if M.dims[w] else [])
    return Cover(P, Hom(P, M, mats), verts, gens)


def syzygy(M: Rep):
    cov = projective_cover(M)
    K, inc = kernel(cov.map, "Omega")
    return K, inc, cov


def is_projective(M: Rep) -> bool:
    return projective_cover(M).module.total_dim == M.total_dim


def is_injective(M: Rep) -> bool:
    soc = socle_dims(M)
    tot = sum(n * injective(M.alg, v).total_dim for v, n in soc.items() if n)
    return tot == M.total_dim


def ext1_dim(M: Rep, N: Rep) -> int:
    """dim Ext^1(M, N) = dim Hom(Omega M, N) - rank of restriction from Hom(P0, N)."""
    K, inc, cov = syzygy(M)
    homs_K = hom_space(K, N)
    if not homs_K:
        return 0
    flats = [h.flat() for h in homs_K]
    restr = [inc.then(h).flat() for h in hom_space(cov.module, N)]
    rk = len(row_span(restr))
    return len(homs_K) - rk


def projective_dimension(M: Rep, cap: int = 32) -> int | None:
    """pd M (or None if it exceeds ``cap``); pd 0 = -1 by convention."""
    if M.total_dim == 0:
        return -1
    cur = M
    for n in range(cap + 1):
        if is_projective(cur):
            return n
        cur = syzygy(cur)[0]
    return None


def injective_dimension(M: Rep, cap: int = 32) -> int | None:
    return projective_dimension(dual(M), cap)


def global_dimension(alg: BoundQuiverAlgebra, cap: int = 32) -> int | None:
    best = 0
    for v in alg.quiver.vertices:
        d = projective_dimension(simple(alg, v), cap)
        if d is None:
            return None
        best = max(best, d)
    return best


# ---------------------------------------------------------------------------
# duality and the AR translate


def dual(M: Rep) -> Rep:
    """D M as a module over the opposite algebra."""
    op = opposite_of(M.alg)
    maps = {a: transpose(m, M.dims[M.quiver.arrow[a].target]) for a, m in M.maps.items()}
    return Rep(op, dict(M.dims), maps, f"D({M.name})" if M.name else None)


def dual_hom(h: Hom) -> Hom:
    return Hom(dual(h.target), dual(h.source),
               {v: transpose(m, h.target.dims[v]) for v, m in h.mats.items()})


def _nu_block(alg, v, w, x):
    """Matrices of nu(lambda_x): I_v -> I_w for x in e_w A e_v."""
    f = alg.field
    q = alg.quiver
    out = {}
    for u in q.vertices:
        src = alg.basis_between(u, v)
        tgt = alg.basis_between(u, w)
        pos = {b: i for i, b in enumerate(src)}
        m = zeros(f, len(src), len(tgt))
        for j, b in enumerate(tgt):
            prod = alg.multiply(alg.basis_vector(b), x)
            for k, c in enumerate(prod):
                if c:
                    m[pos[k]][j] = c
        out[u] = m
    return out


def has_summand(M: Rep, X: Rep) -> bool:
    """For X with local endomorphism ring: is X a direct summand of M?"""
    ins, outs = hom_space(X, M), hom_space(M, X)
    return any(f.then(g).is_iso() for f in ins for g in outs)


def tau(M: Rep) -> Rep:
    """Auslander-Reiten translate D Tr M via the Nakayama functor."""
    alg = M.alg
    f = alg.field
    q = alg.quiver
    K, inc, cov0 = syzygy(M)
    for v in sorted(set(cov0.vertices), key=q.vindex.get):
        if has_summand(M, projective(alg, v)):
            raise HasProjectiveSummand(f"P_{v} is a direct summand of {M.name or 'the module'}")
    if K.total_dim == 0:
        return zero_rep(alg)
    cov1 = projective_cover(K)
    P0 = cov0.module
    # coordinates of (P0)_v are ordered summand by summand
    x = []  # x[j][i] in e_{w_i} A e_{v_j}
    for v, g in zip(cov1.vertices, cov1.generators):
        elt = mul(f, [g], inc.mats[v], P0.dims[v])[0]
        pos = 0
        col = []
        for w in cov0.vertices:
            idx = alg.basis_between(w, v)
            vec = [f.zero] * alg.dimension
            for k, b in enumerate(idx):
                vec[b] = elt[pos + k]
            pos += len(idx)
            col.append(vec)
        x.append(col)
    Is = [injective(alg, v) for v in cov1.vertices]
    It = [injective(alg, w) for w in cov0.vertices]
    S, _, _ = direct_sum(Is, alg)
    T, _, _ = direct_sum(It, alg)
    mats = {}
    for u in q.vertices:
        m = zeros(f, S.dims[u], T.dims[u])
        r0 = 0
        for j, v in enumerate(cov1.vertices):
            c0 = 0
            for i, w in enumerate(cov0.vertices):
                blk = _nu_block(alg, v, w, x[j][i])[u]
                for a, row in enumerate(blk):
                    for b, val in enumerate(row):
                        if val:
                            m[r0 + a][c0 + b] = val
                c0 += It[i].dims[u]
            r0 += Is[j].dims[u]
        mats[u] = m
    nu = Hom(S, T, mats)
    return kernel(nu, f"tau({M.name})" if M.name else None)[0]


def tau_inv(M: Rep) -> Rep:
    try:
        t = tau(dual(M))
    except HasProjectiveSummand:
        raise HasInjectiveSummand(f"{M.name or 'module'} has an injective direct summand") from None
    r = dual(t)
    r.name = f"tau^-({M.name})" if M.name else None
    return r


# ---------------------------------------------------------------------------
# decomposition and isomorphism


def _hom_power(h: Hom, n: int) -> Hom:
    r = identity_hom(h.source)
    for _ in range(n):
        r = r.then(h)
    return r


def _min_poly(h: Hom):
    M = h.source
    pw = [identity_hom(M).flat()]
    cur = identity_hom(M)
    while True:
        cur = cur.then(h)
        c = coordinates(pw, cur.flat())
        if c is not None:
            return [-x for x in c] + [M.field.one]
        pw.append(cur.flat())


def _split_candidates(basis, rng, field):
    yield from basis
    n = len(basis)
    for i in range(n):
        for j in range(i + 1, n):
            yield basis[i].add(basis[j])
            yield basis[i].then(basis[j])
            yield basis[j].then(basis[i])
    for _ in range(16):
        h = basis[0].scale(field.zero)
        for b in basis:
            h = h.add(b.scale(field(rng.randint(-3, 3))))
        yield h


def _splitting_endo(M: Rep):
    """A non-nilpotent, non-invertible endomorphism, or None if End(M) is
    local with residue field k.  Raises NonSplitEndo if End(M) has a residue
    field larger than k and no splitting element turns up."""
    f = M.field
    n = M.total_dim
    basis = hom_space(M, M)
    idh = identity_hom(M)
    nil_parts = []
    nonsplit = False
    for h in basis:
        poly = _min_poly(h)
        roots = field_roots(f, poly)
        for lam in roots:
            g = h.add(idh.scale(-lam))
            gp = _hom_power(g, n)
            if not gp.is_zero() and not gp.is_iso():
                return g
        if len(roots) == 1 and _hom_power(h.add(idh.scale(-roots[0])), n).is_zero():
            nil_parts.append(h.add(idh.scale(-roots[0])))
        else:
            nonsplit = True
    if not nonsplit:
        # End = k.1 + N; local iff N is a nilpotent ideal
        N = row_span([g.flat() for g in nil_parts])
        cur = N
        for _ in range(n + 1):
            if not cur:
                return None
            prods = []
            for a in cur:
                ha = unflatten(M, M, a)
                for b in N:
                    prods.append(unflatten(M, M, b).then(ha).flat())
            nxt = row_span(prods)
            if len(nxt) == len(cur) and cur:
                break
            cur = nxt
    rng = random.Random(1)
    for h in _split_candidates(basis, rng, f):
        for lam in field_roots(f, _min_poly(h)):
            g = h.add(idh.scale(-lam))
            gp = _hom_power(g, n)
            if not gp.is_zero() and not gp.is_iso():
                return g
    raise NonSplitEndo(f"endomorphism ring of a module with dims {M.dim_vector()} does not split over {f}")


def _fitting(M: Rep, g: Hom):
    """M = im g^n + ker g^n; returns two (module, inclusion, projection)."""
    f = M.field
    gp = _hom_power(g, M.total_dim)
    I, inc_i = image(gp)
    K, inc_k = kernel(gp)
    pi, pk = {}, {}
    for v in M.quiver.vertices:
        B = inc_i.mats[v] + inc_k.mats[v]
        d = M.dims[v]
        if d == 0:
            pi[v], pk[v] = [], []
            continue
        Binv = inverse(B, f)
        a = I.dims[v]
        pi[v] = [row[:a] for row in Binv]
        pk[v] = [row[a:] for row in Binv]
    return (I, inc_i, Hom(M, I, pi)), (K, inc_k, Hom(M, K, pk))


@dataclass
class Summand:
    module: Rep
    inclusion: Hom
    projection: Hom


def decompose(M: Rep) -> list[Summand]:
    """Indecomposable summands with inclusions/projections into M."""
    out = []
    stack = [Summand(M, identity_hom(M), identity_hom(M))]
    while stack:
        s = stack.pop()
        X = s.module
        if X.total_dim == 0:
            continue
        g = _splitting_endo(X)
        if g is None:
            out.append(s)
            continue
        for Y, inc, pr in _fitting(X, g):
            stack.append(Summand(Y, inc.then(s.inclusion), s.projection.then(pr)))
    out.sort(key=lambda s: (s.module.total_dim, s.module.dim_vector()))
    return out


def is_indecomposable(M: Rep) -> bool:
    return M.total_dim > 0 and _splitting_endo(M) is None


def _indec_iso(X: Rep, Y: Rep) -> bool:
    if X.dims != Y.dims:
        return False
    H, K = hom_space(X, Y), hom_space(Y, X)
    for h in H:
        for k in K:
            if h.then(k).is_iso():
                return True
    return False


def find_iso(M: Rep, N: Rep, tries: int = 12):
    """An isomorphism M -> N found among random combinations, or None."""
    if M.dims != N.dims:
        return None
    H = hom_space(M, N)
    if M.total_dim == 0:
        return zero_hom(M, N)
    if not H:
        return None
    rng = random.Random(7)
    f = M.field
    for h in H:
        if h.is_iso():
            return h
    for _ in range(tries):
        h = H[0].scale(f.zero)
        for b in H:
            h = h.add(b.scale(f(rng.randint(-5, 5))))
        if h.is_iso():
            return h
    return None


def is_isomorphic(M: Rep, N: Rep) -> bool:
    if M.alg is not N.alg or M.dims != N.dims:
        return False
    if find_iso(M, N) is not None:
        return True
    a = [s.module for s in decompose(M)]
    b = [s.module for s in decompose(N)]
    if len(a) != len(b):
        return False
    used = [False] * len(b)
    for X in a:
        for j, Y in enumerate(b):
            if not used[j] and _indec_iso(X, Y):
                used[j] = True
                break
        else:
            return False
    return True


def iso_classes(mods):
    """Group indecomposables by isomorphism: list of (representative, count)."""
    out = []
    for X in mods:
        for entry in out:
            if _indec_iso(entry[0], X):
                entry[1] += 1
                break
        else:
            out.append([X, 1])
    return [(X, n) for X, n in out]


def basic_part(M: Rep) -> Rep:
    classes = iso_classes([s.module for s in decompose(M)])
    return direct_sum([X for X, _ in classes], M.alg)[0]


def residue_functional(X: Rep, basis=None):
    """For indecomposable X with End(X) local and split: the eigenvalue of
    each basis endomorphism (so x -> sum c_k lambda_k is End(X) -> k)."""
    basis = basis if basis is not None else hom_space(X, X)
    out = []
    for h in basis:
        roots = field_roots(X.field, _min_poly(h))
        if len(roots) != 1:
            raise NonSplitEndo("endomorphism ring is not local and split")
        out.append(roots[0])
    return out


def endo_radical(M: Rep, basis=None):
    """Coordinates (over the End(M) basis) spanning rad End(M); valid in any
    characteristic once End(M) splits."""
    basis = basis if basis is not None else hom_space(M, M)
    f = M.field
    if not basis:
        return []
    parts = decompose(M)
    local = []
    for s in parts:
        eb = hom_space(s.module, s.module)
        local.append((eb, [h.flat() for h in eb], residue_functional(s.module, eb)))
    rows = []
    for i, si in enumerate(parts):
        eb, flats, lam = local[i]
        for j, sj in enumerate(parts):
            for h in hom_space(sj.module, si.module):
                row = []
                for b in basis:
                    comp = si.inclusion.then(b).then(sj.projection).then(h)
                    c = coordinates(flats, comp.flat())
                    row.append(sum((x * y for x, y in zip(c, lam)), f.zero))
                rows.append(row)
    if not rows:
        return identity(f, len(basis))
    return kernel_basis(rows, len(basis), f)
