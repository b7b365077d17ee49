"""Modules over skew group algebras.

An A[G]-module is handled in three interchangeable forms:

* ``EqRep``: an A-module Y with isomorphisms R_g: Y -> ^gY satisfying
  R_gh = ^g(R_h) o R_g (equivariant representation);
* ``SModule``: a right module over the structure algebra of A[G], one matrix
  per basis element;
* a representation of the basic presentation of A[G], reached through the
  recorded Morita data.

Induction F M = M (x) A[G] and restriction H are built from these.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import NonCoherentStabilizers, NotEquivariant, NotStable
from .groups import AlgebraAction, skew_basic_presentation, skew_group_algebra, skew_structure, twist, twist_hom
from .linalg import coordinates, identity, inverse, kernel_basis, rref, zeros
from .modules import (Hom, Rep, decompose, endomorphism_algebra, find_iso, hom_space, identity_hom,
                      is_isomorphic, iso_classes, mul, row_span, unflatten)
from .structure import BasicPresentation, StructureAlgebra


@dataclass
class EqRep:
    rep: Rep
    R: list  # R[g]: rep -> twist(rep, g)
    action: AlgebraAction

    def check(self) -> bool:
        G = self.action.group
        if self.R[0].mats != identity_hom(self.rep).mats:
            return False
        for g in range(G.order):
            if not self.R[g].check():
                return False
        for g, h in itertools.product(range(G.order), repeat=2):
            lhs = self.R[G.mul(g, h)].mats
            rhs = self.R[g].then(twist_hom(self.R[h], g, self.action)).mats
            if lhs != rhs:
                return False
        return True


def free_induce(M: Rep, action: AlgebraAction) -> EqRep:
    """F M: at v the sum over g of M_{g v}; components in group order."""
    G = action.group
    f = M.field
    q = M.quiver
    n = G.order
    dims = {v: sum(M.dims[action.vertex[g][v]] for g in range(n)) for v in q.vertices}

    def offsets(v):
        out, k = [], 0
        for g in range(n):
            out.append(k)
            k += M.dims[action.vertex[g][v]]
        return out

    off = {v: offsets(v) for v in q.vertices}
    maps = {}
    for a in q.arrows:
        s, t = a.source, a.target
        m = zeros(f, dims[s], dims[t])
        for g in range(n):
            b, c = action.arrow[g][a.name]
            blk = M.maps[b]
            for i, row in enumerate(blk):
                for j, x in enumerate(row):
                    if x:
                        m[off[s][g] + i][off[t][g] + j] = c * x
        maps[a.name] = m
    Y = Rep(M.alg, dims, maps, f"F({M.name})" if M.name else None)
    R = []
    for h in range(n):
        hi = G.inv(h)
        mats = {}
        for v in q.vertices:
            w = action.vertex[hi][v]
            m = zeros(f, dims[v], dims[w])
            for g in range(n):
                gh = G.mul(g, h)
                d = M.dims[action.vertex[g][v]]
                for i in range(d):
                    m[off[v][g] + i][off[w][gh] + i] = f.one
            mats[v] = m
        R.append(Hom(Y, twist(Y, h, action), mats))
    return EqRep(Y, R, action)


def eq_hom_space(X: EqRep, Y: EqRep):
    """A[G]-homomorphisms X -> Y: A-maps commuting with the R's."""
    base = hom_space(X.rep, Y.rep)
    if not base:
        return []
    G = X.action.group
    rows = []
    cols = []
    for h in base:
        col = []
        for g in range(1, G.order):
            lhs = h.then(Y.R[g])
            rhs = X.R[g].then(twist_hom(h, g, X.action))
            col.extend(a - b for a, b in zip(lhs.flat(), rhs.flat()))
        cols.append(col)
    if not cols[0]:
        return base
    mat = [[c[i] for c in cols] for i in range(len(cols[0]))]
    ker = kernel_basis(mat, len(base), X.rep.field)
    out = []
    for k in ker:
        acc = base[0].scale(X.rep.field.zero)
        for c, h in zip(k, base):
            if c:
                acc = acc.add(h.scale(c))
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# right modules over the structure algebra of A[G]


@dataclass
class SModule:
    algebra: StructureAlgebra
    dim: int
    rho: list  # rho[k]: dim x dim matrix of y -> y b_k

    def act_matrix(self, x):
        f = self.algebra.field
        m = zeros(f, self.dim, self.dim)
        for k, c in enumerate(x):
            if c:
                for i, row in enumerate(self.rho[k]):
                    for j, y in enumerate(row):
                        if y:
                            m[i][j] += c * y
        return m

    def check(self) -> bool:
        sa = self.algebra
        f = sa.field
        if self.act_matrix(sa.unit) != identity(f, self.dim):
            return False
        for i in range(sa.dim):
            for j in range(sa.dim):
                lhs = self.act_matrix(sa.multiply(sa.basis_vector(i), sa.basis_vector(j)))
                rhs = mul(f, self.rho[i], self.rho[j], self.dim)
                if lhs != rhs:
                    return False
        return True


def _offsets(M: Rep):
    off, k = {}, 0
    for v in M.quiver.vertices:
        off[v] = k
        k += M.dims[v]
    return off, k


def eq_to_smodule(Y: EqRep, S: StructureAlgebra) -> SModule:
    M = Y.rep
    f = M.field
    action = Y.action
    G = action.group
    n = G.order
    off, N = _offsets(M)
    Rtot = []
    for g in range(n):
        gi = G.inv(g)
        m = zeros(f, N, N)
        for v in M.quiver.vertices:
            w = action.vertex[gi][v]
            for i, row in enumerate(Y.R[g].mats[v]):
                for j, x in enumerate(row):
                    if x:
                        m[off[v] + i][off[w] + j] = x
        Rtot.append(m)
    rho = []
    for p in M.alg.basis:
        P = zeros(f, N, N)
        pm = M.path_matrix(p)
        for i, row in enumerate(pm):
            for j, x in enumerate(row):
                if x:
                    P[off[p.source] + i][off[p.target] + j] = x
        for g in range(n):
            rho.append(mul(f, P, Rtot[g], N) if N else [])
    return SModule(S, N, rho)


def smodule_to_eq(Ym: SModule, S: StructureAlgebra) -> EqRep:
    action: AlgebraAction = S.action
    A = action.alg
    G = action.group
    n = G.order
    f = A.field
    q = A.quiver
    idx = {p: i for i, p in enumerate(A.basis)}
    bases = {}
    for v in q.vertices:
        k = idx[q.trivial(v)] * n
        bases[v] = row_span(Ym.rho[k]) if Ym.dim else []
    dims = {v: len(bases[v]) for v in q.vertices}

    def coords(v, vec):
        c = coordinates(bases[v], vec) if bases[v] else []
        if c is None:
            raise ValueError("vector outside the vertex space")
        return c

    maps = {}
    for a in q.arrows:
        k = idx[q.path([a.name])] * n
        maps[a.name] = [coords(a.target, mul(f, [b], Ym.rho[k], Ym.dim)[0]) for b in bases[a.source]]
    Y = Rep(A, dims, maps)
    R = []
    for g in range(n):
        gi = G.inv(g)
        one_g = [f.zero] * S.dim
        for v in q.vertices:
            one_g[idx[q.trivial(v)] * n + g] = f.one
        Mg = Ym.act_matrix(one_g)
        mats = {}
        for v in q.vertices:
            w = action.vertex[gi][v]
            mats[v] = [coords(w, mul(f, [b], Mg, Ym.dim)[0]) for b in bases[v]]
        R.append(Hom(Y, twist(Y, g, action), mats))
    return EqRep(Y, R, action)


def smodule_to_basic(Ym: SModule, bp: BasicPresentation) -> Rep:
    B = bp.algebra
    f = B.field
    bases = {v: (row_span(Ym.act_matrix(e)) if Ym.dim else []) for v, e in bp.vertex_idempotents.items()}
    maps = {}
    for a in B.quiver.arrows:
        X = Ym.act_matrix(bp.arrow_elements[a.name])
        rows = []
        for b in bases[a.source]:
            img = mul(f, [b], X, Ym.dim)[0]
            c = coordinates(bases[a.target], img) if bases[a.target] else []
            if c is None:
                raise ValueError("arrow image leaves the vertex space")
            rows.append(c)
        maps[a.name] = rows
    return Rep(B, {v: len(b) for v, b in bases.items()}, maps)


def _transfer_table(bp: BasicPresentation):
    """For each basis element s of the source algebra, the nonzero
    (k, l, coordinates of u_k s v_l in the basic algebra); module independent."""
    table = getattr(bp, "_transfer", None)
    if table is None:
        S = bp.source
        table = []
        for m in range(S.dim):
            s = S.basis_vector(m)
            entries = []
            for k, pk in enumerate(bp.morita):
                us = S.multiply(pk.u, s)
                if not any(us):
                    continue
                for l, pl in enumerate(bp.morita):
                    x = S.multiply(us, pl.v)
                    if any(x):
                        entries.append((k, l, [(ci, c) for ci, c in enumerate(bp.preimage(x)) if c]))
            table.append(entries)
        bp._transfer = table
    return table


def basic_to_smodule(Z: Rep, bp: BasicPresentation) -> SModule:
    S = bp.source
    B = bp.algebra
    f = S.field
    comps = [piece.vertex for piece in bp.morita]
    offs, N = [], 0
    for c in comps:
        offs.append(N)
        N += Z.dims[c]
    pm = [Z.path_matrix(p) for p in B.basis]
    rho = []
    for entries in _transfer_table(bp):
        R = zeros(f, N, N)
        for k, l, coords in entries:
            for ci, coef in coords:
                for i, row in enumerate(pm[ci]):
                    for j, y in enumerate(row):
                        if y:
                            R[offs[k] + i][offs[l] + j] += coef * y
        rho.append(R)
    return SModule(S, N, rho)


# ---------------------------------------------------------------------------
# the skew context: A, action, A[G] and its basic presentation


class SkewContext:
    """Bundles A, a G-action, A[G] and its basic presentation."""

    def __init__(self, action: AlgebraAction):
        self.action = action
        self.alg = action.alg
        self.group = action.group
        self.S = skew_group_algebra(self.alg, action)
        self._bp = None

    @property
    def basic(self) -> BasicPresentation:
        if self._bp is None:
            self._bp = skew_basic_presentation(self.S)
        return self._bp

    def induce_eq(self, M: Rep) -> EqRep:
        return free_induce(M, self.action)

    def induce(self, M: Rep) -> Rep:
        Y = free_induce(M, self.action)
        Z = smodule_to_basic(eq_to_smodule(Y, self.S), self.basic)
        Z.name = f"F({M.name})" if M.name else None
        return Z

    def to_eq(self, Z: Rep) -> EqRep:
        return smodule_to_eq(basic_to_smodule(Z, self.basic), self.S)

    def restrict(self, Z: Rep) -> Rep:
        return self.to_eq(Z).rep

    def twist(self, M: Rep, g: int) -> Rep:
        return twist(M, g, self.action)


def induce(M: Rep, action: AlgebraAction, ctx: SkewContext | None = None) -> Rep:
    ctx = ctx or SkewContext(action)
    return ctx.induce(M)


def restrict(Z: Rep, ctx: SkewContext) -> Rep:
    return ctx.restrict(Z)


# ---------------------------------------------------------------------------
# stabilizing isomorphisms and the induced action on End(T)


def iso_witness(M: Rep, N: Rep):
    """An isomorphism M -> N, or None."""
    h = find_iso(M, N)
    if h is not None:
        return h
    if M.dims != N.dims:
        return None
    a, b = decompose(M), decompose(N)
    if len(a) != len(b):
        return None
    used = [False] * len(b)
    total = None
    for sa in a:
        for j, sb in enumerate(b):
            if used[j] or sa.module.dims != sb.module.dims:
                continue
            phi = find_iso(sa.module, sb.module, tries=24)
            if phi is None:
                H, K = hom_space(sa.module, sb.module), hom_space(sb.module, sa.module)
                phi = next((x for x in H if x.is_iso()), None)
                if phi is None:
                    for x, y in itertools.product(H, K):
                        if x.then(y).is_iso():
                            phi = x
                            break
            if phi is not None:
                used[j] = True
                piece = sa.projection.then(phi).then(sb.inclusion)
                total = piece if total is None else total.add(piece)
                break
        else:
            return None
    return total


@dataclass
class StabilizerData:
    module: Rep
    action: AlgebraAction
    alphas: list  # alphas[g]: module -> twist(module, g)

    def check(self) -> bool:
        G = self.action.group
        T = self.module
        if self.alphas[0].mats != identity_hom(T).mats:
            return False
        for g, h in itertools.product(range(G.order), repeat=2):
            lhs = self.alphas[G.mul(g, h)].mats
            rhs = self.alphas[g].then(twist_hom(self.alphas[h], g, self.action)).mats
            if lhs != rhs:
                return False
        return all(a.is_iso() and a.check() for a in self.alphas)


def stabilizing_isos(T: Rep, action: AlgebraAction, ctx: SkewContext | None = None) -> StabilizerData:
    G = action.group
    if G.order == 1:
        return StabilizerData(T, action, [identity_hom(T)])
    for g in range(1, G.order):
        if not is_isomorphic(T, twist(T, g, action)):
            raise NotStable(f"{T.name or 'module'} is not isomorphic to its twist by {G.names[g]}")
    ctx = ctx or SkewContext(action)
    Z = ctx.induce(T)
    pieces = decompose(Z)
    restricted = [ctx.restrict(s.module) for s in pieces]
    t_classes = iso_classes([s.module for s in decompose(T)])
    target = [n for _, n in t_classes]
    profiles = []
    for W in restricted:
        prof = [0] * len(t_classes)
        for s in decompose(W):
            for i, (X, _) in enumerate(t_classes):
                if is_isomorphic(s.module, X):
                    prof[i] += 1
                    break
            else:
                prof = None
                break
        profiles.append(prof)
    chosen = _subset_with_sum(profiles, target)
    if chosen is None:
        raise NonCoherentStabilizers("no equivariant structure on the module exists")
    from .modules import direct_sum
    Ysum = direct_sum([pieces[i].module for i in chosen], Z.alg)[0]
    Y = ctx.to_eq(Ysum)
    phi = iso_witness(T, Y.rep)
    if phi is None:
        raise NonCoherentStabilizers("restriction of the chosen lift is not isomorphic to the module")
    alphas = []
    for g in range(G.order):
        alphas.append(phi.then(Y.R[g]).then(twist_hom(phi, g, action).inverse()))
    return StabilizerData(T, action, alphas)


def _subset_with_sum(profiles, target):
    n = len(profiles)

    def rec(i, rem, chosen):
        if all(r == 0 for r in rem):
            return list(chosen)
        if i == n:
            return None
        p = profiles[i]
        if p is not None and all(a <= b for a, b in zip(p, rem)) and any(p):
            chosen.append(i)
            got = rec(i + 1, [b - a for a, b in zip(p, rem)], chosen)
            if got is not None:
                return got
            chosen.pop()
        return rec(i + 1, rem, chosen)

    return rec(0, list(target), [])


@dataclass
class EndoAction:
    """The induced G-action on End_A(T): g(h) = alpha_g^-1 o ^g h o alpha_g."""
    stab: StabilizerData
    endo: StructureAlgebra
    basis: list

    def act_hom(self, g: int, h: Hom) -> Hom:
        a = self.stab.alphas[g]
        return a.then(twist_hom(h, g, self.stab.action)).then(a.inverse())

    def act(self, g: int, x):
        f = self.endo.field
        h = _combine(self.basis, x, self.stab.module)
        img = self.act_hom(g, h)
        c = coordinates([b.flat() for b in self.basis], img.flat())
        return c

    def check(self) -> bool:
        G = self.stab.action.group
        E = self.endo
        for g in range(G.order):
            for i in range(E.dim):
                for j in range(E.dim):
                    bi, bj = E.basis_vector(i), E.basis_vector(j)
                    if self.act(g, E.multiply(bi, bj)) != E.multiply(self.act(g, bi), self.act(g, bj)):
                        return False
        for g, h in itertools.product(range(G.order), repeat=2):
            for i in range(E.dim):
                bi = E.basis_vector(i)
                if self.act(g, self.act(h, bi)) != self.act(G.mul(g, h), bi):
                    return False
        return all(self.act(0, E.basis_vector(i)) == E.basis_vector(i) for i in range(E.dim))


def _combine(basis, x, M):
    acc = None
    for c, h in zip(x, basis):
        term = h.scale(c)
        acc = term if acc is None else acc.add(term)
    if acc is None:
        from .modules import zero_hom
        acc = zero_hom(M, M)
    return acc


def endo_action(stab: StabilizerData) -> EndoAction:
    E, basis = endomorphism_algebra(stab.module)
    return EndoAction(stab, E, basis)


def endo_skew(ea: EndoAction) -> StructureAlgebra:
    """(End_A T)[G] with its radical rad(End T)[G]."""
    from .modules import endo_radical
    rad = endo_radical(ea.stab.module, ea.basis)
    S = skew_structure(ea.endo, ea.stab.action.group, ea.act, radical=rad)
    return S


# ---------------------------------------------------------------------------
# nu and mu


def _blocks(FT: EqRep, T: Rep, action):
    """Offsets of the group components of F T at each vertex."""
    G = action.group
    off = {}
    for v in T.quiver.vertices:
        k, lst = 0, []
        for g in range(G.order):
            lst.append(k)
            k += T.dims[action.vertex[g][v]]
        off[v] = lst
    return off


def nu(f: Hom, stab: StabilizerData, FT: EqRep, ea: EndoAction):
    """End_{A[G]}(F T) -> (End_A T)[G]; returns coordinates over the basis
    b_i g (index i*|G| + g) of the skew algebra."""
    T = stab.module
    action = stab.action
    G = action.group
    fld = T.field
    n = G.order
    off = _blocks(FT, T, action)

    def block(v, src, tgt):
        ds = T.dims[action.vertex[src][v]]
        dt = T.dims[action.vertex[tgt][v]]
        m = f.mats[v]
        return [row[off[v][tgt]:off[v][tgt] + dt] for row in m[off[v][src]:off[v][src] + ds]]

    fs = []
    for s in range(n):
        fs.append({v: block(v, 0, s) for v in T.quiver.vertices})
    # equivariance: block (t -> s t) at v equals f_s at t v
    for s, t in itertools.product(range(n), repeat=2):
        for v in T.quiver.vertices:
            if block(v, t, G.mul(s, t)) != fs[s][action.vertex[t][v]]:
                raise NotEquivariant("endomorphism of F T does not commute with the group action")
    out = [fld.zero] * (ea.endo.dim * n)
    flats = [b.flat() for b in ea.basis]
    for s in range(n):
        si = G.inv(s)
        a = stab.alphas[s]
        mats = {}
        for v in T.quiver.vertices:
            w = action.vertex[si][v]
            mats[v] = mul(fld, a.mats[v], fs[s][w], T.dims[v])
        h = Hom(T, T, mats)
        c = coordinates(flats, h.flat())
        if c is None:
            raise NotEquivariant("component is not an endomorphism")
        for i, x in enumerate(c):
            out[i * n + s] = x
    return out


def mu(x, stab: StabilizerData, FT: EqRep, ea: EndoAction) -> Hom:
    T = stab.module
    action = stab.action
    G = action.group
    fld = T.field
    n = G.order
    off = _blocks(FT, T, action)
    fs = []
    for s in range(n):
        coeffs = [x[i * n + s] for i in range(ea.endo.dim)]
        h = _combine(ea.basis, coeffs, T)
        a = stab.alphas[s]
        mats = {}
        for w in T.quiver.vertices:
            sw = action.vertex[s][w]
            am = a.mats[sw]
            ainv = inverse(am, fld) if am else []
            mats[w] = mul(fld, ainv, h.mats[sw], T.dims[sw]) if T.dims[w] else []
        fs.append(mats)
    M = FT.rep
    mats = {v: zeros(fld, M.dims[v], M.dims[v]) for v in T.quiver.vertices}
    for s, t in itertools.product(range(n), repeat=2):
        st = G.mul(s, t)
        for v in T.quiver.vertices:
            blk = fs[s][action.vertex[t][v]]
            for i, row in enumerate(blk):
                for j, y in enumerate(row):
                    if y:
                        mats[v][off[v][t] + i][off[v][st] + j] = y
    return Hom(M, M, mats)
