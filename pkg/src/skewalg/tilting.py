"""Tilting modules: certificates, endomorphism algebras, torsion-pair splitting
checks (by enumeration over representation-finite algebras) and APR tilts."""
from __future__ import annotations

from dataclasses import dataclass, field

from .ar import knit
from .errors import CapExceeded, InputError, NotRepFinite, OrbitNotClosed, SimpleProjectiveInjective
from .induction import SModule, smodule_to_basic
from .linalg import transpose, zeros
from .modules import (Rep, basic_part, decompose, direct_sum, endo_radical, endomorphism_algebra, ext1_dim,
                      hom_dim, hom_space, is_injective, iso_classes, projective, projective_cover,
                      projective_dimension, row_span, simple, syzygy, tau_inv)
from .structure import basic_presentation


@dataclass
class TiltingReport:
    pd: int | None  # None: pd exceeds the cap used
    ext_self: int
    summands: int
    simples: int
    resolution: dict = field(default_factory=dict)  # vertices of P1 -> P0 -> T
    splitting: "TorsionReport | None" = None
    separating: "TorsionReport | None" = None

    @property
    def pd_ok(self) -> bool:
        return self.pd is not None and self.pd <= 1

    @property
    def is_tilting(self) -> bool:
        return self.pd_ok and self.ext_self == 0 and self.summands == self.simples

    def __bool__(self):
        ok = self.is_tilting
        for extra in (self.splitting, self.separating):
            if extra is not None:
                ok = ok and extra.ok
        return ok

    def to_dict(self):
        out = {"tilting": self.is_tilting, "pd": self.pd, "pd_at_most_one": self.pd_ok,
               "ext1_self": self.ext_self, "distinct_summands": self.summands,
               "simples": self.simples, "resolution": self.resolution}
        if self.splitting is not None:
            out["splitting"] = self.splitting.to_dict()
        if self.separating is not None:
            out["separating"] = self.separating.to_dict()
        return out


@dataclass
class TorsionReport:
    ok: bool
    checked: int
    offenders: list  # dimension vectors of indecomposables on neither side

    def __bool__(self):
        return self.ok

    def to_dict(self):
        return {"ok": self.ok, "indecomposables_checked": self.checked,
                "offenders": [list(d) for d in self.offenders]}


def distinct_summands(T: Rep) -> int:
    return len(iso_classes([s.module for s in decompose(T)])) if T.total_dim else 0


def tilting_check(T: Rep, splitting: bool = False, separating: bool = False, cap: int | None = None) -> TiltingReport:
    pd = projective_dimension(T, cap=1)
    res = {}
    if T.total_dim:
        K, _, cov = syzygy(T)
        res["P0"] = list(cov.vertices)
        res["P1"] = list(projective_cover(K).vertices) if K.total_dim else []
    rep = TiltingReport(pd, ext1_dim(T, T), distinct_summands(T), len(T.quiver.vertices), res)
    if splitting:
        rep.splitting = splitting_check(T, cap)
    if separating:
        rep.separating = separating_check(T, cap)
    return rep


# ---------------------------------------------------------------------------
# endomorphism algebras


def endo_algebra(M: Rep, basic: bool = False):
    """End(M) (product f*g = f after g) with its radical; with ``basic`` also
    the basic presentation."""
    E, basis = endomorphism_algebra(M)
    E.known_radical = endo_radical(M, basis)
    if basic:
        return E, basic_presentation(E)
    return E


def _total_matrix(h, M: Rep):
    f = M.field
    n = M.total_dim
    m = zeros(f, n, n)
    off = 0
    for v in M.quiver.vertices:
        for i, row in enumerate(h.mats[v]):
            for j, x in enumerate(row):
                m[off + i][off + j] = x
        off += M.dims[v]
    return m


def dual_over_endo(T: Rep, E=None, bp=None) -> Rep:
    """D T as a right module over the basic presentation of End(T)."""
    if E is None:
        E, bp = endo_algebra(T, basic=True)
    n = T.total_dim
    rho = [transpose(_total_matrix(h, T), n) for h in E.homs]
    return smodule_to_basic(SModule(E, n, rho), bp)


def _indecomposables(alg, cap):
    try:
        return knit(alg, cap).modules
    except CapExceeded as e:
        raise NotRepFinite(str(e)) from None


def splitting_check(T: Rep, cap: int | None = None) -> TorsionReport:
    """Every indecomposable B-module (B = End T) is either killed by - (x) T
    or has Tor_1(-, T) = 0; tested through D T as Hom/Ext^1 into D T."""
    T0 = basic_part(T)
    E, bp = endo_algebra(T0, basic=True)
    DT = dual_over_endo(T0, E, bp)
    offenders = []
    mods = _indecomposables(bp.algebra, cap)
    for Y in mods:
        if hom_dim(Y, DT) and ext1_dim(Y, DT):
            offenders.append(Y.dim_vector())
    return TorsionReport(not offenders, len(mods), offenders)


def in_gen(T: Rep, M: Rep) -> bool:
    """Is the trace of T in M all of M?"""
    homs = hom_space(T, M)
    for v in M.quiver.vertices:
        rows = [r for h in homs for r in h.mats[v]]
        if len(row_span(rows)) != M.dims[v]:
            return False
    return True


def separating_check(T: Rep, cap: int | None = None) -> TorsionReport:
    """Every indecomposable A-module lies in Gen(T) or has Hom(T, -) = 0."""
    offenders = []
    mods = _indecomposables(T.alg, cap)
    for M in mods:
        if hom_dim(T, M) and not in_gen(T, M):
            offenders.append(M.dim_vector())
    return TorsionReport(not offenders, len(mods), offenders)


def perpendicular_indecs(M: Rep, universe):
    return [N for N in universe if hom_dim(M, N) == 0 and ext1_dim(M, N) == 0]


# ---------------------------------------------------------------------------
# APR tilts


def apr_tilt(alg, vertices, action=None) -> Rep:
    """tau^-(sum of the simple projectives at ``vertices``) plus the other
    indecomposable projectives."""
    vertices = list(vertices)
    for v in vertices:
        if v not in alg.quiver.vindex:
            raise InputError(f"unknown vertex {v}")
        P = projective(alg, v)
        if P.total_dim != 1:
            raise InputError(f"P_{v} is not simple")
        if is_injective(P):
            raise SimpleProjectiveInjective(f"S_{v} is simple projective and injective")
    if action is not None:
        for g in range(action.group.order):
            for v in vertices:
                if action.vertex[g][v] not in vertices:
                    raise OrbitNotClosed(f"{action.group.names[g]} sends {v} outside the orbit")
    parts = [tau_inv(simple(alg, v)) for v in vertices]
    parts += [projective(alg, w) for w in alg.quiver.vertices if w not in vertices]
    T, _, _ = direct_sum(parts, alg)
    T.name = "APR(" + ",".join(vertices) + ")"
    return T
