"""Auslander-Reiten quivers by knitting with actual modules.

Projectives enter once every summand of their radical is known; each
processed module X gets tau^-X computed as a module and its mesh is checked
against the additivity of dimension vectors.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .config import BUDGETS
from .errors import CapExceeded, KnittingStuck
from .modules import Rep, _indec_iso, decompose, is_injective, projective, radical, tau_inv



@dataclass
class ARQuiver:
    alg: object
    modules: list = field(default_factory=list)
    arrows: dict = field(default_factory=dict)  # (i, j) -> multiplicity
    tau: dict = field(default_factory=dict)  # i -> index of tau(module i)
    projectives: dict = field(default_factory=dict)  # vertex -> index
    injective: set = field(default_factory=set)

    def __len__(self):
        return len(self.modules)

    def dim_vector(self, i):
        return self.modules[i].dim_vector()

    def label(self, i) -> str:
        return "".join(str(d) for d in self.dim_vector(i)) if max(self.dim_vector(i)) < 10 else \
            ",".join(str(d) for d in self.dim_vector(i))

    def predecessors(self, j):
        return {i: m for (i, k), m in self.arrows.items() if k == j}

    def successors(self, i):
        return {k: m for (j, k), m in self.arrows.items() if j == i}

    def tau_inverse(self):
        return {v: k for k, v in self.tau.items()}

    def find(self, M: Rep):
        for i, X in enumerate(self.modules):
            if X.dims == M.dims and _indec_iso(X, M):
                return i
        return None


def knit(alg, cap: int | None = None, dim_cap: int | None = None) -> ARQuiver:
    cap = cap or BUDGETS.knit_cap
    # indecomposables of representation-finite algebras stay small; growth
    # past this bound is taken as a sign of infinite type
    dim_cap = dim_cap or BUDGETS.knit_dim_cap
    ar = ARQuiver(alg)
    pending = []  # [vertex, P, [(summand module, node index or None)]]
    for v in alg.quiver.vertices:
        P = projective(alg, v)
        rad, _ = radical(P)
        parts = [s.module for s in decompose(rad)] if rad.total_dim else []
        pending.append([v, P, [[X, None] for X in parts]])
    processed = set()

    def add(M, preds):
        if len(ar.modules) >= cap:
            raise CapExceeded(f"more than {cap} indecomposables; algebra may be representation-infinite")
        if M.total_dim > dim_cap:
            raise CapExceeded(f"an indecomposable of dimension {M.total_dim} > {dim_cap}; "
                              "algebra may be representation-infinite")
        ar.modules.append(M)
        j = len(ar.modules) - 1
        for i, m in preds.items():
            ar.arrows[(i, j)] = ar.arrows.get((i, j), 0) + m
        for entry in pending:
            for item in entry[2]:
                if item[1] is None and item[0].dims == M.dims and _indec_iso(item[0], M):
                    item[1] = j
        return j

    while True:
        progress = False
        for entry in list(pending):
            v, P, items = entry
            if all(i is not None for _, i in items):
                preds = {}
                for _, i in items:
                    preds[i] = preds.get(i, 0) + 1
                pending.remove(entry)
                ar.projectives[v] = add(P, preds)
                progress = True
        waiting_on = {i for _, _, items in pending for _, i in items if i is not None}
        for x in range(len(ar.modules)):
            if x in processed or x in waiting_on:
                continue
            if any(i not in processed for i in ar.predecessors(x)):
                continue
            X = ar.modules[x]
            processed.add(x)
            progress = True
            if is_injective(X):
                ar.injective.add(x)
                continue
            Y = tau_inv(X)
            # all successors of X are known: projectives with X in their radical,
            # and tau^-W for each arrow W -> X
            preds = ar.successors(x)
            lhs = [a + b for a, b in zip(X.dim_vector(), Y.dim_vector())]
            rhs = [0] * len(lhs)
            for i, m in preds.items():
                for k, d in enumerate(ar.modules[i].dim_vector()):
                    rhs[k] += m * d
            if lhs != rhs:
                raise KnittingStuck(f"mesh ending at tau^-({ar.label(x)}) is not additive")
            y = add(Y, {})
            for i, m in preds.items():
                ar.arrows[(i, y)] = m
            ar.tau[y] = x
            break
        if not progress:
            break
    if pending or len(processed) != len(ar.modules):
        raise KnittingStuck("knitting cannot proceed; the algebra may not be directed enough")
    return ar


def indecomposables(alg, cap: int | None = None):
    return knit(alg, cap).modules
