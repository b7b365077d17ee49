"""Translation quivers Z(Delta), group actions on them, sections, and the
mesh category.

Vertices are pairs ``(d, n)``.  An arrow ``a: d -> e`` of Delta gives arrows
``(a, n): (d, n) -> (e, n)`` and ``(a*, n): (e, n) -> (d, n + 1)``; the
translation is ``tau(d, n) = (d, n - 1)``.  The window only bounds what is
listed and labelled: adjacency, reachability and the mesh category are
computed on the whole of Z(Delta).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .config import BUDGETS
from .errors import (InputError, MalformedQuiver, NotTauEquivariant, SectionEndoNotHereditary,
                     SliceImagesInconsistent, WindowExhausted)
from .groups import AlgebraAction, FiniteGroup, cyclic_group
from .linalg import FieldSpec, QQ, rref
from .quiver import BoundQuiverAlgebra, Diagnostic, Quiver


def vertex_key(x) -> str:
    return f"{x[0]}@{x[1]}"


def parse_vertex_key(s: str):
    d, _, n = s.rpartition("@")
    if not d:
        raise InputError(f"bad vertex key {s!r}; expected 'vertex@level'")
    return d, int(n)


@dataclass(frozen=True)
class ZArrow:
    name: str
    source: tuple
    target: tuple


@dataclass
class TranslationQuiver:
    delta: Quiver
    window: tuple  # inclusive (lo, hi)
    labels: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.delta.is_acyclic() or not self.delta.is_connected():
            raise MalformedQuiver("Delta must be finite, acyclic and connected")
        lo, hi = self.window
        if lo > hi:
            raise InputError("empty window")

    @property
    def vertices(self):
        lo, hi = self.window
        return [(d, n) for n in range(lo, hi + 1) for d in self.delta.vertices]

    def in_window(self, x) -> bool:
        return self.window[0] <= x[1] <= self.window[1]

    def arrows(self):
        return [a for x in self.vertices for a in self.out_arrows(x) if self.in_window(a.target)]

    def out_arrows(self, x):
        d, n = x
        out = [ZArrow(f"{a.name}@{n}", x, (a.target, n)) for a in self.delta.out_arrows[d]]
        out += [ZArrow(f"{a.name}*@{n}", x, (a.source, n + 1)) for a in self.delta.in_arrows[d]]
        return out

    def in_arrows(self, x):
        d, n = x
        inc = [ZArrow(f"{a.name}@{n}", (a.source, n), x) for a in self.delta.in_arrows[d]]
        inc += [ZArrow(f"{a.name}*@{n - 1}", (a.target, n - 1), x) for a in self.delta.out_arrows[d]]
        return inc

    def successors(self, x):
        return sorted({a.target for a in self.out_arrows(x)}, key=self.order_key)

    def predecessors(self, x):
        return sorted({a.source for a in self.in_arrows(x)}, key=self.order_key)

    def arrow_count(self, x, y) -> int:
        return sum(1 for a in self.out_arrows(x) if a.target == y)

    @staticmethod
    def tau(x):
        return (x[0], x[1] - 1)

    @staticmethod
    def tau_inv(x):
        return (x[0], x[1] + 1)

    def mesh_partner(self, arrow: ZArrow) -> ZArrow:
        """For beta: y -> z, the arrow tau z -> y."""
        name, _, lvl = arrow.name.rpartition("@")
        n = int(lvl)
        if name.endswith("*"):
            return ZArrow(f"{name[:-1]}@{n}", self.tau(arrow.target), arrow.source)
        return ZArrow(f"{name}*@{n - 1}", self.tau(arrow.target), arrow.source)

    def order_key(self, x):
        return (x[1], self.delta.vindex[x[0]])

    def topo_key(self, x):
        # levels increase along starred arrows; within a level follow Delta
        if not hasattr(self, "_topo_map"):
            self._topo_map = self._topo()
        return (x[1], self._topo_map[x[0]])

    def _topo(self):
        order, seen = [], set()
        q = self.delta

        def visit(v):
            if v in seen:
                return
            seen.add(v)
            for a in q.in_arrows[v]:
                visit(a.source)
            order.append(v)

        for v in q.vertices:
            visit(v)
        return {v: i for i, v in enumerate(order)}

    def name(self, x) -> str:
        return self.labels.get(x, vertex_key(x))

    def widen(self, lo: int, hi: int) -> "TranslationQuiver":
        return TranslationQuiver(self.delta, (min(lo, self.window[0]), max(hi, self.window[1])), dict(self.labels))

    def orbits(self):
        return list(self.delta.vertices)


def z_delta(delta: Quiver, window=(0, 1), labels=None) -> TranslationQuiver:
    return TranslationQuiver(delta, tuple(window), dict(labels or {}))


def is_sectional(tq: TranslationQuiver, path) -> bool:
    """``path`` is a vertex sequence x0 -> x1 -> ... -> xm."""
    path = list(path)
    for x, y in zip(path, path[1:]):
        if not tq.arrow_count(x, y):
            return False
    return all(tq.tau(path[i + 1]) != path[i - 1] for i in range(1, len(path) - 1))


# ---------------------------------------------------------------------------
# group actions


@dataclass
class ComponentAction:
    """Each group element acts by d |-> (image, shift) on one slice, extended
    to (d, n) |-> (image, n + shift)."""
    tq: TranslationQuiver
    group: FiniteGroup
    slice_maps: list  # per element: {d: (d', shift)}

    def apply(self, g: int, x):
        d2, k = self.slice_maps[g][x[0]]
        return (d2, x[1] + k)

    def orbit(self, x):
        seen = []
        for g in range(self.group.order):
            y = self.apply(g, x)
            if y not in seen:
                seen.append(y)
        return seen

    def check(self):
        """Diagnostics: bijectivity, arrow preservation, group law."""
        out = []
        q = self.tq.delta
        for g in range(self.group.order):
            m = self.slice_maps[g]
            if sorted(d for d, _ in m.values()) != sorted(q.vertices):
                out.append(Diagnostic("SliceImagesInconsistent", f"{self.group.names[g]} is not a bijection on orbits"))
                continue
            for x in [(d, 0) for d in q.vertices]:
                for y in set(self.tq.successors(x)):
                    if self.tq.arrow_count(x, y) != self.tq.arrow_count(self.apply(g, x), self.apply(g, y)):
                        out.append(Diagnostic("SliceImagesInconsistent",
                                              f"{self.group.names[g]} does not preserve arrows {vertex_key(x)} -> {vertex_key(y)}"))
        for g in range(self.group.order):
            for h in range(self.group.order):
                gh = self.group.mul(g, h)
                for d in q.vertices:
                    x = (d, 0)
                    if self.apply(g, self.apply(h, x)) != self.apply(gh, x):
                        out.append(Diagnostic("SliceImagesInconsistent",
                                              f"images violate the group law at {self.group.names[g]}*{self.group.names[h]}"))
                        break
        return out


def transfer_action(tq: TranslationQuiver, group: FiniteGroup, images: dict) -> ComponentAction:
    """``images[g]`` maps window vertices to window vertices.  If only one slice
    is given it is extended tau-equivariantly; extra vertices are checked
    against that extension."""
    q = tq.delta
    maps = []
    for g in range(group.order):
        img = images.get(g)
        if img is None:
            if g == 0:
                maps.append({d: (d, 0) for d in q.vertices})
                continue
            raise SliceImagesInconsistent(f"no images for {group.names[g]}")
        slice_map = {}
        for x, y in img.items():
            k = y[1] - x[1]
            if x[0] in slice_map:
                if slice_map[x[0]] != (y[0], k):
                    raise NotTauEquivariant(f"{group.names[g]} does not commute with tau at {vertex_key(x)}")
            else:
                slice_map[x[0]] = (y[0], k)
        missing = [d for d in q.vertices if d not in slice_map]
        if missing:
            raise SliceImagesInconsistent(f"{group.names[g]}: no image for the orbit of {missing[0]}")
        maps.append(slice_map)
    act = ComponentAction(tq, group, maps)
    diags = act.check()
    if diags:
        raise SliceImagesInconsistent(diags[0].message)
    return act


def trivial_action(tq: TranslationQuiver, group: FiniteGroup | None = None) -> ComponentAction:
    group = group or cyclic_group(1)
    return ComponentAction(tq, group, [{d: (d, 0) for d in tq.delta.vertices}] * group.order)


def hereditary_component(action: AlgebraAction, window=(0, 3)):
    """Preprojective component of a hereditary algebra as Z(Q^op) with P_v at
    (v, 0), and the group action read off from twisting projectives."""
    from .groups import twist
    from .modules import find_iso, projective
    alg = action.alg
    if alg.relations:
        raise InputError("the algebra must be a path algebra")
    tq = z_delta(alg.quiver.opposite(), window)
    projs = {v: projective(alg, v) for v in alg.quiver.vertices}
    images = {}
    for g in range(action.group.order):
        img = {}
        for v in alg.quiver.vertices:
            tw = twist(projs[v], g, action)
            hit = [w for w in alg.quiver.vertices if tw.dims == projs[w].dims and find_iso(tw, projs[w]) is not None]
            if len(hit) != 1:
                raise SliceImagesInconsistent(f"twist of P_{v} matches no unique projective")
            img[(v, 0)] = (hit[0], 0)
        images[g] = img
    return tq, transfer_action(tq, action.group, images)


# ---------------------------------------------------------------------------
# sections


@dataclass
class Section:
    tq: TranslationQuiver
    vertices: list  # sorted by order_key

    def arrows(self):
        vs = set(self.vertices)
        return [a for x in self.vertices for a in self.tq.out_arrows(x) if a.target in vs]

    def names(self):
        return [self.tq.name(x) for x in self.vertices]


def _reach(tq, starts, hi):
    seen = set(starts)
    stack = list(starts)
    while stack:
        x = stack.pop()
        for y in tq.successors(x):
            if y[1] <= hi and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def _sigma_in_window(tq, seeds, hi):
    R = _reach(tq, seeds, hi)
    NS = _reach(tq, [tq.tau_inv(y) for y in R if tq.tau_inv(y)[1] <= hi], hi)
    return sorted((x for x in R - NS if x[1] < hi), key=tq.order_key)


def sigma_section(tq: TranslationQuiver, action: ComponentAction, seed, max_expansions: int | None = None) -> Section:
    """Vertices reachable from some g(seed) such that every such path is
    sectional."""
    budget = BUDGETS.window_expansions if max_expansions is None else max_expansions
    seeds = action.orbit(seed)
    lo = min(x[1] for x in seeds)
    width = max(tq.window[1] - lo, max(x[1] for x in seeds) - lo + 1, 1)
    for _ in range(budget + 1):
        hi = lo + width
        sigma = _sigma_in_window(tq, seeds, hi)
        if sorted(d for d, _ in sigma) == sorted(tq.delta.vertices):
            wlo = min(tq.window[0], min(x[1] for x in sigma))
            whi = max(tq.window[1], max(x[1] for x in sigma))
            return Section(tq.widen(wlo, whi), sigma)
        width *= 2
    raise WindowExhausted(f"section through {vertex_key(seed)} did not close after {budget} expansions")


def verify_section(tq: TranslationQuiver, s: Section, action: ComponentAction | None = None):
    """Diagnostics for: acyclic, one vertex per tau-orbit, convex, connected,
    G-stable.  An empty list means all pass."""
    out = []
    vs = set(s.vertices)
    if not vs:
        return [Diagnostic("empty", "section has no vertices")]
    # ZDelta is acyclic, so the induced subquiver is too; check anyway
    sub = Quiver([vertex_key(x) for x in s.vertices],
                 [(a.name, vertex_key(a.source), vertex_key(a.target)) for a in s.arrows()])
    if not sub.is_acyclic():
        out.append(Diagnostic("acyclic", "section has an oriented cycle"))
    counts = {}
    for d, _ in s.vertices:
        counts[d] = counts.get(d, 0) + 1
    bad = [d for d in tq.delta.vertices if counts.get(d, 0) != 1]
    if bad:
        out.append(Diagnostic("orbits", f"tau-orbits met other than once: {', '.join(bad)}"))
    hi = max(x[1] for x in vs)
    forward = _reach(tq, list(vs), hi)
    backward = _reach_back(tq, list(vs), min(x[1] for x in vs))
    between = (forward & backward) - vs
    if between:
        x = min(between, key=tq.order_key)
        out.append(Diagnostic("convex", f"path through {vertex_key(x)} leaves the section"))
    if not sub.is_connected():
        out.append(Diagnostic("connected", "section is not connected"))
    if action is not None:
        for g in range(action.group.order):
            if {action.apply(g, x) for x in vs} != vs:
                out.append(Diagnostic("G-stable", f"not stable under {action.group.names[g]}"))
                break
    return out


def _reach_back(tq, starts, lo):
    seen = set(starts)
    stack = list(starts)
    while stack:
        x = stack.pop()
        for y in tq.predecessors(x):
            if y[1] >= lo and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def standard_slice(tq: TranslationQuiver, seed) -> Section:
    return sigma_section(tq, trivial_action(tq), seed)


# ---------------------------------------------------------------------------
# mesh category


@dataclass
class MeshHom:
    dim: int
    paths: list  # representative vertex paths, one per basis element


def mesh_hom_table(tq: TranslationQuiver, X, top: int, field: FieldSpec = QQ):
    """Hom(X, z) in the mesh category for every z reachable from X up to
    level ``top``: {z: (dim, {arrow name: matrix}, representative paths)}.

    Hom(X, z) is the cokernel of Hom(X, tau z) -> sum over beta: y -> z of
    Hom(X, y), f |-> (sigma(beta) f)_beta."""
    zone = sorted(_reach(tq, [X], top), key=tq.topo_key)
    data = {}
    for z in zone:
        if z == X:
            data[z] = (1, {}, [[X]])
            continue
        incoming = [b for b in tq.in_arrows(z) if b.source in data]
        comps, offs, s = [], {}, 0
        for b in incoming:
            offs[b.name] = s
            s += data[b.source][0]
            comps.append(b)
        rows = []
        tz = tq.tau(z)
        if tz in data and data[tz][0]:
            for i in range(data[tz][0]):
                row = [field.zero] * s
                for b in comps:
                    sb = tq.mesh_partner(b)
                    if sb.target not in data:
                        continue
                    m = data[sb.target][1].get(sb.name)
                    if m is None:
                        continue
                    for j, c in enumerate(m[i]):
                        row[offs[b.name] + j] += c
                if any(row):
                    rows.append(row)
        R, rank, piv = rref(rows, field) if rows else ([], 0, [])
        free = [j for j in range(s) if j not in set(piv)]
        # reduce each unit vector modulo the relations, keep free coordinates
        Q = []
        for j in range(s):
            v = [field.one if k == j else field.zero for k in range(s)]
            for r, p in zip(R[:rank], piv):
                if v[p]:
                    c = v[p]
                    v = [a - c * b for a, b in zip(v, r)]
            Q.append([v[k] for k in free])
        maps = {b.name: Q[offs[b.name]:offs[b.name] + data[b.source][0]] for b in comps}
        reps = []
        for k in free:
            b = next(bb for bb in comps if offs[bb.name] <= k < offs[bb.name] + data[bb.source][0])
            reps.append(data[b.source][2][k - offs[b.name]] + [z])
        data[z] = (len(free), maps, reps)
    return data


def mesh_hom(tq: TranslationQuiver, X, Y, field: FieldSpec = QQ) -> MeshHom:
    if Y[1] < X[1]:
        return MeshHom(0, [])
    data = mesh_hom_table(tq, X, Y[1], field)
    if Y not in data:
        return MeshHom(0, [])
    d, _, reps = data[Y]
    return MeshHom(d, reps)


def _section_path_counts(s: Section):
    vs = sorted(s.vertices, key=s.tq.topo_key)
    arrows = s.arrows()
    out = {}
    for x in vs:
        cnt = {x: 1}
        for y in vs:
            if y == x:
                continue
            cnt[y] = sum(cnt.get(a.source, 0) for a in arrows if a.target == y)
        out[x] = cnt
    return out


def section_endo(tq: TranslationQuiver, s: Section, field: FieldSpec = QQ) -> BoundQuiverAlgebra:
    """End of the sum of the section's objects: the path algebra of the
    opposite of the section quiver (an arrow x -> y gives y -> x)."""
    counts = _section_path_counts(s)
    for x in s.vertices:
        for y in s.vertices:
            h = mesh_hom(tq, x, y, field).dim
            if h != counts[x].get(y, 0):
                raise SectionEndoNotHereditary(
                    f"Hom({tq.name(x)}, {tq.name(y)}) has dimension {h}, not the path count {counts[x].get(y, 0)}")
    q = Quiver([vertex_key(x) for x in s.vertices],
               [(a.name, vertex_key(a.target), vertex_key(a.source)) for a in s.arrows()])
    return BoundQuiverAlgebra(q, [], field)


def section_action(s: Section, action: ComponentAction, alg: BoundQuiverAlgebra) -> AlgebraAction:
    """e_x |-> e_{gx}; arrows go to the arrows between the image vertices
    (parallel arrows matched in order), all scalars 1."""
    q = alg.quiver
    vmaps, amaps = [], []
    for g in range(action.group.order):
        vm = {vertex_key(x): vertex_key(action.apply(g, x)) for x in s.vertices}
        if set(vm.values()) != set(vm):
            raise InputError("section is not stable under the action")
        am = {}
        for (src, tgt) in {(a.source, a.target) for a in q.arrows}:
            mine = [a.name for a in q.arrows if a.source == src and a.target == tgt]
            theirs = [a.name for a in q.arrows if a.source == vm[src] and a.target == vm[tgt]]
            for a, b in zip(mine, theirs):
                am[a] = (b, alg.field.one)
        vmaps.append(vm)
        amaps.append(am)
    return AlgebraAction(alg, action.group, vmaps, amaps)
