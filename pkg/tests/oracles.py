"""Reference computations that share no linear algebra with the package."""
import itertools

import sympy


def _sym(M, a):
    return sympy.Matrix(M.dims[M.quiver.arrow[a].source], M.dims[M.quiver.arrow[a].target],
                        lambda i, j: sympy.Rational(str(M.maps[a][i][j])) if M.maps[a] else 0)


def hom_dim(M, N):
    """Solve M_a X_t = X_s N_a for block-diagonal X with sympy (over Q)."""
    q = M.quiver
    xs = {}
    unknowns = []
    for v in q.vertices:
        X = sympy.Matrix(M.dims[v], N.dims[v], lambda i, j: sympy.Symbol(f"x_{v}_{i}_{j}"))
        xs[v] = X
        unknowns.extend(X)
    if not unknowns:
        return 0
    eqs = []
    for a in q.arrows:
        s, t = a.source, a.target
        if M.dims[s] == 0 or N.dims[t] == 0:
            continue
        lhs = _sym(M, a.name) * xs[t]
        rhs = xs[s] * _sym(N, a.name)
        eqs.extend(lhs - rhs)
    if not eqs:
        return len(unknowns)
    A, _ = sympy.linear_eq_to_matrix(eqs, unknowns)
    return len(unknowns) - A.rank()


def euler_form(alg, x, y):
    """<x, y> for a path algebra: dim Hom - dim Ext^1 on dimension vectors."""
    idx = alg.quiver.vindex
    val = sum(a * b for a, b in zip(x, y))
    for arr in alg.quiver.arrows:
        val -= x[idx[arr.source]] * y[idx[arr.target]]
    return val


def positive_roots(alg, bound=4):
    """Positive vectors with Tits form 1; for Dynkin quivers these are the
    dimension vectors of the indecomposables."""
    n = len(alg.quiver.vertices)
    out = []
    for x in itertools.product(range(bound), repeat=n):
        if any(x) and euler_form(alg, x, x) == 1:
            out.append(x)
    return out
