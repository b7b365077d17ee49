"""Exact scalars over Q and GF(p), and dense linear algebra on lists of rows.

Matrices are plain ``list[list[scalar]]`` in row-major order; columns/vectors
are plain lists.  Every routine is deterministic: pivots are chosen as the
first nonzero entry scanning rows top-to-bottom within a column, columns
left-to-right.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

__all__ = [
    "FieldSpec", "QQ", "GF", "Zmod",
    "rref", "solve", "kernel_basis", "rank", "matmul", "matvec", "identity",
    "zeros", "inverse", "transpose", "is_zero_matrix", "column_space_basis",
    "block_diag", "hstack", "vstack", "in_span", "coordinates", "det_nonzero",
]


@total_ordering
class Zmod:
    """Residue class modulo a prime; mixes freely with Python ints."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Zmod):
            return other.v
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p) % self.p
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Zmod(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Zmod(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Zmod(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Zmod(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return Zmod(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.v == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return Zmod(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return Zmod(-self.v, self.p)

    def __pow__(self, n: int):
        if n < 0:
            return Zmod(pow(self.v, -1, self.p), self.p) ** (-n)
        return Zmod(pow(self.v, n, self.p), self.p)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return self.v == o

    def __lt__(self, other):
        return self.v < self._coerce(other)

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"{self.v} mod {self.p}"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


_SCALAR_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*(?:mod\s+(\d+))?\s*$")


@dataclass(frozen=True)
class FieldSpec:
    kind: str  # "Q" or "GF"
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("Q", "GF"):
            raise ValueError(f"unknown field kind {self.kind!r}")
        if self.kind == "GF" and not _is_prime(self.p):
            raise ValueError(f"GF(p) needs a prime modulus, got {self.p}")

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "GF" else 0

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, x):
        if self.kind == "Q":
            if isinstance(x, Zmod):
                raise TypeError("cannot coerce a GF(p) element into Q")
            return Fraction(x)
        if isinstance(x, Zmod):
            if x.p != self.p:
                raise TypeError(f"GF({x.p}) element in GF({self.p})")
            return x
        if isinstance(x, Fraction):
            return Zmod(x.numerator, self.p) / x.denominator
        return Zmod(int(x), self.p)

    def parse(self, text) -> object:
        if isinstance(text, int):
            return self(text)
        m = _SCALAR_RE.match(str(text))
        if not m:
            raise ValueError(f"cannot parse scalar {text!r}")
        num, den, mod = m.groups()
        if mod is not None:
            if self.kind != "GF" or int(mod) != self.p:
                raise ValueError(f"scalar {text!r} does not belong to {self}")
        value = Fraction(int(num), int(den) if den else 1)
        return self(value)

    def format(self, x) -> str:
        x = self(x)
        if self.kind == "GF":
            return f"{x.v} mod {self.p}"
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    def elements(self):
        """All elements; only for finite fields."""
        if self.kind != "GF":
            raise ValueError("Q is infinite")
        return [Zmod(i, self.p) for i in range(self.p)]

    def has_roots_of_unity(self, n: int) -> bool:
        if n <= 2:
            return True
        if self.kind == "Q":
            return False
        return (self.p - 1) % n == 0

    def smallest_prime_with_roots(self, n: int) -> int:
        q = 2
        while True:
            if _is_prime(q) and (q - 1) % n == 0 and q % n != 0:
                return q
            q += 1

    def __str__(self):
        return "Q" if self.kind == "Q" else f"GF({self.p})"

    @classmethod
    def from_string(cls, text: str) -> "FieldSpec":
        text = text.strip()
        if text in ("Q", "QQ"):
            return cls("Q")
        m = re.match(r"^GF\((\d+)\)$", text)
        if m:
            return cls("GF", int(m.group(1)))
        raise ValueError(f"unknown field {text!r}")


QQ = FieldSpec("Q")


def GF(p: int) -> FieldSpec:
    return FieldSpec("GF", p)


# --------------------------------------------------------------------------
# dense matrices


def zeros(field: FieldSpec, r: int, c: int):
    z = field.zero
    return [[z] * c for _ in range(r)]


def identity(field: FieldSpec, n: int):
    m = zeros(field, n, n)
    for i in range(n):
        m[i][i] = field.one
    return m


def transpose(m, cols: int | None = None):
    if not m:
        return [[] for _ in range(cols or 0)]
    return [list(r) for r in zip(*m)]


def matmul(a, b, field: FieldSpec | None = None, cols: int | None = None):
    """Product of an (r x k) and (k x c) matrix.  When k == 0 the column
    count cannot be read off ``b``; pass ``field`` and ``cols`` then."""
    if not a:
        return []
    k = len(a[0])
    if k == 0:
        if field is None or cols is None:
            raise ValueError("need field and cols to multiply through a zero dimension")
        return zeros(field, len(a), cols)
    cols = len(b[0])
    zero = b[0][0] * 0 if cols else None
    out = []
    bt = list(zip(*b)) if cols else []
    for row in a:
        nz = [(j, x) for j, x in enumerate(row) if x]
        out_row = []
        for col in bt:
            s = zero
            for j, x in nz:
                y = col[j]
                if y:
                    s = s + x * y
            out_row.append(s)
        out.append(out_row)
    return out


def matvec(a, v):
    out = []
    for row in a:
        s = 0
        for x, y in zip(row, v):
            if x and y:
                s = x * y + s
        out.append(s)
    return out


def is_zero_matrix(m) -> bool:
    return all(not x for row in m for x in row)


def rref(m, field: FieldSpec | None = None):
    """Reduced row echelon form; returns ``(R, rank, pivot_columns)``.

    The input is not modified; zero rows are kept at the bottom."""
    a = [list(r) for r in m]
    if not a:
        return a, 0, []
    nrows, ncols = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        prow = a[r]
        inv = 1 / prow[c]
        if inv != 1:
            prow = [x * inv if x else x for x in prow]
            a[r] = prow
        nzc = [j for j in range(c, ncols) if prow[j]]
        for i in range(nrows):
            if i != r:
                f = a[i][c]
                if f:
                    row = a[i]
                    for j in nzc:
                        row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
    return a, r, pivots


def rank(m) -> int:
    return rref(m)[1]


def kernel_basis(m, ncols: int | None = None, field: FieldSpec | None = None):
    """Canonical null-space basis read off the rref (one vector per free
    column, with a 1 in that column)."""
    if not m:
        if ncols is None or field is None:
            raise ValueError("need ncols and field for an empty matrix")
        return [[field.one if i == j else field.zero for i in range(ncols)] for j in range(ncols)]
    n = len(m[0])
    r, rk, piv = rref(m)
    one = field.one if field is not None else _one_like(m)
    zero = one * 0
    pivset = set(piv)
    basis = []
    for f in range(n):
        if f in pivset:
            continue
        v = [zero] * n
        v[f] = one
        for i, pc in enumerate(piv):
            x = r[i][f]
            if x:
                v[pc] = -x
        basis.append(v)
    return basis


def _one_like(m):
    for row in m:
        for x in row:
            return x ** 0 if not isinstance(x, int) else Fraction(1)
    return Fraction(1)


def solve(a, b, field: FieldSpec | None = None):
    """Some ``x`` with ``a x = b`` (free variables set to zero), or ``None``."""
    if not a:
        return None
    n = len(a[0])
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    r, rk, piv = rref(aug)
    if piv and piv[-1] == n:
        return None
    zero = (field.zero if field is not None else _one_like(a) * 0)
    x = [zero] * n
    for i, pc in enumerate(piv):
        x[pc] = r[i][n]
    return x


def inverse(m, field: FieldSpec | None = None):
    n = len(m)
    one = field.one if field is not None else _one_like(m)
    zero = one * 0
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(m)]
    r, rk, piv = rref(aug)
    if piv[:n] != list(range(n)) or rk < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in r[:n]]


def det_nonzero(m) -> bool:
    if not m:
        return True
    return rref(m)[1] == len(m) == len(m[0])


def column_space_basis(m):
    """Basis (as columns) of the column space, chosen among the columns."""
    if not m or not m[0]:
        return []
    _, _, piv = rref(m)
    return [[row[c] for row in m] for c in piv]


def in_span(vectors, v) -> bool:
    return coordinates(vectors, v) is not None


def coordinates(vectors, v):
    """Coefficients expressing ``v`` in terms of ``vectors`` (first solution)."""
    if not vectors:
        return [] if all(not x for x in v) else None
    a = [[vec[i] for vec in vectors] for i in range(len(v))]
    if not a:
        return [v[0] * 0 for _ in vectors] if v else []
    return solve(a, list(v))


def block_diag(field: FieldSpec, blocks):
    rows = sum(len(b) for b in blocks)
    cols = sum((len(b[0]) if b else 0) for b in blocks)
    out = zeros(field, rows, cols)
    r0 = c0 = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[r0 + i][c0 + j] = x
        r0 += len(b)
        c0 += len(b[0]) if b else 0
    return out


def hstack(*ms):
    return [sum((list(m[i]) for m in ms), []) for i in range(len(ms[0]))]


def vstack(*ms):
    out = []
    for m in ms:
        out.extend(list(r) for r in m)
    return out
