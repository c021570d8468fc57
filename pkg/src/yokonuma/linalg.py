"""Exact dense linear algebra over a field of :class:`Scalar` or :class:`CycloNumber`.

Matrices are lists of rows.  Vectors are rows; modules act on the right.
Pivots are chosen by a size heuristic (``_cost``) to limit coefficient growth.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .scalars import CycloField, CycloNumber, Scalar

Matrix = list[list]


@dataclass(frozen=True)
class Domain:
    """Zero, one and coercion for one coefficient field."""

    zero: object
    one: object
    coerce: Callable
    field: CycloField
    generic: bool

    def __call__(self, x):
        return self.coerce(x)


_domains: dict = {}


def scalar_domain(F: CycloField) -> Domain:
    key = ("s", F.order)
    if key not in _domains:
        _domains[key] = Domain(F.zero, F.one, F.scalar, F, True)
    return _domains[key]


def cyclo_domain(F: CycloField) -> Domain:
    key = ("c", F.order)
    if key not in _domains:
        _domains[key] = Domain(F.number(0), F.number(1), F.number, F, False)
    return _domains[key]


def domain_of(x) -> Domain:
    if isinstance(x, Scalar):
        return scalar_domain(x.field)
    if isinstance(x, CycloNumber):
        return cyclo_domain(x.field)
    raise TypeError(type(x).__name__)


# -- basic operations -----------------------------------------------------
def zeros(dom: Domain, m: int, n: int) -> Matrix:
    return [[dom.zero] * n for _ in range(m)]


def identity(dom: Domain, n: int) -> Matrix:
    out = zeros(dom, n, n)
    for i in range(n):
        out[i][i] = dom.one
    return out


def transpose(A: Matrix, ncols: int | None = None) -> Matrix:
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*A)]


def matmul(A: Matrix, B: Matrix, dom: Domain | None = None) -> Matrix:
    if not A:
        return []
    if not B:
        return [[] for _ in A]
    m, k, n = len(A), len(B), len(B[0])
    if dom is None:
        dom = domain_of(B[0][0] if n else A[0][0])
    zero = dom.zero
    out = []
    for i in range(m):
        row = [None] * n
        Ai = A[i]
        nz = [(t, Ai[t]) for t in range(k) if not Ai[t].is_zero()]
        for j in range(n):
            acc = zero
            for t, a in nz:
                b = B[t][j]
                if not b.is_zero():
                    acc = acc + a * b
            row[j] = acc
        out.append(row)
    return out


def vecmat(v: Sequence, B: Matrix, dom: Domain) -> list:
    n = len(B[0]) if B else 0
    out = [dom.zero] * n
    for t, a in enumerate(v):
        if a.is_zero():
            continue
        row = B[t]
        for j in range(n):
            if not row[j].is_zero():
                out[j] = out[j] + a * row[j]
    return out


def add(A: Matrix, B: Matrix) -> Matrix:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def sub(A: Matrix, B: Matrix) -> Matrix:
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def scale(c, A: Matrix) -> Matrix:
    return [[c * a for a in row] for row in A]


def is_zero_matrix(A: Matrix) -> bool:
    return all(x.is_zero() for row in A for x in row)


def matrix_power(A: Matrix, k: int, dom: Domain) -> Matrix:
    out = identity(dom, len(A))
    for _ in range(k):
        out = matmul(out, A, dom)
    return out


def map_matrix(A: Matrix, f: Callable) -> Matrix:
    return [[f(x) for x in row] for row in A]


def direct_sum(blocks: Sequence[Matrix], dom: Domain) -> Matrix:
    n = sum(len(b) for b in blocks)
    out = zeros(dom, n, n)
    k = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[k + i][k + j] = x
        k += len(b)
    return out


# -- elimination ----------------------------------------------------------
def _pick_pivot(rows: Matrix, start: int, col: int) -> int | None:
    best, best_cost = None, None
    for i in range(start, len(rows)):
        x = rows[i][col]
        if not x.is_zero():
            c = x._cost()
            if best is None or c < best_cost:
                best, best_cost = i, c
                if c <= 1:
                    break
    return best


def rref(A: Matrix, track: bool = False, dom: Domain | None = None):
    """Reduced row echelon form.

    Returns ``(R, pivots)`` or, with ``track``, ``(R, pivots, T)`` where
    ``T A = R`` (``R`` keeps all rows; the first ``len(pivots)`` are nonzero).
    """
    rows = [list(r) for r in A]
    m = len(rows)
    ncols = len(rows[0]) if rows else 0
    if track:
        if dom is None:
            dom = domain_of(rows[0][0])
        T = identity(dom, m)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        p = _pick_pivot(rows, r, c)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        if track:
            T[r], T[p] = T[p], T[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv if not x.is_zero() else x for x in rows[r]]
        if track:
            T[r] = [x * inv if not x.is_zero() else x for x in T[r]]
        piv_row = rows[r]
        nz = [j for j in range(c, ncols) if not piv_row[j].is_zero()]
        if track:
            tnz = [j for j in range(m) if not T[r][j].is_zero()]
        for i in range(m):
            if i == r:
                continue
            f = rows[i][c]
            if f.is_zero():
                continue
            row = rows[i]
            for j in nz:
                row[j] = row[j] - f * piv_row[j]
            if track:
                Ti, Tr = T[i], T[r]
                for j in tnz:
                    Ti[j] = Ti[j] - f * Tr[j]
        pivots.append(c)
        r += 1
    if track:
        return rows, pivots, T
    return rows, pivots


def rank(A: Matrix) -> int:
    if not A or not A[0]:
        return 0
    return len(rref(A)[1])


def nullspace(A: Matrix, ncols: int, dom: Domain) -> Matrix:
    """Basis (as rows) of {x : A x^T = 0}."""
    if not A:
        return identity(dom, ncols)
    R, pivots = rref(A)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [dom.zero] * ncols
        x[f] = dom.one
        for i, p in enumerate(pivots):
            if not R[i][f].is_zero():
                x[p] = -R[i][f]
        basis.append(x)
    return basis


def left_kernel(A: Matrix, dom: Domain) -> Matrix:
    """Basis of {v : v A = 0}."""
    m = len(A)
    if m == 0:
        return []
    return nullspace(transpose(A), m, dom)


def det(A: Matrix, dom: Domain):
    n = len(A)
    if n == 0:
        return dom.one
    rows = [list(r) for r in A]
    out = dom.one
    for c in range(n):
        p = _pick_pivot(rows, c, c)
        if p is None:
            return dom.zero
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            out = -out
        piv = rows[c][c]
        out = out * piv
        inv = piv.inverse()
        for i in range(c + 1, n):
            f = rows[i][c]
            if f.is_zero():
                continue
            f = f * inv
            for j in range(c + 1, n):
                if not rows[c][j].is_zero():
                    rows[i][j] = rows[i][j] - f * rows[c][j]
    return out


def inverse(A: Matrix, dom: Domain) -> Matrix:
    n = len(A)
    aug = [list(row) + e for row, e in zip(A, identity(dom, n))]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in R]


class NotInSpan(ValueError):
    pass


class RowSolver:
    """Solve ``c B = v`` for a fixed list of rows ``B`` (not necessarily independent)."""

    def __init__(self, B: Matrix, ncols: int, dom: Domain):
        self.dom = dom
        self.ncols = ncols
        self.nrows = len(B)
        if B:
            R, pivots, T = rref(B, track=True, dom=dom)
        else:
            R, pivots, T = [], [], []
        self.rank = len(pivots)
        self.R = R[: self.rank]
        self.T = T[: self.rank]
        self.pivots = pivots
        self.independent = self.rank == len(B)

    def contains(self, v: Sequence) -> bool:
        return self._residual(v)[1]

    def _residual(self, v):
        a = [v[p] for p in self.pivots]
        res = list(v)
        for ai, row in zip(a, self.R):
            if ai.is_zero():
                continue
            for j, x in enumerate(row):
                if not x.is_zero():
                    res[j] = res[j] - ai * x
        return a, all(x.is_zero() for x in res)

    def solve(self, v: Sequence) -> list:
        a, ok = self._residual(v)
        if not ok:
            raise NotInSpan("vector not in span")
        out = [self.dom.zero] * self.nrows
        for ai, trow in zip(a, self.T):
            if ai.is_zero():
                continue
            for j, x in enumerate(trow):
                if not x.is_zero():
                    out[j] = out[j] + ai * x
        return out


def span_rank(vectors: Matrix) -> int:
    return rank(vectors) if vectors else 0


def complement_basis(rows: Matrix, n: int, dom: Domain) -> list[int]:
    """Indices of unit vectors extending the independent ``rows`` to a basis."""
    R, pivots = rref(rows) if rows else ([], [])
    return [c for c in range(n) if c not in pivots]
