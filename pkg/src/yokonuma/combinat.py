"""Multicompositions, multipartitions and their tableaux.

Shapes are tuples of ``r`` components, each a tuple of positive parts; an
empty component is ``()``.  Tableaux have the same nesting with rows of
entries: 1-based integers for ordinary tableaux, ``(row, component)`` pairs
(both 1-based) for tableaux of a given type.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from . import perms
from .perms import Perm

Shape = tuple[tuple[int, ...], ...]
Tableau = tuple[tuple[tuple, ...], ...]


class NotRowStandard(ValueError):
    pass


class NotColumnSemistandard(ValueError):
    pass


# -- shapes ---------------------------------------------------------------
def canonical(shape: Iterable[Iterable[int]]) -> Shape:
    return tuple(tuple(p for p in comp if p) for comp in shape)


def size(shape: Shape) -> int:
    return sum(sum(c) for c in shape)


def flat(shape: Shape) -> tuple[int, ...]:
    """The composition of n read off row by row, components in order."""
    return tuple(p for comp in shape for p in comp if p)


def alpha(shape: Shape) -> tuple[int, ...]:
    return tuple(sum(c) for c in shape)


def is_multipartition(shape: Shape) -> bool:
    return all(all(a >= b for a, b in zip(c, c[1:])) for c in shape)


def _compositions(n: int) -> list[tuple[int, ...]]:
    if n == 0:
        return [()]
    return [(first,) + rest for first in range(1, n + 1) for rest in _compositions(n - first)]


def _partitions(n: int, cap: int | None = None) -> list[tuple[int, ...]]:
    if n == 0:
        return [()]
    cap = n if cap is None else cap
    return [(first,) + rest for first in range(min(n, cap), 0, -1) for rest in _partitions(n - first, first)]


def _weak_compositions(n: int, r: int) -> list[tuple[int, ...]]:
    if r == 1:
        return [(n,)]
    return [(a,) + rest for a in range(n, -1, -1) for rest in _weak_compositions(n - a, r - 1)]


def partial_sums(shape: Shape, n: int | None = None) -> tuple[int, ...]:
    """Entries sum_{i<k}|shape^(i)| + sum_{i<=j} shape^(k)_i for every k and j = 0..n."""
    n = size(shape) if n is None else n
    out = []
    before = 0
    for comp in shape:
        acc = before
        out.append(acc)
        for j in range(n):
            if j < len(comp):
                acc += comp[j]
            out.append(acc)
        before += sum(comp)
    return tuple(out)


def dominates(lam: Shape, mu: Shape) -> bool:
    """lam ⊵ mu."""
    n = max(size(lam), max((len(c) for c in lam), default=0), max((len(c) for c in mu), default=0))
    return all(a >= b for a, b in zip(partial_sums(lam, n), partial_sums(mu, n)))


def dominance(lam: Shape, mu: Shape) -> str:
    ge, le = dominates(lam, mu), dominates(mu, lam)
    if ge and le:
        return "equal"
    if ge:
        return "greater"
    if le:
        return "less"
    return "incomparable"


def _order_key(shape: Shape, n: int):
    return tuple(-x for x in partial_sums(shape, n))


@lru_cache(maxsize=None)
def enumerate_multicompositions(r: int, n: int) -> tuple[Shape, ...]:
    """All canonical r-compositions of n, dominance-greater first."""
    out = [
        tuple(parts)
        for sizes in _weak_compositions(n, r)
        for parts in product(*(_compositions(s) for s in sizes))
    ]
    return tuple(sorted(out, key=lambda s: _order_key(s, n)))


@lru_cache(maxsize=None)
def enumerate_multipartitions(r: int, n: int) -> tuple[Shape, ...]:
    out = [
        tuple(parts)
        for sizes in _weak_compositions(n, r)
        for parts in product(*(_partitions(s) for s in sizes))
    ]
    return tuple(sorted(out, key=lambda s: _order_key(s, n)))


def _transpose(part: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sum(1 for p in part if p > j) for j in range(part[0])) if part else ()


def conjugate(lam: Shape) -> Shape:
    """Transpose every component and reverse the component order."""
    return tuple(_transpose(c) for c in reversed(lam))


def _transpose_rows(rows: tuple[tuple, ...]) -> tuple[tuple, ...]:
    if not rows:
        return ()
    return tuple(tuple(row[j] for row in rows if len(row) > j) for j in range(len(rows[0])))


def conjugate_tableau(t: Tableau) -> Tableau:
    return tuple(_transpose_rows(c) for c in reversed(t))


# -- ordinary tableaux ----------------------------------------------------
def shape_of(t: Tableau) -> Shape:
    return tuple(tuple(len(row) for row in comp) for comp in t)


def initial_tableau(shape: Shape) -> Tableau:
    """t^shape: 1..n filled along rows, components in order."""
    k = 0
    comps = []
    for comp in shape:
        rows = []
        for p in comp:
            rows.append(tuple(range(k + 1, k + p + 1)))
            k += p
        comps.append(tuple(rows))
    return tuple(comps)


def entries(t: Tableau) -> list:
    """Entries read along rows, components in order (the t^shape order of nodes)."""
    return [x for comp in t for row in comp for x in row]


def tab_of(shape: Shape, d: Perm) -> Tableau:
    """t^shape d: apply d to the entries of t^shape."""
    k = 0
    comps = []
    for comp in shape:
        rows = []
        for p in comp:
            rows.append(tuple(d[k + j] + 1 for j in range(p)))
            k += p
        comps.append(tuple(rows))
    return tuple(comps)


def is_row_standard(t: Tableau) -> bool:
    return all(all(a < b for a, b in zip(row, row[1:])) for comp in t for row in comp)


def is_standard(t: Tableau) -> bool:
    if not is_row_standard(t):
        return False
    for comp in t:
        for upper, lower in zip(comp, comp[1:]):
            if len(lower) > len(upper) or any(a >= b for a, b in zip(upper, lower)):
                return False
    return True


def d_of(t: Tableau) -> Perm:
    if not is_row_standard(t):
        raise NotRowStandard(f"{t} is not row standard")
    return tuple(x - 1 for x in entries(t))


@lru_cache(maxsize=None)
def row_standard_tableaux(shape: Shape) -> tuple[Tableau, ...]:
    return tuple(tab_of(shape, d) for d in perms.coset_reps(flat(shape)))


@lru_cache(maxsize=None)
def standard_tableaux(shape: Shape) -> tuple[Tableau, ...]:
    return tuple(t for t in row_standard_tableaux(shape) if is_standard(t))


def component_map(t: Tableau) -> tuple[int, ...]:
    """p_t: the 0-based component index holding each entry 1..n."""
    n = len(entries(t))
    out = [0] * n
    for k, comp in enumerate(t):
        for row in comp:
            for x in row:
                out[x - 1] = k
    return tuple(out)


def position(t: Tableau, m: int) -> tuple[int, int, int]:
    """(component, row, column) of entry m, all 0-based."""
    for k, comp in enumerate(t):
        for i, row in enumerate(comp):
            if m in row:
                return k, i, row.index(m)
    raise KeyError(m)


def restrict_shape(t: Tableau, m: int) -> Shape:
    """Shape of the subtableau of entries <= m (zero rows stripped)."""
    return tuple(tuple(c for c in (sum(1 for x in row if x <= m) for row in comp) if c) for comp in t)


def tableau_dominates(s: Tableau, t: Tableau) -> bool:
    n = len(entries(s))
    return all(dominates(restrict_shape(s, m), restrict_shape(t, m)) for m in range(1, n + 1))


def pair_dominates(a: tuple[Tableau, Tableau], b: tuple[Tableau, Tableau]) -> bool:
    return tableau_dominates(a[0], b[0]) and tableau_dominates(a[1], b[1])


def residue_exponent(t: Tableau, m: int) -> int:
    """res_t(m) = q**(2*(col-row)); this returns 2*(col-row)."""
    _, i, j = position(t, m)
    return 2 * (j - i)


def residue(t: Tableau, m: int, field):
    return field.q_power(residue_exponent(t, m))


def set_partition(shape: Shape) -> list[tuple[int, ...]]:
    """A_shape: consecutive blocks of sizes |shape^(i)| over the nonempty components."""
    out, k = [], 1
    for comp in shape:
        s = sum(comp)
        if s:
            out.append(tuple(range(k, k + s)))
            k += s
    return out


def is_e_restricted(lam: Shape, e: int | None) -> bool:
    """Every component has successive part differences (trailing zero included) below e."""
    if e is None:
        return True
    for comp in lam:
        parts = list(comp) + [0]
        if any(a - b >= e for a, b in zip(parts, parts[1:])):
            return False
    return True


def e_restricted(r: int, n: int, e: int | None) -> tuple[Shape, ...]:
    return tuple(lam for lam in enumerate_multipartitions(r, n) if is_e_restricted(lam, e))


# -- tableaux of a given type ---------------------------------------------
def type_of(s: Tableau, mu: Shape) -> Tableau:
    """mu(s): replace m by (row, component) of m in t^mu."""
    tm = initial_tableau(mu)
    where = {}
    for k, comp in enumerate(tm):
        for i, row in enumerate(comp):
            for x in row:
                where[x] = (i + 1, k + 1)
    return tuple(tuple(tuple(where[x] for x in row) for row in comp) for comp in s)


def _ss_key(e: tuple[int, int]) -> tuple[int, int]:
    return (e[1], e[0])


def is_semistandard(S: Tableau, mu: Shape) -> bool:
    counts: dict = {}
    for k, comp in enumerate(S):
        for row in comp:
            for e in row:
                if e[1] < k + 1:
                    return False
                counts[e] = counts.get(e, 0) + 1
            if any(_ss_key(a) > _ss_key(b) for a, b in zip(row, row[1:])):
                return False
        for upper, lower in zip(comp, comp[1:]):
            if len(lower) > len(upper) or any(_ss_key(a) >= _ss_key(b) for a, b in zip(upper, lower)):
                return False
    want = {(i + 1, k + 1): p for k, comp in enumerate(mu) for i, p in enumerate(comp) if p}
    return counts == want


@lru_cache(maxsize=None)
def semistandard_tableaux(lam: Shape, mu: Shape) -> tuple[Tableau, ...]:
    """T_0(lam, mu)."""
    if size(lam) != size(mu):
        return ()
    found = []
    seen = set()
    for s in standard_tableaux(lam):
        S = type_of(s, mu)
        if S not in seen and is_semistandard(S, mu):
            seen.add(S)
            found.append(S)
    return tuple(sorted(found))


def t0plus(lam: Shape, mu: Shape) -> tuple[Tableau, ...]:
    if alpha(lam) != alpha(mu):
        return ()
    return semistandard_tableaux(lam, mu)


@lru_cache(maxsize=None)
def t0plus_all(lam: Shape) -> tuple[tuple[Shape, Tableau], ...]:
    """T_0^+(lam) as (type, tableau) pairs, types in enumeration order."""
    r, n = len(lam), size(lam)
    return tuple((mu, S) for mu in enumerate_multicompositions(r, n) for S in t0plus(lam, mu))


def semistandard_initial(lam: Shape) -> Tableau:
    """T^lam, the unique element of T_0^+(lam, lam)."""
    return type_of(initial_tableau(lam), lam)


def preimages(S: Tableau, lam: Shape, mu: Shape) -> list[Tableau]:
    return [s for s in standard_tableaux(lam) if type_of(s, mu) == S]


@lru_cache(maxsize=None)
def first_standard(S: Tableau, lam: Shape, mu: Shape) -> Tableau:
    pre = preimages(S, lam, mu)
    for s in pre:
        if all(tableau_dominates(s, t) for t in pre):
            return s
    raise ValueError("no dominant preimage")


def conjugate_typed(S: Tableau) -> Tableau:
    return conjugate_tableau(S)


@lru_cache(maxsize=None)
def column_semistandard(lam: Shape, mu: Shape) -> tuple[Tableau, ...]:
    """T^cs(lam, mu) = {S : S' in T_0^+(lam', mu)}."""
    return tuple(conjugate_tableau(X) for X in t0plus(conjugate(lam), mu))


def is_column_semistandard(S: Tableau, lam: Shape, mu: Shape) -> bool:
    return conjugate_tableau(S) in t0plus(conjugate(lam), mu)


@lru_cache(maxsize=None)
def s_dot(S: Tableau, lam: Shape, mu: Shape) -> Tableau:
    """The standard preimage of S whose d is minimal in its (S_lam, S_mu) double coset."""
    if not is_column_semistandard(S, lam, mu):
        raise NotColumnSemistandard(f"{S} is not column semistandard")
    for s in preimages(S, lam, mu):
        d = d_of(s)
        if perms.min_double_coset_rep(d, flat(lam), flat(mu)) == d:
            return s
    raise ValueError("no distinguished preimage")


# -- JSON ----------------------------------------------------------------
def shape_to_json(shape: Shape) -> list[list[int]]:
    return [list(c) for c in shape]


def tableau_to_json(t: Tableau) -> list:
    return [[[list(e) if isinstance(e, tuple) else e for e in row] for row in comp] for comp in t]


def shape_from_json(data) -> Shape:
    return canonical(data)


def render(t) -> str:
    """One-line text rendering: rows joined by '/', components by '|'."""
    def cell(e):
        return f"{e[0]}.{e[1]}" if isinstance(e, tuple) else str(e)

    def comp(c):
        if not c:
            return "-"
        if c and isinstance(c[0], int):
            return ",".join(map(str, c))
        return "/".join(" ".join(cell(e) for e in row) for row in c)

    return " | ".join(comp(c) for c in t)
