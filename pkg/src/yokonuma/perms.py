"""Permutations of {1..n} acting on the right.

A permutation is a plain tuple ``w`` of 0-based images: ``w[j]`` is the image
of ``j`` (so ``(0, 1, ..., n-1)`` is the identity).  Products follow the
right-action rule ``(uv)(j) = v(u(j))``: apply ``u`` first.

Generator words are 1-based, ``[1, 2]`` meaning s_1 s_2.

>>> reduced_word(compose(simple(1, 3), simple(2, 3)))
[1, 2]
>>> length((2, 1, 0))
3
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterator, Sequence

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def simple(i: int, n: int) -> Perm:
    """The transposition s_i = (i, i+1), 1 <= i < n."""
    if not 1 <= i < n:
        raise IndexError(f"s_{i} not in S_{n}")
    w = list(range(n))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def compose(u: Perm, v: Perm) -> Perm:
    """The product uv: apply u, then v."""
    return tuple(v[x] for x in u)


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for j, x in enumerate(w):
        out[x] = j
    return tuple(out)


def is_permutation(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(len(w)))


def length(w: Perm) -> int:
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


def from_word(word: Sequence[int], n: int) -> Perm:
    w = identity(n)
    for i in word:
        w = compose(w, simple(i, n))
    return w


@lru_cache(maxsize=None)
def _reduced_word(w: Perm) -> tuple[int, ...]:
    word = []
    w = list(w)
    while True:
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                # s_i w has one fewer inversion
                word.append(i + 1)
                w[i], w[i + 1] = w[i + 1], w[i]
                break
        else:
            return tuple(word)


def reduced_word(w: Perm) -> list[int]:
    """Lexicographically least reduced word for ``w``."""
    return list(_reduced_word(tuple(w)))


def one_line(w: Perm) -> list[int]:
    """1-based one-line notation."""
    return [x + 1 for x in w]


def from_one_line(images: Sequence[int]) -> Perm:
    w = tuple(x - 1 for x in images)
    if not is_permutation(w):
        raise ValueError(f"{list(images)} is not a permutation")
    return w


def all_perms(n: int) -> list[Perm]:
    return [tuple(p) for p in permutations(range(n))]


# -- Young subgroups ------------------------------------------------------
def blocks(parts: Sequence[int]) -> list[range]:
    out, start = [], 0
    for p in parts:
        out.append(range(start, start + p))
        start += p
    return out


def block_of(parts: Sequence[int]) -> tuple[int, ...]:
    """Position -> index of the block containing it."""
    out = []
    for b, p in enumerate(parts):
        out.extend([b] * p)
    return tuple(out)


def young_subgroup(parts: Sequence[int]) -> list[Perm]:
    """All elements of S_mu, ordered by length then lexicographically."""
    n = sum(parts)
    factors = [list(permutations(blk)) for blk in blocks(parts)]
    out = []
    for choice in product(*factors):
        w = [0] * n
        for blk, images in zip(blocks(parts), choice):
            for j, x in zip(blk, images):
                w[j] = x
        out.append(tuple(w))
    out.sort(key=lambda w: (length(w), w))
    return out


def in_young_subgroup(w: Perm, parts: Sequence[int]) -> bool:
    b = block_of(parts)
    return all(b[j] == b[x] for j, x in enumerate(w))


def _row_fillings(parts: Sequence[int], pool: tuple[int, ...]) -> Iterator[list[tuple[int, ...]]]:
    if not parts:
        yield []
        return
    for row in combinations(pool, parts[0]):
        rest = tuple(x for x in pool if x not in row)
        for tail in _row_fillings(parts[1:], rest):
            yield [row] + tail


@lru_cache(maxsize=None)
def _coset_reps(parts: tuple[int, ...]) -> tuple[Perm, ...]:
    n = sum(parts)
    out = []
    for rows in _row_fillings(parts, tuple(range(n))):
        # the row-standard tableau with these rows; d sends t^mu's entries to it
        out.append(tuple(x for row in rows for x in row))
    return tuple(out)


def coset_reps(parts: Sequence[int]) -> list[Perm]:
    """Distinguished right coset representatives of S_mu in S_n.

    Ordered by the row-standard tableaux they correspond to (rows filled
    left to right, lexicographically).
    """
    return list(_coset_reps(tuple(p for p in parts if p)))


def is_distinguished(d: Perm, parts: Sequence[int]) -> bool:
    return all(d[a] < d[a + 1] for blk in blocks(parts) for a in blk[:-1])


def double_coset_reps(lam: Sequence[int], mu: Sequence[int]) -> list[Perm]:
    """Minimal length elements of the double cosets S_lam \\ S_n / S_mu."""
    return [d for d in coset_reps(lam) if is_distinguished(inverse(d), mu)]


def min_double_coset_rep(w: Perm, lam: Sequence[int], mu: Sequence[int]) -> Perm:
    """The minimal length element of S_lam w S_mu (by descent)."""
    bl, bm = block_of(lam), block_of(mu)
    w = list(w)
    changed = True
    while changed:
        changed = False
        for i in range(len(w) - 1):
            # left multiplication by s_i in S_lam swaps positions i, i+1
            if bl[i] == bl[i + 1] and w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                changed = True
        winv = inverse(tuple(w))
        for v in range(len(w) - 1):
            # right multiplication by s_v in S_mu swaps values v, v+1
            if bm[v] == bm[v + 1] and winv[v] > winv[v + 1]:
                w[winv[v]], w[winv[v + 1]] = v + 1, v
                winv = inverse(tuple(w))
                changed = True
    return tuple(w)


def double_coset(w: Perm, lam: Sequence[int], mu: Sequence[int]) -> set[Perm]:
    return {compose(compose(a, w), b) for a in young_subgroup(lam) for b in young_subgroup(mu)}
