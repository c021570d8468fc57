"""Independent brute-force oracles used by the tests.

The monomial oracle multiplies in the basis t^beta g_w using only the
defining relations: t-monomials are pushed left through g_w one generator at
a time, and g_w g_i is rewritten with the quadratic relation when the length
drops.  Permutations here are one-line tuples w with g_w t_j = t_{w(j)} g_w;
they are translated to library keys through reduced words.
"""

from __future__ import annotations

from itertools import permutations, product

from yokonuma import perms as P


# -- permutations, the slow way -----------------------------------------------
def inversions(w: tuple) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def times_simple(w: tuple, i: int) -> tuple:
    """w s_i as functions (apply s_i first): swap positions i, i+1 (1-based i)."""
    w = list(w)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def word_of(w: tuple) -> list[int]:
    """A reduced word by repeatedly stripping a descent on the right."""
    word = []
    w = tuple(w)
    while True:
        for i in range(1, len(w)):
            if w[i - 1] > w[i]:
                word.append(i)
                w = times_simple(w, i)
                break
        else:
            return list(reversed(word))


# -- the algebra -----------------------------------------------------------
class MonomialOracle:
    def __init__(self, Y):
        self.Y = Y
        self.r, self.n = Y.r, Y.n
        F = Y.field
        self.F = F
        self.q = F.q
        self.qq = F.q - F.q_power(-1)
        self.inv_r = F.scalar(1) / self.r
        self.ident = tuple(range(self.n))

    def zero(self):
        return {}

    def one(self):
        return {((0,) * self.n, self.ident): self.F.one}

    def t(self, j):
        beta = [0] * self.n
        beta[j - 1] = 1
        return {(tuple(beta), self.ident): self.F.one}

    def g(self, i):
        return {((0,) * self.n, times_simple(self.ident, i)): self.F.one}

    @staticmethod
    def add(a, b, c=None):
        out = dict(a)
        for k, v in b.items():
            v = v if c is None else v * c
            out[k] = out[k] + v if k in out else v
        return {k: v for k, v in out.items() if not v.is_zero()}

    def _beta_mul(self, b1, b2):
        return tuple((x + y) % self.r for x, y in zip(b1, b2))

    def _push(self, w, gamma):
        """g_w t^gamma = t^{w.gamma} g_w with (w.gamma)_{w(j)} = gamma_j."""
        out = [0] * self.n
        for j, c in enumerate(gamma):
            out[w[j]] = c
        return tuple(out)

    def mul_g(self, a, i):
        """a g_i."""
        out = {}
        for (beta, w), c in a.items():
            ws = times_simple(w, i)
            if w[i - 1] < w[i]:
                out = self.add(out, {(beta, ws): c})
                continue
            # g_w g_i = g_{ws} g_i^2 = g_{ws} + qq g_{ws} e_i g_i, with g_{ws} g_i = g_w
            out = self.add(out, {(beta, ws): c})
            for s in range(self.r):
                gamma = [0] * self.n
                gamma[i - 1] = s
                gamma[i] = (-s) % self.r
                b2 = self._beta_mul(beta, self._push(ws, gamma))
                out = self.add(out, {(b2, w): c * self.qq * self.inv_r})
        return out

    def mul(self, a, b):
        out = {}
        for (gamma, v), c in b.items():
            word = word_of(v)
            part = {}
            for (beta, w), d in a.items():
                part = self.add(part, {(self._beta_mul(beta, self._push(w, gamma)), w): d * c})
            for i in word:
                part = self.mul_g(part, i)
            out = self.add(out, part)
        return out

    def prod(self, factors):
        out = self.one()
        for f in factors:
            out = self.mul(out, f)
        return out

    def tau(self, a):
        return a.get(((0,) * self.n, self.ident), self.F.zero)

    # -- translation -----------------------------------------------------
    def to_library(self, a):
        n = self.n
        terms = {(beta, P.from_word(word_of(w), n)): c for (beta, w), c in a.items()}
        return self.Y.from_monomial(terms)


# -- combinatorics by brute force --------------------------------------------
def young_subgroup_size(parts) -> int:
    from math import factorial

    out = 1
    for p in parts:
        out *= factorial(p)
    return out


def double_coset_count(n: int, lam, mu) -> int:
    """Number of (S_lam, S_mu) double cosets via orbits on S_n."""
    S = list(permutations(range(n)))

    def sub(parts):
        blocks, start = [], 0
        for p in parts:
            blocks.append(set(range(start, start + p)))
            start += p
        return [w for w in S if all(w[i] in b for b in blocks for i in b)]

    A, B = sub(lam), sub(mu)
    compose = lambda u, v: tuple(u[v[j]] for j in range(n))
    seen, count = set(), 0
    for w in S:
        if w in seen:
            continue
        count += 1
        for a in A:
            for b in B:
                seen.add(compose(compose(a, w), b))
    return count


def partitions(n: int, cap=None):
    cap = n if cap is None else cap
    if n == 0:
        yield ()
        return
    for k in range(min(n, cap), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def multipartitions(r: int, n: int):
    out = []
    for sizes in product(range(n + 1), repeat=r):
        if sum(sizes) != n:
            continue
        for comps in product(*(list(partitions(s)) for s in sizes)):
            out.append(tuple(comps))
    return out


def standard_count(lam) -> int:
    """Number of standard lam-tableaux: place 1..n one box at a time."""
    n = sum(sum(c) for c in lam)

    def rec(filled, m):
        if m == n:
            return 1
        out = 0
        for k, comp in enumerate(lam):
            for i, length in enumerate(comp):
                j = filled[k][i]
                if j < length and (i == 0 or filled[k][i - 1] > j):
                    nxt = [list(x) for x in filled]
                    nxt[k][i] += 1
                    out += rec(nxt, m + 1)
        return out

    return rec([[0] * len(c) for c in lam], 0)
