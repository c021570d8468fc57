"""The Yokonuma-Hecke algebra Y_{r,n}(q).

Generators t_1..t_n (t_j^r = 1) and g_1..g_{n-1} with

    g_i t_j = t_{s_i(j)} g_i,    g_i^2 = 1 + (q - q^-1) e_i g_i,
    e_i = (1/r) sum_s t_i^s t_{i+1}^-s,

plus the braid relations.  The normal form used for storage is the basis
``E_chi g_w`` where ``E_chi`` is the primitive idempotent of the group
algebra of (Z/r)^n on which t_j acts by zeta_{chi_j}.  In it right
multiplication by g_i never branches into more than two terms:

    E_chi g_w g_i = E_chi g_{w s_i}                         if l(w s_i) > l(w)
                  = E_chi g_{w s_i} + [rho_i = rho_{i+1}] (q - q^-1) E_chi g_w   otherwise,

where rho is the right character of E_chi g_w.  Conversion to and from the
monomial basis t^beta g_w is a discrete Fourier transform in beta.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping

from . import combinat, perms
from .combinat import Shape, Tableau
from .perms import Perm
from .scalars import CycloField, Scalar

Key = tuple[tuple[int, ...], Perm]


class IndexOutOfRange(IndexError):
    pass


class Element:
    """A linear combination of basis elements E_chi g_w."""

    __slots__ = ("parent", "c")

    def __init__(self, parent: "YokonumaHecke", coeffs: Mapping[Key, Scalar]):
        self.parent = parent
        self.c = {k: v for k, v in coeffs.items() if not v.is_zero()}

    @classmethod
    def _wrap(cls, parent, d: dict) -> "Element":
        return cls(parent, d)

    def __add__(self, other: "Element") -> "Element":
        d = dict(self.c)
        for k, v in other.c.items():
            d[k] = d[k] + v if k in d else v
        return Element(self.parent, d)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __neg__(self) -> "Element":
        return Element(self.parent, {k: -v for k, v in self.c.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.parent.mul(self, other)
        s = self.parent.field.scalar(other)
        return Element(self.parent, {k: v * s for k, v in self.c.items()})

    def __rmul__(self, other):
        s = self.parent.field.scalar(other)
        return Element(self.parent, {k: s * v for k, v in self.c.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.parent is other.parent and self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self) -> bool:
        return bool(self.c)

    def star(self) -> "Element":
        return self.parent.star(self)

    def prime(self) -> "Element":
        return self.parent.prime(self)

    def terms(self) -> dict[tuple[tuple[int, ...], Perm], Scalar]:
        """Coefficients in the monomial basis t^beta g_w."""
        return self.parent.to_monomial(self)

    def __repr__(self) -> str:
        return self.parent.format(self)


class YokonumaHecke:
    """Y_{r,n}(q) over Q(zeta_M)(q), with r dividing M."""

    def __init__(self, r: int, n: int, field: CycloField | None = None):
        if r < 1 or n < 0:
            raise ValueError("need r >= 1 and n >= 0")
        self.r, self.n = r, n
        self.field = field if field is not None else CycloField(r if r > 1 else 1)
        if self.field.order % r:
            raise ValueError(f"r = {r} does not divide the field order {self.field.order}")
        F = self.field
        self.q = F.q
        self.qq = F.q - F.q_power(-1)  # q - q^-1
        self._step = F.order // r
        self.zeta = [F.zeta_scalar(self._step * c) for c in range(r)]  # zeta_r^c
        self.chars = [tuple(c) for c in product(range(r), repeat=n)]
        self.perms = sorted(perms.all_perms(n), key=lambda w: (perms.length(w), w))
        self.basis_keys: list[Key] = [(chi, w) for w in self.perms for chi in self.chars]
        self.dim = len(self.basis_keys)
        self._rinv = F.scalar(1) / r if r > 1 else F.one
        self._rinv_n = self._rinv ** n

    def __repr__(self) -> str:
        return f"YokonumaHecke(r={self.r}, n={self.n}, M={self.field.order})"

    # -- keys ---------------------------------------------------------
    @staticmethod
    @lru_cache(maxsize=None)
    def right_char(key: Key) -> tuple[int, ...]:
        """rho(j) = chi(j w^-1): t_j acts on E_chi g_w from the right by zeta_{rho(j)}."""
        chi, w = key
        winv = perms.inverse(w)
        return tuple(chi[winv[j]] for j in range(len(w)))

    # -- constructors -------------------------------------------------
    def element(self, coeffs: Mapping[Key, Scalar]) -> Element:
        return Element(self, coeffs)

    def zero(self) -> Element:
        return Element(self, {})

    def one(self) -> Element:
        e = perms.identity(self.n)
        return Element(self, {(chi, e): self.field.one for chi in self.chars})

    def scalar(self, c) -> Element:
        return self.one() * c

    def gen_t(self, j: int) -> Element:
        if not 1 <= j <= self.n:
            raise IndexOutOfRange(f"t_{j} with n = {self.n}")
        e = perms.identity(self.n)
        return Element(self, {(chi, e): self.zeta[chi[j - 1]] for chi in self.chars})

    def gen_g(self, i: int) -> Element:
        if not 1 <= i < self.n:
            raise IndexOutOfRange(f"g_{i} with n = {self.n}")
        return self.g_w(perms.simple(i, self.n))

    def g_w(self, w: Perm) -> Element:
        return Element(self, {(chi, tuple(w)): self.field.one for chi in self.chars})

    def idempotent(self, chi: tuple[int, ...]) -> Element:
        return Element(self, {(tuple(chi), perms.identity(self.n)): self.field.one})

    def monomial(self, beta: Iterable[int], w: Perm) -> Element:
        beta = tuple(beta)
        d = {}
        for chi in self.chars:
            k = sum(a * b for a, b in zip(chi, beta)) % self.r
            d[(chi, tuple(w))] = self.zeta[k]
        return Element(self, d)

    def from_monomial(self, terms: Mapping[tuple[tuple[int, ...], Perm], Scalar]) -> Element:
        out = self.zero()
        for (beta, w), c in terms.items():
            out = out + self.monomial(beta, w) * c
        return out

    def to_monomial(self, a: Element) -> dict:
        out: dict = {}
        for (chi, w), c in a.c.items():
            cc = c * self._rinv_n
            for beta in self.chars:
                k = (-sum(x * y for x, y in zip(chi, beta))) % self.r
                key = (beta, w)
                v = cc * self.zeta[k]
                out[key] = out[key] + v if key in out else v
        return {k: v for k, v in out.items() if not v.is_zero()}

    # -- products -----------------------------------------------------
    def _rmul_g(self, d: dict, i: int) -> dict:
        """Right multiply by g_i (1-based)."""
        lo, hi = i - 1, i
        out: dict = {}
        qq = self.qq
        for (chi, w), c in d.items():
            pi, pj = w.index(lo), w.index(hi)
            w2 = list(w)
            w2[pi], w2[pj] = hi, lo
            k2 = (chi, tuple(w2))
            out[k2] = out[k2] + c if k2 in out else c
            if pi > pj and chi[pi] == chi[pj]:
                k = (chi, w)
                v = qq * c
                out[k] = out[k] + v if k in out else v
        return {k: v for k, v in out.items() if not v.is_zero()}

    def _rmul_word(self, d: dict, word: Iterable[int]) -> dict:
        for i in word:
            d = self._rmul_g(d, i)
        return d

    def rmul_g(self, a: Element, i: int) -> Element:
        return Element(self, self._rmul_g(a.c, i))

    def rmul_gw(self, a: Element, w: Perm) -> Element:
        return Element(self, self._rmul_word(a.c, perms.reduced_word(w)))

    def rmul_t(self, a: Element, j: int) -> Element:
        """a t_j: each E_chi g_w is a right t_j-eigenvector."""
        z = self.zeta
        return Element(self, {k: c * z[self.right_char(k)[j - 1]] for k, c in a.c.items()})

    def lmul_gw(self, w: Perm, a: Element) -> Element:
        """g_w a, computed as (a* g_{w^-1})*."""
        return self.star(self.rmul_gw(self.star(a), perms.inverse(w)))

    def mul(self, a: Element, b: Element) -> Element:
        if a.parent is not self or b.parent is not self:
            raise ValueError("elements of different algebras")
        by_rho: dict = {}
        for key, c in a.c.items():
            by_rho.setdefault(self.right_char(key), []).append((key, c))
        by_v: dict = {}
        for (psi, v), c in b.c.items():
            by_v.setdefault(v, []).append((psi, c))
        out: dict = {}
        for v, lst in by_v.items():
            z: dict = {}
            for psi, c in lst:
                for key, ac in by_rho.get(psi, ()):
                    p = ac * c
                    z[key] = z[key] + p if key in z else p
            z = self._rmul_word(z, perms.reduced_word(v))
            for key, val in z.items():
                out[key] = out[key] + val if key in out else val
        return Element(self, out)

    def prod(self, factors: Iterable[Element]) -> Element:
        out = self.one()
        for f in factors:
            out = self.mul(out, f)
        return out

    # -- involutions --------------------------------------------------
    def star(self, a: Element) -> Element:
        """The anti-automorphism fixing every g_i and t_j."""
        return Element(self, {(self.right_char(k), perms.inverse(k[1])): c for k, c in a.c.items()})

    def prime(self, a: Element) -> Element:
        """The ring involution fixing g_i, t_j and sending q to -q^-1."""
        return Element(self, {k: c.prime() for k, c in a.c.items()})

    # -- structural elements ------------------------------------------
    def e_ik(self, i: int, k: int) -> Element:
        """e_{i,k} = (1/r) sum_s t_i^s t_k^-s."""
        e = perms.identity(self.n)
        return Element(self, {(chi, e): self.field.one for chi in self.chars if chi[i - 1] == chi[k - 1]})

    def e_i(self, i: int) -> Element:
        return self.e_ik(i, i + 1)

    def big_e(self, blocks: Iterable[Iterable[int]]) -> Element:
        """E_A = product over blocks I of product over i < j in I of e_{i,j}."""
        out = self.one()
        for block in blocks:
            block = sorted(block)
            for a in range(len(block)):
                for b in range(a + 1, len(block)):
                    out = self.mul(out, self.e_ik(block[a], block[b]))
        return out

    def u_ik(self, i: int, k: int) -> Element:
        """u_{i,k} = product over l != k of (t_i - zeta_l)."""
        out = self.one()
        for l in range(1, self.r + 1):
            if l != k:
                out = self.mul(out, self.gen_t(i) - self.one() * self.zeta[l - 1])
        return out

    def u_elem(self, lam: Shape) -> Element:
        """u_lam = product over nonempty components i_k of u_{a_k, i_k}, a_k the block start."""
        out = self.one()
        start = 1
        for k, comp in enumerate(lam):
            s = sum(comp)
            if s:
                out = self.mul(out, self.u_ik(start, k + 1))
                start += s
        return out

    def U_elem(self, lam: Shape) -> Element:
        return self.mul(self.u_elem(lam), self.big_e(combinat.set_partition(lam)))

    def x_elem(self, lam: Shape) -> Element:
        d: dict = {}
        for w in perms.young_subgroup(combinat.flat(lam)):
            c = self.field.q_power(perms.length(w))
            for chi in self.chars:
                d[(chi, w)] = c
        return Element(self, d)

    def y_elem(self, lam: Shape) -> Element:
        d: dict = {}
        minus_q_inv = -self.field.q_power(-1)
        for w in perms.young_subgroup(combinat.flat(lam)):
            c = minus_q_inv ** perms.length(w)
            for chi in self.chars:
                d[(chi, w)] = c
        return Element(self, d)

    def m_elem(self, lam: Shape) -> Element:
        return self.mul(self.U_elem(lam), self.x_elem(lam))

    def n_elem(self, lam: Shape) -> Element:
        return self.mul(self.U_elem(lam), self.y_elem(lam))

    def jm(self, k: int) -> Element:
        """J_1 = 1, J_k = g_{k-1} J_{k-1} g_{k-1}."""
        if not 1 <= k <= self.n:
            raise IndexOutOfRange(f"J_{k} with n = {self.n}")
        out = self.one()
        for i in range(1, k):
            out = self.lmul_gw(perms.simple(i, self.n), self.rmul_g(out, i))
        return out

    # -- trace --------------------------------------------------------
    def tau(self, a: Element) -> Scalar:
        """tau(t^beta g_w) = 1 if beta = 0 and w = 1, else 0."""
        e = perms.identity(self.n)
        acc = self.field.zero
        for (chi, w), c in a.c.items():
            if w == e:
                acc = acc + c
        return acc * self._rinv_n

    def pairing(self, a: Element, b: Element) -> Scalar:
        """<a, b> = tau(a b*)."""
        return self.tau(self.mul(a, self.star(b)))

    # -- JSON ---------------------------------------------------------
    def to_json(self, a: Element) -> list[dict]:
        out = []
        for (beta, w), c in sorted(a.terms().items(), key=lambda kv: (perms.length(kv[0][1]), kv[0][1], kv[0][0])):
            out.append({"beta": list(beta), "word": perms.reduced_word(w), "coeff": c.to_json()})
        return out

    def from_json(self, data: list[dict]) -> Element:
        terms = {}
        for item in data:
            w = perms.from_word(item["word"], self.n)
            terms[(tuple(item["beta"]), w)] = Scalar.from_json(self.field, item["coeff"])
        return self.from_monomial(terms)

    def format(self, a: Element) -> str:
        if a.is_zero():
            return "0"
        parts = []
        for (beta, w), c in sorted(a.terms().items(), key=lambda kv: (perms.length(kv[0][1]), kv[0][1], kv[0][0])):
            mono = "".join(f"t{j + 1}^{b}" if b > 1 else f"t{j + 1}" for j, b in enumerate(beta) if b)
            word = perms.reduced_word(w)
            if word:
                mono += "g[" + ",".join(map(str, word)) + "]"
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts)
