"""The two cellular bases {m_st} and {n_st} of Y_{r,n} and expansions in them.

Every m_st is a left eigenvector of the t_j with character p_s and a right
eigenvector with character p_t, so in the E_chi g_w basis the transition
matrix is block diagonal, one block per pair of characters (chi, rho).  Blocks
have size |S_alpha| <= n!, and each is inverted once and cached.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import combinat, linalg, perms
from .algebra import Element, YokonumaHecke
from .combinat import Shape, Tableau
from .scalars import Scalar

CellIndex = tuple[Shape, Tableau, Tableau]


class ShapeMismatch(ValueError):
    pass


class ResidueCollision(ZeroDivisionError):
    pass


@dataclass
class _Block:
    keys: list
    labels: list  # cellular indices
    inverse: list  # inverse of the transition matrix (rows: labels, cols: keys)
    det: Scalar


class CellularBasis:
    """Cellular data for one flavor: ``"m"`` (x_lambda) or ``"n"`` (y_lambda)."""

    def __init__(self, Y: YokonumaHecke, flavor: str = "m"):
        if flavor not in ("m", "n"):
            raise ValueError("flavor is 'm' or 'n'")
        self.Y = Y
        self.flavor = flavor
        self.shapes = combinat.enumerate_multipartitions(Y.r, Y.n)
        self.std = {lam: combinat.standard_tableaux(lam) for lam in self.shapes}
        self.indices: list[CellIndex] = [
            (lam, s, t) for lam in self.shapes for s in self.std[lam] for t in self.std[lam]
        ]
        self._elems: dict = {}
        self._blocks: dict = {}
        self._dom = linalg.scalar_domain(Y.field)

    # -- basis elements -----------------------------------------------
    @cached_property
    def _gen(self) -> dict:
        Y = self.Y
        make = Y.m_elem if self.flavor == "m" else Y.n_elem
        return {lam: make(lam) for lam in self.shapes}

    def generator(self, lam: Shape) -> Element:
        """m_lam or n_lam."""
        if lam not in self._gen:
            make = self.Y.m_elem if self.flavor == "m" else self.Y.n_elem
            return make(lam)
        return self._gen[lam]

    def elem(self, s: Tableau, t: Tableau) -> Element:
        """m_st = g_{d(s)}* m_lam g_{d(t)} (or the n analogue)."""
        key = (s, t)
        out = self._elems.get(key)
        if out is None:
            lam = combinat.shape_of(s)
            if combinat.shape_of(t) != lam:
                raise ShapeMismatch(f"{s} and {t} have different shapes")
            Y = self.Y
            right = Y.rmul_gw(self.generator(lam), combinat.d_of(t))
            out = Y.star(Y.rmul_gw(Y.star(right), combinat.d_of(s)))
            self._elems[key] = out
        return out

    def __getitem__(self, idx: CellIndex) -> Element:
        return self.elem(idx[1], idx[2])

    # -- blocks -------------------------------------------------------
    @cached_property
    def _block_keys(self) -> dict:
        out: dict = {}
        for key in self.Y.basis_keys:
            out.setdefault((key[0], self.Y.right_char(key)), []).append(key)
        return out

    @cached_property
    def _block_labels(self) -> dict:
        out: dict = {}
        for idx in self.indices:
            _, s, t = idx
            out.setdefault((combinat.component_map(s), combinat.component_map(t)), []).append(idx)
        return out

    def block(self, bkey) -> _Block:
        blk = self._blocks.get(bkey)
        if blk is None:
            keys = self._block_keys.get(bkey, [])
            labels = self._block_labels.get(bkey, [])
            if len(keys) != len(labels):
                raise AssertionError(f"block {bkey}: {len(labels)} basis elements for {len(keys)} keys")
            pos = {k: i for i, k in enumerate(keys)}
            dom = self._dom
            mat = []
            for idx in labels:
                row = [dom.zero] * len(keys)
                for k, c in self[idx].c.items():
                    if k not in pos:
                        raise AssertionError(f"{idx} leaves its character block")
                    row[pos[k]] = c
                mat.append(row)
            d = linalg.det(mat, dom)
            if d.is_zero():
                raise AssertionError(f"singular transition block {bkey}")
            blk = _Block(keys, labels, linalg.inverse(mat, dom), d)
            self._blocks[bkey] = blk
        return blk

    def all_blocks(self) -> list[_Block]:
        return [self.block(b) for b in sorted(self._block_keys)]

    # -- expansion ----------------------------------------------------
    def expand(self, a: Element) -> dict[CellIndex, Scalar]:
        """Coefficients of ``a`` in this cellular basis."""
        grouped: dict = {}
        for key, c in a.c.items():
            grouped.setdefault((key[0], self.Y.right_char(key)), {})[key] = c
        out: dict = {}
        for bkey, part in grouped.items():
            blk = self.block(bkey)
            vec = [part.get(k) for k in blk.keys]
            for j, idx in enumerate(blk.labels):
                acc = None
                for i, v in enumerate(vec):
                    if v is None:
                        continue
                    x = blk.inverse[i][j]
                    if not x.is_zero():
                        acc = v * x if acc is None else acc + v * x
                if acc is not None and not acc.is_zero():
                    out[idx] = acc
        return out

    def contract(self, coeffs: dict[CellIndex, Scalar]) -> Element:
        out = self.Y.zero()
        for idx, c in coeffs.items():
            out = out + self[idx] * c
        return out

    def in_ideal(self, a: Element, mu: Shape) -> bool:
        """Whether ``a`` lies in the span of basis elements of shape strictly dominating mu."""
        return all(
            idx[0] != mu and combinat.dominates(idx[0], mu) for idx in self.expand(a)
        )

    def transition_determinant(self) -> Scalar:
        """Product of the block determinants (the transition matrix up to a constant change of basis)."""
        out = self.Y.field.one
        for blk in self.all_blocks():
            out = out * blk.det
        return out


def tableau_elements(cb: CellularBasis, S: Tableau, mu: Shape, t: Tableau) -> Element:
    """m_St = sum over s with mu(s) = S of q^{l(d(s)) + l(d(t))} m_st (n_St uses (-q)^-l)."""
    Y = cb.Y
    lam = combinat.shape_of(t)
    out = Y.zero()
    for s in combinat.preimages(S, lam, mu):
        out = out + cb.elem(s, t) * _weight(Y, cb.flavor, perms.length(combinat.d_of(s)) + perms.length(combinat.d_of(t)))
    return out


def _weight(Y: YokonumaHecke, flavor: str, k: int) -> Scalar:
    if flavor == "m":
        return Y.field.q_power(k)
    return (-Y.field.q_power(-1)) ** k


def element_ST(cb: CellularBasis, S: Tableau, mu: Shape, T: Tableau, nu: Shape) -> Element:
    """m_ST = sum over s, t with mu(s) = S, nu(t) = T of q^{l(d(s)) + l(d(t))} m_st."""
    if combinat.alpha(mu) != combinat.alpha(nu):
        raise ValueError("alpha(mu) != alpha(nu)")
    Y = cb.Y
    lam = combinat.shape_of(S)
    out = Y.zero()
    for s in combinat.preimages(S, lam, mu):
        ls = perms.length(combinat.d_of(s))
        for t in combinat.preimages(T, lam, nu):
            w = _weight(Y, cb.flavor, ls + perms.length(combinat.d_of(t)))
            out = out + cb.elem(s, t) * w
    return out


def element_sT(cb: CellularBasis, s: Tableau, T: Tableau, nu: Shape) -> Element:
    """m_sT = (m_Ts)* = sum over t with nu(t) = T of q^{l(d(s)) + l(d(t))} m_st."""
    return cb.Y.star(tableau_elements(cb, T, nu, s))


# -- seminormal idempotents -------------------------------------------------
class Seminormal:
    """F_t and f_st = F_s m_st F_t; only meaningful over the generic field."""

    def __init__(self, cb_m: CellularBasis, cb_n: CellularBasis):
        self.Y = cb_m.Y
        self.cm, self.cn = cb_m, cb_n
        self.all_std = [t for lam in cb_m.shapes for t in cb_m.std[lam]]
        self._F: dict = {}
        self._J = {k: self.Y.jm(k) for k in range(1, self.Y.n + 1)}

    def residues(self, k: int) -> list[int]:
        return sorted({combinat.residue_exponent(s, k) for s in self.all_std})

    def F(self, t: Tableau) -> Element:
        out = self._F.get(t)
        if out is None:
            Y, F = self.Y, self.Y.field
            out = Y.one()
            for k in range(1, Y.n + 1):
                a = combinat.residue_exponent(t, k)
                for c in self.residues(k):
                    if c == a:
                        continue
                    den = F.q_power(a) - F.q_power(c)
                    if den.is_zero():
                        raise ResidueCollision(f"residues collide at {k}")
                    out = Y.mul(out, (self._J[k] - Y.one() * F.q_power(c)) * den.inverse())
            self._F[t] = out
        return out

    def f(self, s: Tableau, t: Tableau) -> Element:
        Y = self.Y
        return Y.mul(Y.mul(self.F(s), self.cm.elem(s, t)), self.F(t))

    def g(self, s: Tableau, t: Tableau) -> Element:
        Y = self.Y
        sc, tc = combinat.conjugate_tableau(s), combinat.conjugate_tableau(t)
        return Y.mul(Y.mul(self.F(sc), self.cn.elem(s, t)), self.F(tc))
