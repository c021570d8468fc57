"""Right Y_{r,n}-modules given by exact action matrices.

Vectors are rows and generators act by right multiplication, so the matrix
of ``h1 h2`` is ``rho(h1) rho(h2)``.  Built here: the permutation modules
M^mu = m_mu Y and N^mu = n_mu Y, Specht modules S^lam and dual Specht
modules S_lam, Gram matrices, contragredient duals, intertwiner spaces and
filtrations by explicit submodule chains.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Callable, Sequence

from . import combinat, linalg, perms
from .algebra import Element, YokonumaHecke
from .cellular import CellularBasis, tableau_elements
from .combinat import Shape, Tableau
from .linalg import Domain, Matrix
from .scalars import GENERIC, Specialization


class DimensionMismatch(ValueError):
    pass


class NotInModule(ValueError):
    pass


@dataclass
class BasisedModule:
    """A module with a named ordered basis and action matrices for t_1..t_n, g_1..g_{n-1}."""

    name: str
    labels: list
    r: int
    n: int
    dom: Domain
    q: object  # the value of q in ``dom``
    zeta: list  # zeta_r^c in ``dom``, c = 0..r-1
    t: list[Matrix]
    g: list[Matrix]
    spec: Specialization = GENERIC
    meta: dict = dc_field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def gen_matrices(self) -> list[Matrix]:
        return list(self.t) + list(self.g)

    # -- derived actions ----------------------------------------------
    def t_projector(self, j: int, c: int) -> Matrix:
        """Matrix of (1/r) sum_s zeta_c^{-s} t_j^s (the projection onto t_j = zeta_c)."""
        dom, r = self.dom, self.r
        T = self.t[j - 1]
        acc = linalg.zeros(dom, self.dim, self.dim)
        P = linalg.identity(dom, self.dim)
        for s in range(r):
            acc = linalg.add(acc, linalg.scale(self.zeta[(-c * s) % r], P))
            P = linalg.matmul(P, T, dom)
        return linalg.scale(dom.one / dom(r), acc) if r > 1 else acc

    def g_word(self, word: Sequence[int]) -> Matrix:
        out = linalg.identity(self.dom, self.dim)
        for i in word:
            out = linalg.matmul(out, self.g[i - 1], self.dom)
        return out

    def monomial_action(self, beta: Sequence[int], w) -> Matrix:
        out = linalg.identity(self.dom, self.dim)
        for j, b in enumerate(beta):
            for _ in range(b % self.r):
                out = linalg.matmul(out, self.t[j], self.dom)
        return linalg.matmul(out, self.g_word(perms.reduced_word(w)), self.dom)

    def action(self, h: Element) -> Matrix:
        """Matrix of an arbitrary algebra element (coefficients specialized if needed)."""
        dom = self.dom
        out = linalg.zeros(dom, self.dim, self.dim)
        proj_cache: dict = {}
        for (chi, w), c in h.c.items():
            E = linalg.identity(dom, self.dim)
            for j, cj in enumerate(chi):
                key = (j + 1, cj)
                if key not in proj_cache:
                    proj_cache[key] = self.t_projector(j + 1, cj)
                E = linalg.matmul(E, proj_cache[key], dom)
            term = linalg.matmul(E, self.g_word(perms.reduced_word(w)), dom)
            out = linalg.add(out, linalg.scale(self.spec.apply(c) if not self.spec.is_generic else c, term))
        return out

    # -- checks -------------------------------------------------------
    def relation_defects(self) -> list[str]:
        """Names of the defining relations that fail (empty when all hold)."""
        dom, n, r = self.dom, self.n, self.r
        I = linalg.identity(dom, self.dim)
        mm = lambda A, B: linalg.matmul(A, B, dom)
        bad = []
        for j in range(n):
            if linalg.matrix_power(self.t[j], r, dom) != I:
                bad.append(f"t{j + 1}^r")
            for k in range(j + 1, n):
                if mm(self.t[j], self.t[k]) != mm(self.t[k], self.t[j]):
                    bad.append(f"t{j + 1}t{k + 1}")
        qq = self.q - self.q.inverse()
        for i in range(1, n):
            G = self.g[i - 1]
            for j in range(1, n + 1):
                sj = i + 1 if j == i else (i if j == i + 1 else j)
                if mm(G, self.t[j - 1]) != mm(self.t[sj - 1], G):
                    bad.append(f"g{i}t{j}")
            E = self._e_action(i, i + 1)
            if mm(G, G) != linalg.add(I, linalg.scale(qq, mm(E, G))):
                bad.append(f"g{i}^2")
            for k in range(i + 1, n):
                H = self.g[k - 1]
                if k == i + 1:
                    if mm(mm(G, H), G) != mm(mm(H, G), H):
                        bad.append(f"braid{i}")
                elif mm(G, H) != mm(H, G):
                    bad.append(f"g{i}g{k}")
        return bad

    def _e_action(self, i: int, k: int) -> Matrix:
        dom, r = self.dom, self.r
        acc = linalg.zeros(dom, self.dim, self.dim)
        Ti, Tk = self.t[i - 1], self.t[k - 1]
        Tk_inv = linalg.matrix_power(Tk, r - 1, dom)
        A = linalg.identity(dom, self.dim)
        B = linalg.identity(dom, self.dim)
        for _ in range(r):
            acc = linalg.add(acc, linalg.matmul(A, B, dom))
            A = linalg.matmul(A, Ti, dom)
            B = linalg.matmul(B, Tk_inv, dom)
        return linalg.scale(dom.one / dom(r), acc) if r > 1 else acc

    def t_is_diagonal(self) -> bool:
        return all(
            T[a][b].is_zero() for T in self.t for a in range(self.dim) for b in range(self.dim) if a != b
        )

    def t_weights(self) -> list[tuple]:
        return [tuple(T[a][a] for T in self.t) for a in range(self.dim)]

    # -- transformations ----------------------------------------------
    def specialize(self, spec: Specialization) -> "BasisedModule":
        if spec.is_generic:
            return self
        if not self.spec.is_generic:
            raise ValueError("module is already specialized")
        F = spec.target_field(self.dom.field)
        dom = linalg.cyclo_domain(F)
        f = spec.apply
        return BasisedModule(
            self.name,
            list(self.labels),
            self.r,
            self.n,
            dom,
            f(self.q),
            [f(z) for z in self.zeta],
            [linalg.map_matrix(T, f) for T in self.t],
            [linalg.map_matrix(G, f) for G in self.g],
            spec,
            dict(self.meta),
        )

    def dual(self) -> "BasisedModule":
        """The contragredient dual; generators are star-fixed, so matrices are transposed."""
        return BasisedModule(
            f"dual({self.name})",
            list(self.labels),
            self.r,
            self.n,
            self.dom,
            self.q,
            self.zeta,
            [linalg.transpose(T) for T in self.t],
            [linalg.transpose(G) for G in self.g],
            self.spec,
        )

    def change_basis(self, P: Matrix, labels=None, name=None) -> "BasisedModule":
        """The same module in the basis given by the rows of an invertible P."""
        Pinv = linalg.inverse(P, self.dom)
        conj = lambda A: linalg.matmul(linalg.matmul(P, A, self.dom), Pinv, self.dom)
        return BasisedModule(
            name or self.name,
            list(labels) if labels is not None else list(self.labels),
            self.r,
            self.n,
            self.dom,
            self.q,
            self.zeta,
            [conj(T) for T in self.t],
            [conj(G) for G in self.g],
            self.spec,
        )

    def to_json(self) -> dict:
        enc = lambda A: [[x.to_json() for x in row] for row in A]
        return {
            "name": self.name,
            "dim": self.dim,
            "labels": [str(l) for l in self.labels],
            "specialization": str(self.spec),
            "t": [enc(T) for T in self.t],
            "g": [enc(G) for G in self.g],
        }


# -- intertwiners -----------------------------------------------------------
def intertwiners(
    A_mats: Sequence[Matrix], B_mats: Sequence[Matrix], dimA: int, dimB: int, dom: Domain, allowed=None
) -> list[Matrix]:
    """Basis of {X : A_k X = X B_k for all k}; ``allowed(a, b)`` prunes entries known to vanish."""
    unknowns = [(a, b) for a in range(dimA) for b in range(dimB) if allowed is None or allowed(a, b)]
    if not unknowns:
        return []
    col = {u: i for i, u in enumerate(unknowns)}
    rows = []
    for A, B in zip(A_mats, B_mats):
        for i in range(dimA):
            for j in range(dimB):
                eq: dict = {}
                # (A X)[i][j] = sum_k A[i][k] X[k][j]
                for k in range(dimA):
                    a = A[i][k]
                    if not a.is_zero() and (k, j) in col:
                        c = col[(k, j)]
                        eq[c] = eq[c] + a if c in eq else a
                # (X B)[i][j] = sum_k X[i][k] B[k][j]
                for k in range(dimB):
                    b = B[k][j]
                    if not b.is_zero() and (i, k) in col:
                        c = col[(i, k)]
                        eq[c] = eq[c] - b if c in eq else -b
                eq = {c: v for c, v in eq.items() if not v.is_zero()}
                if eq:
                    row = [dom.zero] * len(unknowns)
                    for c, v in eq.items():
                        row[c] = v
                    rows.append(row)
    sols = linalg.nullspace(rows, len(unknowns), dom) if rows else linalg.identity(dom, len(unknowns))
    out = []
    for x in sols:
        X = linalg.zeros(dom, dimA, dimB)
        for (a, b), v in zip(unknowns, x):
            X[a][b] = v
        out.append(X)
    return out


def module_homs(A: BasisedModule, B: BasisedModule) -> list[Matrix]:
    """Basis of Hom_Y(A, B) as dimA x dimB matrices X with rho_A(h) X = X rho_B(h)."""
    allowed = None
    if A.t_is_diagonal() and B.t_is_diagonal():
        wa, wb = A.t_weights(), B.t_weights()
        allowed = lambda a, b: wa[a] == wb[b]
    return intertwiners(A.gen_matrices(), B.gen_matrices(), A.dim, B.dim, A.dom, allowed)


def _random_invertible(basis: list[Matrix], dom: Domain, tries: int = 12, seed: int = 0) -> Matrix | None:
    if not basis:
        return None
    n = len(basis[0])
    if n == 0:
        return []
    if len(basis) == 1:
        return basis[0] if not linalg.det(basis[0], dom).is_zero() else None
    rng = random.Random(seed)
    for _ in range(tries):
        X = linalg.zeros(dom, n, len(basis[0][0]))
        for B in basis:
            c = dom(rng.randint(-7, 7) or 1)
            X = linalg.add(X, linalg.scale(c, B))
        if not linalg.det(X, dom).is_zero():
            return X
    return None


def find_isomorphism(A: BasisedModule, B: BasisedModule) -> Matrix | None:
    """An invertible intertwiner A -> B, or None.

    ``None`` is exact when Hom(A, B) = 0; otherwise it means that no random
    combination of a Hom basis was invertible (deterministic seed, 12 trials).
    """
    if A.dim != B.dim:
        raise DimensionMismatch(f"{A.name} has dim {A.dim}, {B.name} has dim {B.dim}")
    if A.dim == 0:
        return []
    return _random_invertible(module_homs(A, B), A.dom)


# -- sections of filtrations ------------------------------------------------
def section_matrices(mats: Sequence[Matrix], dim: int, dom: Domain, top: Matrix, below: Matrix) -> list[Matrix]:
    """Action of ``mats`` on span(top + below) / span(below), in the basis given by ``top``.

    Raises NotInModule if span(top + below) or span(below) is not stable.
    """
    rows = list(top) + list(below)
    solver = linalg.RowSolver(rows, dim, dom)
    if not solver.independent:
        raise ValueError("filtration vectors are linearly dependent")
    below_solver = linalg.RowSolver(list(below), dim, dom) if below else None
    k = len(top)
    out = []
    for X in mats:
        for v in below:
            if not below_solver.contains(linalg.vecmat(v, X, dom)):
                raise NotInModule("lower step is not a submodule")
        sec = []
        for v in top:
            try:
                c = solver.solve(linalg.vecmat(v, X, dom))
            except linalg.NotInSpan:
                raise NotInModule("upper step is not a submodule") from None
            sec.append(c[:k])
        out.append(sec)
    return out


def subquotient(M: BasisedModule, top: Matrix, below: Matrix, name: str = "", labels=None) -> BasisedModule:
    """The section span(top + below) / span(below), in the basis given by ``top``."""
    mats = section_matrices(M.gen_matrices(), M.dim, M.dom, top, below)
    return BasisedModule(
        name or f"section({M.name})",
        list(labels) if labels is not None else list(range(len(top))),
        M.r,
        M.n,
        M.dom,
        M.q,
        M.zeta,
        mats[: M.n],
        mats[M.n :],
        M.spec,
    )


@dataclass
class FiltrationStep:
    label: object
    vectors: Matrix


@dataclass
class Filtration:
    """M = M_1 > M_2 > ... with M_i spanned by the vectors of steps i, i+1, ..."""

    module: BasisedModule
    steps: list[FiltrationStep]

    def sections(self) -> list[BasisedModule]:
        out = []
        for i, step in enumerate(self.steps):
            below = [v for s in self.steps[i + 1 :] for v in s.vectors]
            out.append(subquotient(self.module, step.vectors, below, name=str(step.label)))
        return out

    def spans_module(self) -> bool:
        rows = [v for s in self.steps for v in s.vectors]
        return len(rows) == self.module.dim and linalg.rank(rows) == self.module.dim


# -- the module factory -----------------------------------------------------
class ModuleFactory:
    """Builds the modules attached to one algebra Y_{r,n} with cached cellular data."""

    def __init__(self, Y: YokonumaHecke):
        self.Y = Y
        self.dom = linalg.scalar_domain(Y.field)
        self.cm = CellularBasis(Y, "m")
        self.cn = CellularBasis(Y, "n")
        self._perm: dict = {}
        self._specht: dict = {}
        self._gram: dict = {}

    def cell(self, flavor: str) -> CellularBasis:
        return self.cm if flavor == "m" else self.cn

    def _module(self, name, labels, t, g) -> BasisedModule:
        Y = self.Y
        return BasisedModule(name, labels, Y.r, Y.n, self.dom, Y.q, list(Y.zeta), t, g)

    def _generator_actions(self, image: Callable[[int, Element], list], basis: list[Element], name, labels):
        Y = self.Y
        t = [[image(b, Y.rmul_t(v, j)) for b, v in enumerate(basis)] for j in range(1, Y.n + 1)]
        g = [[image(b, Y.rmul_g(v, i)) for b, v in enumerate(basis)] for i in range(1, Y.n)]
        return self._module(name, labels, t, g)

    # -- permutation modules ------------------------------------------
    def perm(self, mu: Shape, flavor: str = "m") -> "PermModule":
        key = (combinat.canonical(mu), flavor)
        if key not in self._perm:
            self._perm[key] = PermModule(self, key[0], flavor)
        return self._perm[key]

    # -- Specht modules -----------------------------------------------
    def specht(self, lam: Shape, flavor: str = "m") -> BasisedModule:
        """S^lam (flavor m) or the dual Specht module S_lam (flavor n)."""
        key = (lam, flavor)
        if key in self._specht:
            return self._specht[key]
        Y, cb = self.Y, self.cell(flavor)
        std = cb.std[lam]
        t0 = std[0]
        pos = {t: i for i, t in enumerate(std)}
        basis = [cb.elem(t0, t) for t in std]

        def image(_, x: Element) -> list:
            row = [self.dom.zero] * len(std)
            for (mu, s, t), c in cb.expand(x).items():
                if mu == lam:
                    if s != t0:
                        raise AssertionError(f"cell congruence broken in {lam}")
                    row[pos[t]] = c
                elif not combinat.dominates(mu, lam):
                    raise AssertionError(f"term of shape {mu} outside the ideal above {lam}")
            return row

        name = f"S^{lam}" if flavor == "m" else f"S_{lam}"
        mod = self._generator_actions(image, basis, name, list(std))
        self._specht[key] = mod
        return mod

    def gram(self, lam: Shape, flavor: str = "m") -> Matrix:
        """<m_s, m_t> from m_lam g_{d(s)} g_{d(t)}* m_lam = <m_s, m_t> m_lam mod higher terms."""
        key = (lam, flavor)
        if key in self._gram:
            return self._gram[key]
        Y, cb = self.Y, self.cell(flavor)
        std = cb.std[lam]
        t0 = std[0]
        G = linalg.zeros(self.dom, len(std), len(std))
        for a, s in enumerate(std):
            for b, t in enumerate(std):
                if b < a:
                    G[a][b] = G[b][a]
                    continue
                prod = Y.mul(cb.elem(t0, s), cb.elem(t, t0))
                for (mu, u, v), c in cb.expand(prod).items():
                    if mu == lam:
                        if (u, v) == (t0, t0):
                            G[a][b] = c
                        else:
                            raise AssertionError("bilinear form congruence broken")
                    elif not combinat.dominates(mu, lam):
                        raise AssertionError("term outside the ideal")
        self._gram[key] = G
        return G

    def all_shapes(self) -> tuple[Shape, ...]:
        return self.cm.shapes


class PermModule:
    """M^mu = m_mu Y (flavor m) or N^mu = n_mu Y (flavor n) with basis m_mu g_d, d in D_mu."""

    def __init__(self, factory: ModuleFactory, mu: Shape, flavor: str):
        self.factory = factory
        Y = self.Y = factory.Y
        self.mu = mu
        self.flavor = flavor
        self.dom = factory.dom
        self.reps = perms.coset_reps(combinat.flat(mu))
        self.pos = {d: i for i, d in enumerate(self.reps)}
        gen = Y.m_elem(mu) if flavor == "m" else Y.n_elem(mu)
        self.gen = gen
        self.char = combinat.component_map(combinat.initial_tableau(mu))
        self.lead = gen.c[(self.char, perms.identity(Y.n))]
        self._lead_inv = self.lead.inverse()
        self.basis = [Y.rmul_gw(gen, d) for d in self.reps]

    @property
    def dim(self) -> int:
        return len(self.reps)

    def coords(self, x: Element, check: bool = True) -> list:
        """Coordinates of x in the basis m_mu g_d."""
        vec = [self.dom.zero] * self.dim
        for (chi, w), c in x.c.items():
            if chi == self.char and w in self.pos:
                vec[self.pos[w]] = c * self._lead_inv
        if check and self.element(vec) != x:
            raise NotInModule(f"element is not in the permutation module of {self.mu}")
        return vec

    def contains(self, x: Element) -> bool:
        try:
            self.coords(x)
        except NotInModule:
            return False
        return True

    def element(self, vec: Sequence) -> Element:
        out = self.Y.zero()
        for c, b in zip(vec, self.basis):
            if not c.is_zero():
                out = out + b * c
        return out

    @cached_property
    def module(self) -> BasisedModule:
        Y = self.Y
        name = f"M^{self.mu}" if self.flavor == "m" else f"N^{self.mu}"
        return self.factory._generator_actions(
            lambda _, x: self.coords(x, check=True), self.basis, name, list(self.reps)
        )

    def h_of(self, x: Element) -> Element:
        """An h with x = m_mu h (h a combination of the g_d)."""
        vec = self.coords(x)
        out = self.Y.zero()
        for d, c in zip(self.reps, vec):
            if not c.is_zero():
                out = out + self.Y.g_w(d) * c
        return out


# -- Gram data --------------------------------------------------------------
@dataclass
class GramData:
    shape: Shape
    matrix: Matrix
    spec: Specialization

    @cached_property
    def rank(self) -> int:
        return linalg.rank(self.matrix) if self.matrix else 0

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @property
    def radical_dim(self) -> int:
        return self.dim - self.rank

    def is_symmetric(self) -> bool:
        return self.matrix == linalg.transpose(self.matrix)

    def to_json(self) -> dict:
        return {
            "shape": combinat.shape_to_json(self.shape),
            "specialization": str(self.spec),
            "matrix": [[x.to_json() for x in row] for row in self.matrix],
        }

    def to_text(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.matrix)


def gram(factory: "ModuleFactory", lam: Shape, spec: Specialization = GENERIC, flavor: str = "m") -> GramData:
    G = factory.gram(lam, flavor)
    if not spec.is_generic:
        G = linalg.map_matrix(G, spec.apply)
    return GramData(lam, G, spec)


def radical_dim(factory: "ModuleFactory", lam: Shape, spec: Specialization = GENERIC) -> int:
    return gram(factory, lam, spec).radical_dim


def simple_dim(factory: "ModuleFactory", lam: Shape, spec: Specialization = GENERIC) -> int:
    return gram(factory, lam, spec).rank


def simple_module(factory: "ModuleFactory", lam: Shape, spec: Specialization = GENERIC) -> BasisedModule:
    """D^lam = S^lam / rad S^lam over the specialized field."""
    S = factory.specht(lam).specialize(spec)
    G = gram(factory, lam, spec).matrix
    rad = linalg.left_kernel(G, S.dom)
    keep = linalg.complement_basis(rad, S.dim, S.dom)
    top = [[S.dom.one if j == i else S.dom.zero for j in range(S.dim)] for i in keep]
    return subquotient(S, top, rad, name=f"D^{lam}")


# -- bases of permutation modules -------------------------------------------
def semistandard_basis(factory: ModuleFactory, mu: Shape) -> list[tuple[tuple, Element]]:
    """The elements m_St with labels (lam, S, t), lam in enumeration order."""
    cb = factory.cm
    out = []
    for lam in cb.shapes:
        for S in combinat.t0plus(lam, mu):
            for t in cb.std[lam]:
                out.append(((lam, S, t), tableau_elements(cb, S, mu, t)))
    return out


def alt_basis(factory: ModuleFactory, mu: Shape, flavor: str = "m") -> list[tuple[tuple, Element]]:
    """m_mu n_{S. t} (flavor m) or n_mu m_{S. t} (flavor n), S in T^cs(lam, mu)."""
    Y = factory.Y
    gen = Y.m_elem(mu) if flavor == "m" else Y.n_elem(mu)
    other = factory.cell("n" if flavor == "m" else "m")
    out = []
    for lam in other.shapes:
        for S in combinat.column_semistandard(lam, mu):
            sd = combinat.s_dot(S, lam, mu)
            for t in other.std[lam]:
                out.append(((lam, S, t), Y.mul(gen, other.elem(sd, t))))
    return out


def coordinates(P: PermModule, elems: Sequence[Element]) -> Matrix:
    return [P.coords(x) for x in elems]


# -- filtrations ------------------------------------------------------------
def _filtration_from_basis(P: PermModule, labelled: list, target) -> tuple[Filtration, list]:
    """Steps grouped by (lam, S), least dominant first; ``target(lam)`` is the expected section."""
    groups: dict = {}
    for (lam, S, t), x in labelled:
        groups.setdefault((lam, S), []).append(P.coords(x))
    order = list(P.factory.all_shapes())
    keys = sorted(groups, key=lambda k: (-order.index(k[0]), k[1]))
    filt = Filtration(P.module, [FiltrationStep(k, groups[k]) for k in keys])
    return filt, keys


@dataclass
class FiltrationReport:
    labels: list  # (lam, S) per step, top step first
    spans: bool
    isomorphic: list[bool]
    counts: dict  # lam -> number of steps
    expected: dict  # lam -> predicted count

    @property
    def ok(self) -> bool:
        return self.spans and all(self.isomorphic) and self.counts == self.expected


def _check_filtration(filt: Filtration, keys: list, target, expected: dict) -> FiltrationReport:
    spans = filt.spans_module()
    iso = []
    if spans:
        try:
            secs = filt.sections()
        except (NotInModule, ValueError):
            secs = None
        if secs is None:
            iso = [False] * len(keys)
        else:
            for (lam, _), sec in zip(keys, secs):
                T = target(lam)
                iso.append(sec.dim == T.dim and find_isomorphism(sec, T) is not None)
    else:
        iso = [False] * len(keys)
    counts: dict = {}
    for lam, _ in keys:
        counts[lam] = counts.get(lam, 0) + 1
    return FiltrationReport(list(keys), spans, iso, counts, {k: v for k, v in expected.items() if v})


def specht_filtration(factory: ModuleFactory, mu: Shape) -> FiltrationReport:
    """M^mu filtered by the m_St, sections S^lam with multiplicity |T_0^+(lam, mu)|."""
    P = factory.perm(mu, "m")
    filt, keys = _filtration_from_basis(P, semistandard_basis(factory, mu), None)
    expected = {lam: len(combinat.t0plus(lam, mu)) for lam in factory.all_shapes()}
    return _check_filtration(filt, keys, lambda lam: factory.specht(lam, "m"), expected)


def column_filtration(factory: ModuleFactory, mu: Shape, flavor: str = "m") -> FiltrationReport:
    """M^mu by the m_mu n_{S. t} with dual Specht sections (N^mu: n_mu m_{S. t}, Specht sections).

    Multiplicities are predicted to be |T^cs(lam, mu)|.
    """
    P = factory.perm(mu, flavor)
    try:
        filt, keys = _filtration_from_basis(P, alt_basis(factory, mu, flavor), None)
    except NotInModule:
        return FiltrationReport([], False, [], {}, {})
    expected = {lam: len(combinat.column_semistandard(lam, mu)) for lam in factory.all_shapes()}
    other = "n" if flavor == "m" else "m"
    return _check_filtration(filt, keys, lambda lam: factory.specht(lam, other), expected)


# -- homomorphisms between permutation modules ------------------------------
def hom_indices(nu: Shape, mu: Shape) -> list:
    """D_{mu nu} intersected with S_alpha, empty when alpha(mu) != alpha(nu)."""
    if combinat.alpha(mu) != combinat.alpha(nu):
        return []
    parts_alpha = [a for a in combinat.alpha(mu)]
    return [
        d
        for d in perms.double_coset_reps(combinat.flat(mu), combinat.flat(nu))
        if perms.in_young_subgroup(d, parts_alpha)
    ]


def perm_hom(factory: ModuleFactory, nu: Shape, mu: Shape, d) -> Matrix:
    """Matrix of phi^d(m_nu h) = sum over w in S_mu d S_nu of q^l(w) U_mu g_w h."""
    Y = factory.Y
    Pm, Pn = factory.perm(mu, "m"), factory.perm(nu, "m")
    U = Y.U_elem(mu)
    X = Y.zero()
    for w in sorted(perms.double_coset(d, combinat.flat(mu), combinat.flat(nu))):
        X = X + Y.rmul_gw(U, w) * Y.field.q_power(perms.length(w))
    return [Pm.coords(Y.mul(X, Y.g_w(e))) for e in Pn.reps]


def perm_hom_basis(factory: ModuleFactory, nu: Shape, mu: Shape) -> list[Matrix]:
    return [perm_hom(factory, nu, mu, d) for d in hom_indices(nu, mu)]


def is_intertwiner(A: BasisedModule, B: BasisedModule, X: Matrix) -> bool:
    dom = A.dom
    return all(
        linalg.matmul(a, X, dom) == linalg.matmul(X, b, dom) for a, b in zip(A.gen_matrices(), B.gen_matrices())
    )


# -- the form on M^mu -------------------------------------------------------
def perm_form(factory: ModuleFactory, mu: Shape) -> Matrix:
    """<x, y>_mu in the basis m_mu g_d, from <m_St, m_mu n_{U. v}> = <m_St, n_{U. v}>."""
    Y, P = factory.Y, factory.perm(mu, "m")
    B1 = semistandard_basis(factory, mu)
    cn = factory.cn
    right = []
    for lam in cn.shapes:
        for U in combinat.column_semistandard(lam, mu):
            ud = combinat.s_dot(U, lam, mu)
            for v in cn.std[lam]:
                right.append((Y.m_elem(mu), cn.elem(ud, v)))
    if len(right) != P.dim or len(B1) != P.dim:
        raise DimensionMismatch("basis sizes differ from dim M^mu")
    G = [[Y.pairing(x, n_el) for _, n_el in right] for _, x in B1]
    P1 = coordinates(P, [x for _, x in B1])
    P2 = coordinates(P, [Y.mul(m, n_el) for m, n_el in right])
    dom = factory.dom
    return linalg.matmul(
        linalg.matmul(linalg.inverse(P1, dom), G, dom), linalg.transpose(linalg.inverse(P2, dom)), dom
    )


def is_associative_form(M: BasisedModule, F: Matrix) -> bool:
    """<x h, y> = <x, y h*> for generators h, i.e. rho(h) F = F rho(h)^T."""
    dom = M.dom
    return all(linalg.matmul(A, F, dom) == linalg.matmul(F, linalg.transpose(A), dom) for A in M.gen_matrices())
